#ifndef JR_COMMITTEE_HPP
#define JR_COMMITTEE_HPP

#include <vector>

#include "jr/election.hpp"

namespace jr {

enum class fill_policy {
    lowest_index,
    // Fill free slots to minimize the final gender imbalance given the
    // group's composition and per-gender candidate availability.
    gender_balance,
};

// Extends a justifying group g (|g| <= k) to a size-k JR committee.
// gender_balance requires a gender assignment; throws std::invalid_argument
// on precondition violations.
candidate_set extend_to_committee(const approval_election& e,
                                  const candidate_set& g, fill_policy policy,
                                  const gender_assignment* genders = nullptr);

// |#male - #female| within w; 0 means gender-balanced.
int imbalance(const candidate_set& w, const gender_assignment& genders);

// At least m-k+1 pairwise-distinct JR committees, built from the (k-1)-step
// covering-greedy prefix: if the prefix is justifying, pair it with each
// remaining candidate; otherwise the greedy trace yields k disjoint blocks of
// n/k voters with block candidates c_1..c_k, and each outside candidate is
// combined with the block candidates minus one block it touches.
// Pre: every candidate approved by at least one voter; throws otherwise.
std::vector<candidate_set> jr_committees_constructive(const approval_election& e);

// A JR committee with at least one member of each gender, built from the same
// greedy prefix: extend with the missing gender when the prefix justifies, or
// swap one block candidate for an approved candidate of the missing gender.
// Pre: k >= 2 and, for each gender, some candidate of that gender is approved
// by at least one voter; throws otherwise.
candidate_set committee_both_genders(const approval_election& e,
                                     const gender_assignment& genders);

// JR committee heuristically minimizing gender imbalance: take the smaller of
// the two greedy justifying groups (GreedyCandidate on ties) and fill the free
// slots with the balancing gender mix.
candidate_set min_imbalance_heuristic(const approval_election& e,
                                      const gender_assignment& genders);

} // namespace jr

#endif
