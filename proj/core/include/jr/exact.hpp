#ifndef JR_EXACT_HPP
#define JR_EXACT_HPP

#include <cstdint>

#include "jr/election.hpp"

namespace jr {

// Raised when the branch-and-bound node budget runs out before the optimum is
// certified. Carries the best size known to be achievable (from the greedy
// upper bound or an incumbent), so callers never get an uncertified answer.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(std::size_t ub)
        : std::runtime_error("node budget exceeded; best known upper bound " +
                             std::to_string(ub)),
          best_upper_bound(ub) {}
    std::size_t best_upper_bound;
};

inline constexpr std::uint64_t default_node_budget = 50'000'000;

// Certified smallest justifying group via iterative-deepening search over
// candidate subsets in index order. A branch is pruned when
// (remaining depth) * (max marginal utility of any admissible candidate)
// cannot clear the residual potential.
candidate_set exact_min_justifying(const approval_election& e,
                                   std::uint64_t node_budget = default_node_budget);

// Independent oracle: enumerates candidate subsets in size-then-lexicographic
// order, returns the first justifying one. Guard: m <= 20.
candidate_set exact_min_bruteforce(const approval_election& e);

// Subset-enumeration routine: for every voter subset N', runs the covering
// greedy restricted to N' until all of N' is covered, and keeps the smallest
// result that is justifying for the full instance. Guard: n <= 18.
candidate_set quasi_poly_min(const approval_election& e);

// Number of size-k candidate subsets that are JR committees.
// Guard: C(m,k) <= 10^7.
long long count_jr_committees(const approval_election& e);

} // namespace jr

#endif
