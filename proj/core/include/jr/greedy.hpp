#ifndef JR_GREEDY_HPP
#define JR_GREEDY_HPP

#include <vector>

#include "jr/election.hpp"

namespace jr {

enum class greedy_cc_mode {
    // Stop as soon as no candidate has more than ell uncovered supporters.
    stop_when_justifying,
    // Keep selecting the candidate with the most uncovered supporters until
    // k candidates are chosen or every voter with a non-empty ballot is
    // covered.
    run_to_k,
};

struct greedy_cc_step {
    candidate_id picked;
    int uncovered_before;   // uncovered supporter count of the pick
    dyn_bitset newly_covered;
};

struct greedy_cc_result {
    std::vector<greedy_cc_step> steps;
    candidate_set group() const;
};

// Covering greedy: repeatedly add the candidate approved by the most
// uncovered voters. Ties broken by lowest candidate index.
greedy_cc_result greedy_cc_trace(const approval_election& e, greedy_cc_mode mode);
candidate_set greedy_cc(const approval_election& e, greedy_cc_mode mode);

// Residual supporter sets B_c, shrunk as candidates are selected.
struct residual_state {
    std::vector<dyn_bitset> supporters;

    explicit residual_state(const approval_election& e);
    // B_x <- B_x \ B_c for every x.
    void select(candidate_id c);
};

// Candidate-covering potential: sum over candidates of
// max(0, |B_c \ covered| - ell).
long long potential(const approval_election& e, const dyn_bitset& covered);
long long potential(const residual_state& st, int ell);

// u_c = sum_{c'} ([|B_{c'}| - ell]_+ - [|B_{c'} \ B_c| - ell]_+), the potential
// drop realized by selecting c in the given residual state.
long long marginal_utility(const approval_election& e, const residual_state& st,
                           candidate_id c);

struct greedy_candidate_step {
    candidate_id picked;
    long long utility;    // u_{c*} at selection time
    long long psi_after;  // potential after the selection
};

struct greedy_candidate_result {
    long long psi_initial;
    std::vector<greedy_candidate_step> steps;
    candidate_set group() const;
};

// Potential-minimizing greedy: while some residual |B_c| exceeds ell, select
// the candidate of maximum marginal utility (ties to lowest index) and remove
// its supporters from every residual set.
greedy_candidate_result greedy_candidate_trace(const approval_election& e);
candidate_set greedy_candidate(const approval_election& e);

} // namespace jr

#endif
