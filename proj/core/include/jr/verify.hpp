#ifndef JR_VERIFY_HPP
#define JR_VERIFY_HPP

#include "jr/election.hpp"

namespace jr {

// Union of supporter sets over the members of w.
dyn_bitset coverage(const approval_election& e, const candidate_set& w);

// |{i : c in A_i and A_i ∩ w = ∅}|, the number of supporters of c that no
// member of w covers.
int uncovered_supporters(const approval_election& e, const candidate_set& w,
                         candidate_id c);

// True iff every candidate's uncovered supporter count is at most ell.
// This is the group-size-free JR criterion: a violating cohesive group of
// ceil(n/k) voters exists iff some candidate has more than ell uncovered
// supporters.
bool is_justifying(const approval_election& e, const candidate_set& w);

// True iff |w| == k and w is justifying.
bool is_jr_committee(const approval_election& e, const candidate_set& w);

// Verification oracle, independent of the bitset path: counts uncovered
// supporters directly from the ballots, and for n <= 12 additionally
// enumerates every voter subset of size exactly ceil(n/k) and checks the
// cohesive/unrepresented condition literally. Guard: n <= 20.
bool is_justifying_bruteforce(const approval_election& e, const candidate_set& w);

// Predicted minimal justifying group size under the IC model:
// max(0, ceil(-log_{1-p}(k*p))), the least s with p(1-p)^s < 1/k
// (clamped to 0 for k*p <= 1, where the empty group already suffices).
// Throws std::domain_error unless 0 < p < 1.
int threshold_tau(double p, int k);

} // namespace jr

#endif
