#ifndef JR_GENERATE_HPP
#define JR_GENERATE_HPP

#include <cstdint>
#include <utility>

#include "jr/election.hpp"
#include "jr/rng.hpp"
#include "jr/tree.hpp"

namespace jr {

// Impartial culture: each voter approves each candidate independently with
// probability p. Draws are voter-major, candidate-minor from the seeded
// stream, so the outcome is a pure function of (n, m, p, seed).
approval_election gen_ic(int n, int m, int k, double p, std::uint64_t seed);

// 1-D Euclidean: agents at uniform points in [0,1] (voters first), approval
// iff |x_v - x_c| <= r. The emitted interval model gives every agent radius
// r/2, so interval intersection reproduces the approval rule exactly.
std::pair<approval_election, interval_model>
gen_euclid1d(int n, int m, int k, double r, std::uint64_t seed);

// 2-D Euclidean on the unit square; approval iff squared distance <= r^2.
approval_election gen_euclid2d(int n, int m, int k, double r, std::uint64_t seed);

// Worst-case instance with exactly m-k+1 JR committees: k-1 singleton blocks
// of `block` voters on c_0..c_{k-2}, and a last block approving all of
// c_{k-1}..c_{m-1}.
approval_election fixture_example1(int k, int m, int block);

// The greedy-adversarial instance (n = k^2, m = 2k, k >= 3): the covering
// greedy picks k-1 candidates while the singleton {c_{k-1}} already justifies.
approval_election fixture_example2(int k);

// Gender-tension instance with n = k even: voters 0..n-2 approve one male
// candidate each; voter n-1 approves the n-1 female candidates.
std::pair<approval_election, gender_assignment> fixture_example3(int n_even);

// Mean ballot size.
double avg_approvals(const approval_election& e);

// Uniformly random size-s candidate subset drawn from the stream.
candidate_set sample_candidate_set(int m, int s, split_mix64& rng);

} // namespace jr

#endif
