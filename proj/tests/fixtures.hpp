#ifndef JR_TESTS_FIXTURES_HPP
#define JR_TESTS_FIXTURES_HPP

#include "jr/election.hpp"
#include "jr/rng.hpp"

namespace jr::testing {

// Star instance: a approved by everyone, b/c/d each shared with one voter.
inline approval_election star_election(int k = 4) {
    return approval_election(4, 4, k,
                             {{0, 1, 2, 3}, {0, 1}, {0, 2}, {0, 3}});
}

inline const char* star_election_text =
    "4 4 4\n"
    "0 1 2 3\n"
    "0 1\n"
    "0 2\n"
    "0 3\n";

// Small random election for oracle sweeps; ballots are independent coin
// flips, so empty ballots and unapproved candidates both occur.
inline approval_election random_election(split_mix64& rng, int max_n = 12,
                                         int max_m = 8) {
    int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n)));
    int m = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_m)));
    int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));
    double p = 0.1 + 0.6 * rng.next_double();
    std::vector<std::vector<candidate_id>> ballots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c)
            if (rng.next_double() < p) ballots[static_cast<std::size_t>(i)].push_back(c);
    return approval_election(n, m, k, std::move(ballots));
}

inline candidate_set random_subset(split_mix64& rng, int m) {
    std::vector<candidate_id> members;
    for (int c = 0; c < m; ++c)
        if (rng.next_double() < 0.4) members.push_back(c);
    return candidate_set(std::move(members));
}

} // namespace jr::testing

#endif
