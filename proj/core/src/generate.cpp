#include "jr/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace jr {

approval_election gen_ic(int n, int m, int k, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("gen_ic requires 0 <= p <= 1");
    split_mix64 rng(seed);
    std::vector<std::vector<candidate_id>> ballots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < m; ++c)
            if (rng.next_double() < p)
                ballots[static_cast<std::size_t>(i)].push_back(c);
    return approval_election(n, m, k, std::move(ballots));
}

std::pair<approval_election, interval_model>
gen_euclid1d(int n, int m, int k, double r, std::uint64_t seed) {
    if (!(r >= 0.0)) throw std::domain_error("gen_euclid1d requires r >= 0");
    split_mix64 rng(seed);
    interval_model iv;
    iv.voters.reserve(static_cast<std::size_t>(n));
    iv.candidates.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) iv.voters.push_back({rng.next_double(), r / 2});
    for (int c = 0; c < m; ++c) iv.candidates.push_back({rng.next_double(), r / 2});

    std::vector<std::vector<candidate_id>> ballots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double xv = iv.voters[static_cast<std::size_t>(i)].center;
        for (int c = 0; c < m; ++c) {
            double xc = iv.candidates[static_cast<std::size_t>(c)].center;
            if (std::abs(xv - xc) <= r)
                ballots[static_cast<std::size_t>(i)].push_back(c);
        }
    }
    return {approval_election(n, m, k, std::move(ballots)), std::move(iv)};
}

approval_election gen_euclid2d(int n, int m, int k, double r, std::uint64_t seed) {
    if (!(r >= 0.0)) throw std::domain_error("gen_euclid2d requires r >= 0");
    split_mix64 rng(seed);
    std::vector<std::pair<double, double>> pts(static_cast<std::size_t>(n + m));
    for (auto& pt : pts) {
        pt.first = rng.next_double();
        pt.second = rng.next_double();
    }
    double r2 = r * r;
    std::vector<std::vector<candidate_id>> ballots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int c = 0; c < m; ++c) {
            double dx = pts[static_cast<std::size_t>(i)].first -
                        pts[static_cast<std::size_t>(n + c)].first;
            double dy = pts[static_cast<std::size_t>(i)].second -
                        pts[static_cast<std::size_t>(n + c)].second;
            if (dx * dx + dy * dy <= r2)
                ballots[static_cast<std::size_t>(i)].push_back(c);
        }
    }
    return approval_election(n, m, k, std::move(ballots));
}

approval_election fixture_example1(int k, int m, int block) {
    if (k < 1 || m < k || block < 1)
        throw std::invalid_argument("fixture_example1 requires 1 <= k <= m, block >= 1");
    int n = block * k;
    std::vector<std::vector<candidate_id>> ballots;
    ballots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < k - 1; ++j)
        for (int i = 0; i < block; ++i)
            ballots.push_back({j});
    std::vector<candidate_id> tail;
    for (int c = k - 1; c < m; ++c) tail.push_back(c);
    for (int i = 0; i < block; ++i) ballots.push_back(tail);
    return approval_election(n, m, k, std::move(ballots));
}

approval_election fixture_example2(int k) {
    if (k < 3) throw std::invalid_argument("fixture_example2 requires k >= 3");
    int n = k * k, m = 2 * k;
    std::vector<std::vector<candidate_id>> ballots;
    ballots.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < k - 1; ++j)
        for (int i = 0; i < k - 1; ++i)
            ballots.push_back({j});
    for (int j = 0; j < k - 1; ++j)
        ballots.push_back({j, k - 1});
    for (int j = 0; j < k; ++j)
        ballots.push_back({k + j});
    return approval_election(n, m, k, std::move(ballots));
}

std::pair<approval_election, gender_assignment> fixture_example3(int n_even) {
    if (n_even < 2 || n_even % 2 != 0)
        throw std::invalid_argument("fixture_example3 requires even n >= 2");
    int n = n_even, k = n_even, m = 2 * (n_even - 1);
    std::vector<std::vector<candidate_id>> ballots;
    ballots.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n - 1; ++i) ballots.push_back({i});
    std::vector<candidate_id> females;
    for (int c = n - 1; c < m; ++c) females.push_back(c);
    ballots.push_back(std::move(females));

    gender_assignment g;
    g.labels.assign(static_cast<std::size_t>(m), gender::female);
    for (int c = 0; c < n - 1; ++c)
        g.labels[static_cast<std::size_t>(c)] = gender::male;
    approval_election e(n, m, k, std::move(ballots), g);
    return {std::move(e), std::move(g)};
}

double avg_approvals(const approval_election& e) {
    long long total = 0;
    for (int i = 0; i < e.n(); ++i)
        total += static_cast<long long>(e.ballot(i).size());
    return static_cast<double>(total) / e.n();
}

candidate_set sample_candidate_set(int m, int s, split_mix64& rng) {
    if (s < 0 || s > m)
        throw std::invalid_argument("sample size must be within [0, m]");
    std::vector<candidate_id> idx(static_cast<std::size_t>(m));
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < s; ++i) {
        std::size_t j = static_cast<std::size_t>(i) +
                        rng.next_below(static_cast<std::uint64_t>(m - i));
        std::swap(idx[static_cast<std::size_t>(i)], idx[j]);
    }
    idx.resize(static_cast<std::size_t>(s));
    return candidate_set(std::move(idx));
}

} // namespace jr
