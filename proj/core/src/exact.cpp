#include "jr/exact.hpp"

#include <algorithm>
#include <optional>

#include "jr/greedy.hpp"
#include "jr/verify.hpp"

namespace jr {

namespace {

struct bb_search {
    const approval_election& e;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::size_t greedy_ub;

    // Scratch for the current path.
    std::vector<candidate_id> path;

    bb_search(const approval_election& el, std::uint64_t b, std::size_t ub)
        : e(el), budget(b), greedy_ub(ub) {}

    void count_node() {
        if (++nodes > budget) throw budget_exceeded(greedy_ub);
    }

    // Depth-limited DFS from candidate index `start` with `depth_left` picks
    // remaining. Returns true when the current coverage was extended to a
    // justifying group; `path` then holds the picks.
    bool dfs(int start, int depth_left, const dyn_bitset& covered) {
        count_node();

        // residual deficiency
        long long psi = 0;
        std::vector<long long> resid(static_cast<std::size_t>(e.m()));
        for (int c = 0; c < e.m(); ++c) {
            long long r =
                static_cast<long long>(e.supporters(c).diff_count(covered));
            resid[static_cast<std::size_t>(c)] = r;
            if (r > e.ell()) psi += r - e.ell();
        }
        if (psi == 0) return true;
        if (depth_left == 0) return false;

        // u_c over admissible candidates (index >= start); a candidate whose
        // supporters miss every deficient residual set stays useless forever
        // along this branch, so u_c == 0 prunes it outright.
        std::vector<long long> utility(static_cast<std::size_t>(e.m()) -
                                           static_cast<std::size_t>(start),
                                       0);
        long long max_u = 0;
        for (int cp = 0; cp < e.m(); ++cp) {
            long long excess = resid[static_cast<std::size_t>(cp)] - e.ell();
            if (excess <= 0) continue;
            const dyn_bitset& bcp = e.supporters(cp);
            for (int c = start; c < e.m(); ++c) {
                long long x = static_cast<long long>(
                    bcp.diff_and_count(covered, e.supporters(c)));
                utility[static_cast<std::size_t>(c - start)] += std::min(x, excess);
            }
        }
        for (long long u : utility) max_u = std::max(max_u, u);
        if (max_u * depth_left < psi) return false;

        for (int c = start; c < e.m(); ++c) {
            if (utility[static_cast<std::size_t>(c - start)] == 0) continue;
            path.push_back(c);
            if (dfs(c + 1, depth_left - 1, covered | e.supporters(c))) return true;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

candidate_set exact_min_justifying(const approval_election& e,
                                   std::uint64_t node_budget) {
    candidate_set cc = greedy_cc(e, greedy_cc_mode::stop_when_justifying);
    candidate_set gc = greedy_candidate(e);
    const candidate_set& ub_group = gc.size() <= cc.size() ? gc : cc;

    bb_search search(e, node_budget, ub_group.size());
    dyn_bitset empty_cover(static_cast<std::size_t>(e.n()));
    for (int depth = 0; depth < static_cast<int>(ub_group.size()); ++depth) {
        search.path.clear();
        if (search.dfs(0, depth, empty_cover))
            return candidate_set(search.path);
    }
    // No strictly smaller group exists; the greedy bound is optimal.
    return ub_group;
}

candidate_set exact_min_bruteforce(const approval_election& e) {
    if (e.m() > 20)
        throw std::invalid_argument("exact_min_bruteforce guard: m <= 20");

    int m = e.m();
    for (int sz = 0; sz <= m; ++sz) {
        std::vector<candidate_id> idx(static_cast<std::size_t>(sz));
        for (int i = 0; i < sz; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            candidate_set w{std::vector<candidate_id>(idx)};
            if (is_justifying(e, w)) return w;
            int j = sz - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - sz + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int t = j + 1; t < sz; ++t)
                idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
    }
    // unreachable: the full candidate set is always justifying
    throw std::logic_error("no justifying subset found");
}

candidate_set quasi_poly_min(const approval_election& e) {
    if (e.n() > 18)
        throw std::invalid_argument("quasi_poly_min guard: n <= 18");

    int n = e.n();
    std::optional<candidate_set> best;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        dyn_bitset uncovered(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) uncovered.set(static_cast<std::size_t>(i));

        std::vector<candidate_id> picks;
        while (uncovered.any()) {
            candidate_id bc = -1;
            std::size_t bcount = 0;
            for (int c = 0; c < e.m(); ++c) {
                std::size_t cover = e.supporters(c).and_count(uncovered);
                if (cover > bcount) {
                    bcount = cover;
                    bc = c;
                }
            }
            if (bc < 0) break; // leftover voters approve nobody
            picks.push_back(bc);
            uncovered -= e.supporters(bc);
        }

        if (best && picks.size() >= best->size()) continue;
        candidate_set w(std::move(picks));
        if (is_justifying(e, w)) best = std::move(w);
    }
    // mask == 0 yields the empty group, which is justifying whenever nothing
    // is deficient; otherwise the all-voters mask yields a justifying cover.
    return *best;
}

namespace {

long long binomial_capped(int m, int k, long long cap) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (m - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

void count_committees_rec(const approval_election& e, int next, int left,
                          const dyn_bitset& covered, long long& count) {
    if (left == 0) {
        for (int c = 0; c < e.m(); ++c)
            if (static_cast<int>(e.supporters(c).diff_count(covered)) > e.ell())
                return;
        ++count;
        return;
    }
    for (int c = next; c <= e.m() - left; ++c)
        count_committees_rec(e, c + 1, left - 1, covered | e.supporters(c), count);
}

} // namespace

long long count_jr_committees(const approval_election& e) {
    if (binomial_capped(e.m(), e.k(), 10'000'000) > 10'000'000)
        throw std::invalid_argument("count_jr_committees guard: C(m,k) <= 1e7");

    long long count = 0;
    dyn_bitset covered(static_cast<std::size_t>(e.n()));
    count_committees_rec(e, 0, e.k(), covered, count);
    return count;
}

} // namespace jr
