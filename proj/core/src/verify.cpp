#include "jr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace jr {

dyn_bitset coverage(const approval_election& e, const candidate_set& w) {
    dyn_bitset covered(static_cast<std::size_t>(e.n()));
    for (candidate_id c : w) {
        if (c >= e.m()) throw std::out_of_range("candidate index >= m");
        covered |= e.supporters(c);
    }
    return covered;
}

int uncovered_supporters(const approval_election& e, const candidate_set& w,
                         candidate_id c) {
    if (c < 0 || c >= e.m()) throw std::out_of_range("candidate index out of range");
    dyn_bitset covered = coverage(e, w);
    return static_cast<int>(e.supporters(c).diff_count(covered));
}

bool is_justifying(const approval_election& e, const candidate_set& w) {
    dyn_bitset covered = coverage(e, w);
    for (int c = 0; c < e.m(); ++c) {
        if (static_cast<int>(e.supporters(c).diff_count(covered)) > e.ell())
            return false;
    }
    return true;
}

bool is_jr_committee(const approval_election& e, const candidate_set& w) {
    return static_cast<int>(w.size()) == e.k() && is_justifying(e, w);
}

namespace {

// Enumerates voter subsets of size exactly `need` and looks for one that is
// cohesive (common approved candidate) and entirely unrepresented by w.
// A violating group of any size >= need contains such a subset, since
// shrinking a cohesive group keeps it cohesive.
bool subset_witness_exists(const approval_election& e, const candidate_set& w,
                           int need) {
    int n = e.n();
    std::vector<bool> represented(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
        for (candidate_id c : e.ballot(i))
            if (w.contains(c)) {
                represented[static_cast<std::size_t>(i)] = true;
                break;
            }

    std::vector<int> pool;
    for (int i = 0; i < n; ++i)
        if (!represented[static_cast<std::size_t>(i)] && !e.ballot(i).empty())
            pool.push_back(i);
    if (static_cast<int>(pool.size()) < need) return false;

    std::vector<int> idx(static_cast<std::size_t>(need));
    for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        // intersect the chosen ballots
        std::vector<candidate_id> common = e.ballot(pool[static_cast<std::size_t>(idx[0])]);
        for (int j = 1; j < need && !common.empty(); ++j) {
            const auto& b = e.ballot(pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])]);
            std::vector<candidate_id> next;
            std::set_intersection(common.begin(), common.end(), b.begin(), b.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (!common.empty()) return true;

        int j = need - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] ==
                             static_cast<int>(pool.size()) - need + j)
            --j;
        if (j < 0) break;
        ++idx[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < need; ++t)
            idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
    }
    return false;
}

} // namespace

bool is_justifying_bruteforce(const approval_election& e, const candidate_set& w) {
    if (e.n() > 20)
        throw std::invalid_argument("is_justifying_bruteforce guard: n <= 20");

    int need = e.group_threshold();
    bool ok = true;
    for (int c = 0; c < e.m() && ok; ++c) {
        int count = 0;
        for (int i = 0; i < e.n(); ++i) {
            const auto& b = e.ballot(i);
            if (!std::binary_search(b.begin(), b.end(), c)) continue;
            bool covered = false;
            for (candidate_id x : b)
                if (w.contains(x)) {
                    covered = true;
                    break;
                }
            if (!covered) ++count;
        }
        if (count >= need) ok = false;
    }

    if (e.n() <= 12) {
        bool witness = subset_witness_exists(e, w, need);
        if (witness == ok)
            throw std::logic_error(
                "bruteforce self-check failed: per-candidate count and subset "
                "enumeration disagree");
    }
    return ok;
}

int threshold_tau(double p, int k) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::domain_error("threshold_tau requires 0 < p < 1");
    if (k < 1) throw std::domain_error("threshold_tau requires k >= 1");
    double kp = static_cast<double>(k) * p;
    if (kp <= 1.0) return 0;
    double raw = std::log(kp) / -std::log1p(-p);
    return std::max(0, static_cast<int>(std::ceil(raw)));
}

} // namespace jr
