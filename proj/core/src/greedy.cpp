#include "jr/greedy.hpp"

#include <algorithm>

namespace jr {

candidate_set greedy_cc_result::group() const {
    std::vector<candidate_id> picks;
    picks.reserve(steps.size());
    for (const auto& s : steps) picks.push_back(s.picked);
    return candidate_set(std::move(picks));
}

greedy_cc_result greedy_cc_trace(const approval_election& e, greedy_cc_mode mode) {
    greedy_cc_result result;
    dyn_bitset covered(static_cast<std::size_t>(e.n()));
    std::vector<bool> chosen(static_cast<std::size_t>(e.m()), false);

    while (true) {
        candidate_id best = -1;
        int best_count = 0;
        for (int c = 0; c < e.m(); ++c) {
            if (chosen[static_cast<std::size_t>(c)]) continue;
            int u = static_cast<int>(e.supporters(c).diff_count(covered));
            if (u > best_count) {
                best_count = u;
                best = c;
            }
        }

        if (mode == greedy_cc_mode::stop_when_justifying) {
            if (best_count <= e.ell()) break;
        } else {
            if (best_count == 0) break;
            if (static_cast<int>(result.steps.size()) >= e.k()) break;
        }

        dyn_bitset newly = e.supporters(best) - covered;
        covered |= e.supporters(best);
        chosen[static_cast<std::size_t>(best)] = true;
        result.steps.push_back({best, best_count, std::move(newly)});
    }
    return result;
}

candidate_set greedy_cc(const approval_election& e, greedy_cc_mode mode) {
    return greedy_cc_trace(e, mode).group();
}

residual_state::residual_state(const approval_election& e) {
    supporters.reserve(static_cast<std::size_t>(e.m()));
    for (int c = 0; c < e.m(); ++c) supporters.push_back(e.supporters(c));
}

void residual_state::select(candidate_id c) {
    dyn_bitset picked = supporters[static_cast<std::size_t>(c)];
    for (auto& b : supporters) b -= picked;
}

long long potential(const approval_election& e, const dyn_bitset& covered) {
    long long psi = 0;
    for (int c = 0; c < e.m(); ++c) {
        long long r = static_cast<long long>(e.supporters(c).diff_count(covered));
        if (r > e.ell()) psi += r - e.ell();
    }
    return psi;
}

long long potential(const residual_state& st, int ell) {
    long long psi = 0;
    for (const auto& b : st.supporters) {
        long long r = static_cast<long long>(b.count());
        if (r > ell) psi += r - ell;
    }
    return psi;
}

long long marginal_utility(const approval_election& e, const residual_state& st,
                           candidate_id c) {
    // [a - l]_+ - [a - x - l]_+ == min(x, a - l) whenever a > l, else 0,
    // where a = |B_{c'}| and x = |B_{c'} ∩ B_c|.
    const dyn_bitset& bc = st.supporters[static_cast<std::size_t>(c)];
    long long u = 0;
    for (const auto& other : st.supporters) {
        long long a = static_cast<long long>(other.count());
        if (a <= e.ell()) continue;
        long long x = static_cast<long long>(other.and_count(bc));
        u += std::min(x, a - e.ell());
    }
    return u;
}

candidate_set greedy_candidate_result::group() const {
    std::vector<candidate_id> picks;
    picks.reserve(steps.size());
    for (const auto& s : steps) picks.push_back(s.picked);
    return candidate_set(std::move(picks));
}

greedy_candidate_result greedy_candidate_trace(const approval_election& e) {
    greedy_candidate_result result;
    residual_state st(e);
    result.psi_initial = potential(st, e.ell());

    // cache residual sizes; they change only on select()
    auto deficient_exists = [&]() {
        for (const auto& b : st.supporters)
            if (static_cast<int>(b.count()) > e.ell()) return true;
        return false;
    };

    while (deficient_exists()) {
        candidate_id best = -1;
        long long best_u = -1;
        for (int c = 0; c < e.m(); ++c) {
            long long u = marginal_utility(e, st, c);
            if (u > best_u) {
                best_u = u;
                best = c;
            }
        }
        st.select(best);
        result.steps.push_back({best, best_u, potential(st, e.ell())});
    }
    return result;
}

candidate_set greedy_candidate(const approval_election& e) {
    return greedy_candidate_trace(e).group();
}

} // namespace jr
