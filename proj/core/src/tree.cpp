#include "jr/tree.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace jr {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

bool skippable(std::string_view s) {
    std::size_t i = s.find_first_not_of(" \t\r");
    return i == std::string_view::npos || s[i] == '#';
}

template <typename T>
std::vector<T> parse_numbers(std::string_view s, int line_no, const char* what) {
    std::vector<T> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
            ++i;
            continue;
        }
        T v{};
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc{}) throw parse_error(line_no, std::string("expected ") + what);
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

} // namespace

int rooted_candidate_tree::root() const {
    int r = -1;
    for (int c = 0; c < size(); ++c) {
        if (parent[static_cast<std::size_t>(c)] == -1) {
            if (r != -1) throw std::invalid_argument("tree has multiple roots");
            r = c;
        }
    }
    if (r == -1) throw std::invalid_argument("tree has no root");
    return r;
}

std::vector<int> rooted_candidate_tree::depths() const {
    int m = size();
    std::vector<int> depth(static_cast<std::size_t>(m), -1);
    for (int c = 0; c < m; ++c) {
        // walk up, memoizing; more than m steps means a cycle
        std::vector<int> chain;
        int v = c, steps = 0;
        while (v != -1 && depth[static_cast<std::size_t>(v)] == -1) {
            chain.push_back(v);
            v = parent[static_cast<std::size_t>(v)];
            if (++steps > m) throw std::invalid_argument("tree has a parent cycle");
        }
        int base = (v == -1) ? -1 : depth[static_cast<std::size_t>(v)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[static_cast<std::size_t>(*it)] = ++base;
    }
    return depth;
}

void rooted_candidate_tree::validate() const {
    if (parent.empty()) throw std::invalid_argument("empty tree");
    for (int p : parent)
        if (p < -1 || p >= size())
            throw std::invalid_argument("parent index out of range");
    (void)root();
    (void)depths();
}

rooted_candidate_tree parse_tree(std::string_view text) {
    auto lines = split_lines(text);
    int m = -1;
    std::vector<int> parent;
    std::vector<bool> seen;
    int rows = 0;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        if (skippable(lines[li])) continue;
        auto vals = parse_numbers<long long>(lines[li], line_no, "integer");
        if (m < 0) {
            if (vals.size() != 1 || vals[0] < 1 || vals[0] > 1'000'000)
                throw parse_error(line_no, "expected candidate count m");
            m = static_cast<int>(vals[0]);
            parent.assign(static_cast<std::size_t>(m), -2);
            seen.assign(static_cast<std::size_t>(m), false);
            continue;
        }
        if (rows >= m) throw parse_error(line_no, "unexpected extra tree row");
        if (vals.size() != 2) throw parse_error(line_no, "expected 'child parent'");
        long long child = vals[0], par = vals[1];
        if (child < 0 || child >= m) throw parse_error(line_no, "child index out of range");
        if (par < -1 || par >= m) throw parse_error(line_no, "parent index out of range");
        if (seen[static_cast<std::size_t>(child)])
            throw parse_error(line_no, "duplicate child row");
        seen[static_cast<std::size_t>(child)] = true;
        parent[static_cast<std::size_t>(child)] = static_cast<int>(par);
        ++rows;
    }
    if (m < 0) throw parse_error(1, "missing candidate count");
    if (rows < m)
        throw parse_error(static_cast<int>(lines.size()) + 1,
                          "expected " + std::to_string(m) + " tree rows");

    rooted_candidate_tree t{std::move(parent)};
    t.validate();
    return t;
}

std::string serialize_tree(const rooted_candidate_tree& t) {
    std::ostringstream os;
    os << t.size() << '\n';
    for (int c = 0; c < t.size(); ++c)
        os << c << ' ' << t.parent[static_cast<std::size_t>(c)] << '\n';
    return os.str();
}

interval_model parse_interval_model(std::string_view text) {
    auto lines = split_lines(text);
    int n = -1, m = -1, rows = 0;
    interval_model iv;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        if (skippable(lines[li])) continue;
        if (n < 0) {
            auto vals = parse_numbers<long long>(lines[li], line_no, "integer");
            if (vals.size() != 2 || vals[0] < 1 || vals[1] < 1)
                throw parse_error(line_no, "expected header 'n m'");
            n = static_cast<int>(vals[0]);
            m = static_cast<int>(vals[1]);
            iv.voters.reserve(static_cast<std::size_t>(n));
            iv.candidates.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (rows >= n + m) throw parse_error(line_no, "unexpected extra agent row");
        auto vals = parse_numbers<double>(lines[li], line_no, "decimal");
        if (vals.size() != 2) throw parse_error(line_no, "expected 'center radius'");
        if (vals[1] < 0) throw parse_error(line_no, "radius must be non-negative");
        interval_model::agent a{vals[0], vals[1]};
        if (rows < n)
            iv.voters.push_back(a);
        else
            iv.candidates.push_back(a);
        ++rows;
    }
    if (n < 0) throw parse_error(1, "missing header 'n m'");
    if (rows < n + m)
        throw parse_error(static_cast<int>(lines.size()) + 1,
                          "expected " + std::to_string(n + m) + " agent rows");
    return iv;
}

std::string serialize_interval_model(const interval_model& iv) {
    std::ostringstream os;
    os << iv.voters.size() << ' ' << iv.candidates.size() << '\n';
    char buf[64];
    auto emit = [&](const interval_model::agent& a) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", a.center, a.radius);
        os << buf << '\n';
    };
    for (const auto& a : iv.voters) emit(a);
    for (const auto& a : iv.candidates) emit(a);
    return os.str();
}

bool validate_tree_representation(const approval_election& e,
                                  const rooted_candidate_tree& t) {
    if (t.size() != e.m())
        throw std::invalid_argument("tree candidate count does not match election");
    t.validate();

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(e.m()));
    for (int c = 0; c < e.m(); ++c) {
        int p = t.parent[static_cast<std::size_t>(c)];
        if (p >= 0) {
            adj[static_cast<std::size_t>(c)].push_back(p);
            adj[static_cast<std::size_t>(p)].push_back(c);
        }
    }

    for (int i = 0; i < e.n(); ++i) {
        const auto& b = e.ballot(i);
        if (b.empty()) continue;
        dyn_bitset in_ballot(static_cast<std::size_t>(e.m()));
        for (candidate_id c : b) in_ballot.set(static_cast<std::size_t>(c));

        // BFS within the induced subgraph
        std::vector<int> queue{b.front()};
        dyn_bitset visited(static_cast<std::size_t>(e.m()));
        visited.set(static_cast<std::size_t>(b.front()));
        std::size_t reached = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (in_ballot.test(static_cast<std::size_t>(u)) &&
                    !visited.test(static_cast<std::size_t>(u))) {
                    visited.set(static_cast<std::size_t>(u));
                    queue.push_back(u);
                    ++reached;
                }
            }
        }
        if (reached != b.size()) return false;
    }
    return true;
}

candidate_set solve_on_tree(const approval_election& e,
                            const rooted_candidate_tree& t) {
    if (!validate_tree_representation(e, t))
        throw std::invalid_argument("ballots do not form subtrees of the tree");

    int m = e.m(), n = e.n();
    std::vector<int> depth = t.depths();

    // subtree membership masks over candidates, from the original tree
    std::vector<dyn_bitset> subtree(static_cast<std::size_t>(m),
                                    dyn_bitset(static_cast<std::size_t>(m)));
    for (int c = 0; c < m; ++c) {
        int v = c;
        while (v != -1) {
            subtree[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(c));
            v = t.parent[static_cast<std::size_t>(v)];
        }
    }

    std::vector<dyn_bitset> ballot_mask(static_cast<std::size_t>(n),
                                        dyn_bitset(static_cast<std::size_t>(m)));
    for (int i = 0; i < n; ++i)
        for (candidate_id c : e.ballot(i))
            ballot_mask[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(c));

    dyn_bitset alive_cand(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) alive_cand.set(static_cast<std::size_t>(c));
    std::vector<bool> alive_voter(static_cast<std::size_t>(n), true);
    dyn_bitset selected(static_cast<std::size_t>(m));

    std::vector<int> order(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) order[static_cast<std::size_t>(c)] = c;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = depth[static_cast<std::size_t>(a)], db = depth[static_cast<std::size_t>(b)];
        return da != db ? da > db : a < b;
    });

    const int need = e.group_threshold();
    std::vector<candidate_id> picks;
    std::vector<int> witness_count(static_cast<std::size_t>(m));

    while (true) {
        int chosen = -1;
        for (int v : order) {
            if (!alive_cand.test(static_cast<std::size_t>(v))) continue;
            dyn_bitset sub = subtree[static_cast<std::size_t>(v)] & alive_cand;

            std::fill(witness_count.begin(), witness_count.end(), 0);
            bool qualifies = false;
            for (int i = 0; i < n && !qualifies; ++i) {
                if (!alive_voter[static_cast<std::size_t>(i)]) continue;
                const auto& bm = ballot_mask[static_cast<std::size_t>(i)];
                if (bm.none() || !bm.is_subset_of(sub)) continue;
                for (candidate_id c : e.ballot(i))
                    if (++witness_count[static_cast<std::size_t>(c)] >= need) {
                        qualifies = true;
                        break;
                    }
            }
            if (qualifies) {
                chosen = v;
                break;
            }
        }
        if (chosen < 0) break;

        dyn_bitset sub = subtree[static_cast<std::size_t>(chosen)] & alive_cand;
        picks.push_back(chosen);
        selected.set(static_cast<std::size_t>(chosen));
        for (int i = 0; i < n; ++i) {
            if (alive_voter[static_cast<std::size_t>(i)] &&
                ballot_mask[static_cast<std::size_t>(i)].intersects(sub))
                alive_voter[static_cast<std::size_t>(i)] = false;
        }
        alive_cand -= sub;

        // Deleted-or-untouched-or-represented trichotomy; a violation means
        // the instance was not a valid tree representation after all.
        for (int i = 0; i < n; ++i) {
            const auto& bm = ballot_mask[static_cast<std::size_t>(i)];
            if (bm.none()) continue;
            bool inside = bm.diff_count(alive_cand) == bm.count();
            bool untouched = bm.is_subset_of(alive_cand);
            bool represented = bm.intersects(selected);
            if (!inside && !untouched && !represented)
                throw std::logic_error("tree solver invariant violated");
        }
    }
    return candidate_set(std::move(picks));
}

namespace {

// J_a nested in J_b: containment with at least one strict inequality.
bool nested_in(const interval_model::agent& a, const interval_model::agent& b) {
    return b.lo() <= a.lo() && a.hi() <= b.hi() &&
           (b.lo() < a.lo() || a.hi() < b.hi());
}

} // namespace

rooted_candidate_tree vcr_to_tree(const interval_model& iv) {
    const auto& cand = iv.candidates;
    int m = static_cast<int>(cand.size());
    if (m == 0) throw std::invalid_argument("interval model has no candidates");

    std::vector<bool> in_tree(static_cast<std::size_t>(m), false);
    std::vector<int> level(static_cast<std::size_t>(m), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));

    // level-0 path: candidates whose interval is nested in nobody's
    std::vector<int> path;
    for (int c = 0; c < m; ++c) {
        bool nested = false;
        for (int d = 0; d < m && !nested; ++d)
            if (d != c && nested_in(cand[static_cast<std::size_t>(c)],
                                    cand[static_cast<std::size_t>(d)]))
                nested = true;
        if (!nested) path.push_back(c);
    }
    std::sort(path.begin(), path.end(), [&](int a, int b) {
        const auto &ia = cand[static_cast<std::size_t>(a)], &ib = cand[static_cast<std::size_t>(b)];
        if (ia.lo() != ib.lo()) return ia.lo() < ib.lo();
        if (ia.hi() != ib.hi()) return ia.hi() < ib.hi();
        return a < b;
    });
    for (std::size_t i = 0; i < path.size(); ++i) {
        in_tree[static_cast<std::size_t>(path[i])] = true;
        level[static_cast<std::size_t>(path[i])] = 0;
        if (i > 0) {
            adj[static_cast<std::size_t>(path[i - 1])].push_back(path[i]);
            adj[static_cast<std::size_t>(path[i])].push_back(path[i - 1]);
        }
    }

    // attach the rest, non-nested within the remainder first
    std::vector<int> remaining;
    for (int c = 0; c < m; ++c)
        if (!in_tree[static_cast<std::size_t>(c)]) remaining.push_back(c);

    while (!remaining.empty()) {
        std::vector<int> batch, rest;
        for (int c : remaining) {
            bool nested = false;
            for (int d : remaining)
                if (d != c && nested_in(cand[static_cast<std::size_t>(c)],
                                        cand[static_cast<std::size_t>(d)])) {
                    nested = true;
                    break;
                }
            (nested ? rest : batch).push_back(c);
        }
        for (int c : batch) {
            int target = -1;
            for (int d = 0; d < m; ++d) {
                if (!in_tree[static_cast<std::size_t>(d)]) continue;
                if (!nested_in(cand[static_cast<std::size_t>(c)],
                               cand[static_cast<std::size_t>(d)]))
                    continue;
                if (target < 0 || level[static_cast<std::size_t>(d)] >
                                      level[static_cast<std::size_t>(target)])
                    target = d;
            }
            if (target < 0)
                throw std::logic_error("no containing node for nested interval");
            adj[static_cast<std::size_t>(c)].push_back(target);
            adj[static_cast<std::size_t>(target)].push_back(c);
            in_tree[static_cast<std::size_t>(c)] = true;
            level[static_cast<std::size_t>(c)] = level[static_cast<std::size_t>(target)] + 1;
        }
        remaining = std::move(rest);
    }

    // orient from the lowest-index level-0 candidate
    int root = *std::min_element(path.begin(), path.end());
    std::vector<int> parent(static_cast<std::size_t>(m), -2);
    parent[static_cast<std::size_t>(root)] = -1;
    std::vector<int> queue{root};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (parent[static_cast<std::size_t>(u)] == -2) {
                parent[static_cast<std::size_t>(u)] = v;
                queue.push_back(u);
            }
    }

    rooted_candidate_tree t{std::move(parent)};
    t.validate();
    return t;
}

approval_election vcr_election(const interval_model& iv, int k) {
    int n = static_cast<int>(iv.voters.size());
    int m = static_cast<int>(iv.candidates.size());
    std::vector<std::vector<candidate_id>> ballots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& v = iv.voters[static_cast<std::size_t>(i)];
        for (int c = 0; c < m; ++c) {
            const auto& a = iv.candidates[static_cast<std::size_t>(c)];
            if (a.lo() <= v.hi() && v.lo() <= a.hi())
                ballots[static_cast<std::size_t>(i)].push_back(c);
        }
    }
    return approval_election(n, m, k, std::move(ballots));
}

} // namespace jr
