#include "jr/committee.hpp"

#include <algorithm>

#include "jr/greedy.hpp"
#include "jr/verify.hpp"

namespace jr {

namespace {

// Lowest-index candidates outside w, optionally filtered by gender.
std::vector<candidate_id> available(const approval_election& e,
                                    const candidate_set& w,
                                    const gender_assignment* genders = nullptr,
                                    gender want = gender::male) {
    std::vector<candidate_id> out;
    for (int c = 0; c < e.m(); ++c) {
        if (w.contains(c)) continue;
        if (genders && genders->of(c) != want) continue;
        out.push_back(c);
    }
    return out;
}

} // namespace

candidate_set extend_to_committee(const approval_election& e,
                                  const candidate_set& g, fill_policy policy,
                                  const gender_assignment* genders) {
    if (static_cast<int>(g.size()) > e.k())
        throw std::invalid_argument("group larger than committee size k");
    if (!is_justifying(e, g))
        throw std::invalid_argument("group is not justifying");

    int free_slots = e.k() - static_cast<int>(g.size());
    if (free_slots == 0) return g;

    candidate_set w = g;
    if (policy == fill_policy::lowest_index) {
        for (candidate_id c : available(e, g)) {
            if (free_slots == 0) break;
            w.insert(c);
            --free_slots;
        }
        return w;
    }

    if (!genders)
        throw std::invalid_argument("gender_balance fill requires an assignment");

    int males_in = 0, females_in = 0;
    for (candidate_id c : g)
        (genders->of(c) == gender::male ? males_in : females_in) += 1;

    auto males_out = available(e, g, genders, gender::male);
    auto females_out = available(e, g, genders, gender::female);

    // choose x male fills (and free_slots - x female) minimizing
    // |males_in + x - females_in - (free_slots - x)|
    int lo = std::max(0, free_slots - static_cast<int>(females_out.size()));
    int hi = std::min(free_slots, static_cast<int>(males_out.size()));
    if (lo > hi)
        throw std::invalid_argument("not enough candidates to fill the committee");
    int best_x = lo;
    int best_imb = std::abs(males_in + lo - females_in - (free_slots - lo));
    for (int x = lo + 1; x <= hi; ++x) {
        int imb = std::abs(males_in + x - females_in - (free_slots - x));
        if (imb < best_imb) {
            best_imb = imb;
            best_x = x;
        }
    }

    for (int i = 0; i < best_x; ++i) w.insert(males_out[static_cast<std::size_t>(i)]);
    for (int i = 0; i < free_slots - best_x; ++i)
        w.insert(females_out[static_cast<std::size_t>(i)]);
    return w;
}

int imbalance(const candidate_set& w, const gender_assignment& genders) {
    int males = 0, females = 0;
    for (candidate_id c : w)
        (genders.of(c) == gender::male ? males : females) += 1;
    return std::abs(males - females);
}

namespace {

struct greedy_blocks {
    // k-1 prefix picks padded to size k-1 with lowest-index candidates
    candidate_set prefix;
    bool prefix_justifying;
    // set only when !prefix_justifying:
    std::vector<candidate_id> block_candidates;   // c_1..c_k
    std::vector<int> voter_block;                 // voter -> block index
};

// Runs the covering greedy for k-1 steps (plus the k-th when needed) and
// re-derives the disjoint voter blocks the constructions rely on. Errors
// loudly if the trace contradicts the shape the analysis establishes.
greedy_blocks derive_blocks(const approval_election& e) {
    greedy_blocks out;
    auto trace = greedy_cc_trace(e, greedy_cc_mode::run_to_k);

    std::vector<candidate_id> prefix_picks;
    for (std::size_t i = 0; i < trace.steps.size() && i + 1 < static_cast<std::size_t>(e.k());
         ++i)
        prefix_picks.push_back(trace.steps[i].picked);
    candidate_set prefix(prefix_picks);
    while (static_cast<int>(prefix.size()) < e.k() - 1) {
        for (int c = 0; c < e.m(); ++c)
            if (!prefix.contains(c)) {
                prefix.insert(c);
                break;
            }
    }
    out.prefix = prefix;
    out.prefix_justifying = is_justifying(e, prefix);
    if (out.prefix_justifying) return out;

    // Non-justifying prefix forces the rigid block structure: n divisible by
    // k, every pick covering exactly n/k fresh voters, and the k-th pick
    // covering the rest.
    if (e.n() % e.k() != 0)
        throw std::logic_error("greedy trace shape: n not divisible by k");
    int block_size = e.n() / e.k();
    if (static_cast<int>(trace.steps.size()) < e.k())
        throw std::logic_error("greedy trace shape: fewer than k steps");

    out.voter_block.assign(static_cast<std::size_t>(e.n()), -1);
    for (int j = 0; j < e.k(); ++j) {
        const auto& step = trace.steps[static_cast<std::size_t>(j)];
        if (static_cast<int>(step.newly_covered.count()) != block_size)
            throw std::logic_error("greedy trace shape: block size mismatch");
        out.block_candidates.push_back(step.picked);
        step.newly_covered.for_each_set([&](std::size_t v) {
            out.voter_block[v] = j;
        });
    }
    return out;
}

} // namespace

std::vector<candidate_set> jr_committees_constructive(const approval_election& e) {
    for (int c = 0; c < e.m(); ++c)
        if (e.supporters(c).none())
            throw std::invalid_argument("candidate " + std::to_string(c) +
                                        " is approved by no voter");

    greedy_blocks blocks = derive_blocks(e);
    std::vector<candidate_set> out;

    if (blocks.prefix_justifying) {
        for (int c = 0; c < e.m(); ++c) {
            if (blocks.prefix.contains(c)) continue;
            candidate_set w = blocks.prefix;
            w.insert(c);
            out.push_back(std::move(w));
        }
        return out;
    }

    candidate_set base(std::vector<candidate_id>(blocks.block_candidates));
    out.push_back(base);
    for (int c = 0; c < e.m(); ++c) {
        if (base.contains(c)) continue;
        voter_id approver =
            static_cast<voter_id>(e.supporters(c).next_set(0));
        int block = blocks.voter_block[static_cast<std::size_t>(approver)];
        candidate_set w = base.without(
            blocks.block_candidates[static_cast<std::size_t>(block)]);
        w.insert(c);
        out.push_back(std::move(w));
    }
    return out;
}

candidate_set committee_both_genders(const approval_election& e,
                                     const gender_assignment& genders) {
    if (e.k() < 2)
        throw std::invalid_argument("a committee with both genders needs k >= 2");
    for (gender want : {gender::male, gender::female}) {
        bool ok = false;
        for (int c = 0; c < e.m() && !ok; ++c)
            if (genders.of(c) == want && e.supporters(c).any()) ok = true;
        if (!ok)
            throw std::invalid_argument(
                "no approved candidate of one gender exists");
    }

    auto has_gender = [&](const candidate_set& w, gender want) {
        for (candidate_id c : w)
            if (genders.of(c) == want) return true;
        return false;
    };

    greedy_blocks blocks = derive_blocks(e);

    if (blocks.prefix_justifying) {
        candidate_set w = blocks.prefix;
        gender missing = gender::male;
        bool need_fix = false;
        if (!has_gender(w, gender::male)) {
            missing = gender::male;
            need_fix = true;
        } else if (!has_gender(w, gender::female)) {
            missing = gender::female;
            need_fix = true;
        }
        if (need_fix) {
            for (int c = 0; c < e.m(); ++c)
                if (!w.contains(c) && genders.of(c) == missing) {
                    w.insert(c);
                    return w;
                }
            throw std::logic_error("missing gender has no candidate outside prefix");
        }
        for (int c = 0; c < e.m(); ++c)
            if (!w.contains(c)) {
                w.insert(c);
                return w;
            }
        throw std::logic_error("no candidate left to complete the committee");
    }

    candidate_set base(std::vector<candidate_id>(blocks.block_candidates));
    if (has_gender(base, gender::male) && has_gender(base, gender::female))
        return base;

    gender missing =
        has_gender(base, gender::male) ? gender::female : gender::male;
    for (int c = 0; c < e.m(); ++c) {
        if (genders.of(c) != missing || e.supporters(c).none()) continue;
        voter_id approver = static_cast<voter_id>(e.supporters(c).next_set(0));
        int block = blocks.voter_block[static_cast<std::size_t>(approver)];
        candidate_set w = base.without(
            blocks.block_candidates[static_cast<std::size_t>(block)]);
        w.insert(c);
        return w;
    }
    throw std::logic_error("no approved candidate of the missing gender");
}

candidate_set min_imbalance_heuristic(const approval_election& e,
                                      const gender_assignment& genders) {
    candidate_set cc = greedy_cc(e, greedy_cc_mode::stop_when_justifying);
    candidate_set gc = greedy_candidate(e);
    const candidate_set& g = gc.size() <= cc.size() ? gc : cc;
    return extend_to_committee(e, g, fill_policy::gender_balance, &genders);
}

} // namespace jr
