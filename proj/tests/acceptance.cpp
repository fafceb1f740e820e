// Acceptance suite: runs every gate the library must clear at desk scale and
// prints one PASS/FAIL line per criterion. Exit code is the number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jr/committee.hpp"
#include "jr/exact.hpp"
#include "jr/experiment.hpp"
#include "jr/generate.hpp"
#include "jr/greedy.hpp"
#include "jr/tree.hpp"
#include "jr/verify.hpp"

using namespace jr;

namespace {

constexpr std::uint64_t master_seed = 42;

struct gate {
    int id;
    std::string name;
    double limit_seconds;
    bool ok = true;
    double elapsed = 0.0;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
};

int failures = 0;

template <typename F>
void run_gate(int id, const std::string& name, double limit_seconds, F&& body) {
    gate g{id, name, limit_seconds};
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(g);
    } catch (const std::exception& ex) {
        g.ok = false;
        g.detail << "exception: " << ex.what();
    }
    g.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (g.elapsed >= g.limit_seconds) {
        g.ok = false;
        g.detail << (g.detail.tellp() > 0 ? "; " : "") << "over time limit";
    }
    std::printf("%s criterion %2d: %s [%.2fs < %.0fs]%s%s\n",
                g.ok ? "PASS" : "FAIL", g.id, g.name.c_str(), g.elapsed,
                g.limit_seconds, g.detail.tellp() > 0 ? " -- " : "",
                g.detail.str().c_str());
    std::fflush(stdout);
    if (!g.ok) ++failures;
}

approval_election random_instance(std::uint64_t seed, int max_n, int max_m) {
    split_mix64 rng(seed);
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

experiment_config threshold_config(double p_start, double p_stop, double p_step,
                                   std::vector<int> sizes) {
    experiment_config cfg;
    cfg.model = model_kind::ic;
    cfg.n = 2000;
    cfg.m = 50;
    cfg.k = 10;
    cfg.grid_start = p_start;
    cfg.grid_stop = p_stop;
    cfg.grid_step = p_step;
    cfg.trials = 200;
    cfg.group_sizes = std::move(sizes);
    cfg.master_seed = master_seed;
    return cfg;
}

experiment_config greedy_sweep_config() {
    experiment_config cfg;
    cfg.model = model_kind::ic;
    cfg.n = 60;
    cfg.m = 60;
    cfg.k = 10;
    cfg.grid_start = 0.0;
    cfg.grid_stop = 0.98;
    cfg.grid_step = 0.02;
    cfg.trials = 100;
    cfg.master_seed = master_seed;
    return cfg;
}

} // namespace

int main() {
    // 1 ------------------------------------------------------------------
    run_gate(1, "adversarial fixture sizes (greedy 9 / candidate 1 / exact 1)", 1.0,
             [](gate& g) {
                 approval_election e = fixture_example2(10);
                 g.require(e.n() == 100 && e.m() == 20, "fixture shape");
                 auto cc = greedy_cc(e, greedy_cc_mode::stop_when_justifying);
                 auto gc = greedy_candidate(e);
                 auto ex = exact_min_justifying(e);
                 g.require(cc.size() == 9, "greedy-cc size " + std::to_string(cc.size()));
                 g.require(gc.size() == 1, "greedy-candidate size " + std::to_string(gc.size()));
                 g.require(ex.size() == 1, "exact size " + std::to_string(ex.size()));
             });

    // 2 ------------------------------------------------------------------
    run_gate(2, "JR-committee counts on the worst-case instance (4 and 1)", 1.0,
             [](gate& g) {
                 approval_election e = fixture_example1(5, 8, 4);
                 g.require(count_jr_committees(e) == 4, "count != 4");

                 auto ballots = e.ballots();
                 for (int i = 16; i < 20; ++i)
                     ballots[static_cast<std::size_t>(i)] = {4};
                 approval_election modified(20, 8, 5, std::move(ballots));
                 g.require(count_jr_committees(modified) == 1, "modified count != 1");
             });

    // 3 ------------------------------------------------------------------
    run_gate(3, "constructive floor of m-k+1 JR committees (100 instances)", 10.0,
             [](gate& g) {
                 int done = 0;
                 for (std::uint64_t t = 0; done < 100; ++t) {
                     approval_election e =
                         gen_ic(40, 12, 4, 0.4, derive_seed(master_seed, t));
                     bool all = true;
                     for (int c = 0; c < e.m(); ++c)
                         if (e.supporters(c).none()) all = false;
                     if (!all) continue; // resample until every candidate is approved
                     auto committees = jr_committees_constructive(e);
                     g.require(committees.size() >= 9, "fewer than 9 committees");
                     std::set<candidate_set> distinct(committees.begin(), committees.end());
                     g.require(distinct.size() == committees.size(), "duplicates");
                     for (const auto& w : committees)
                         g.require(is_jr_committee(e, w), "non-JR committee");
                     ++done;
                 }
             });

    // 4 ------------------------------------------------------------------
    run_gate(4, "verifier vs brute-force oracle (500 pairs)", 30.0, [](gate& g) {
        split_mix64 rng(derive_seed(master_seed, 4001));
        for (int t = 0; t < 500; ++t) {
            approval_election e =
                random_instance(derive_seed(master_seed, 40000 + t), 12, 8);
            candidate_set w;
            {
                std::vector<candidate_id> members;
                for (int c = 0; c < e.m(); ++c)
                    if (rng.next_double() < 0.4) members.push_back(c);
                w = candidate_set(std::move(members));
            }
            if (is_justifying(e, w) != is_justifying_bruteforce(e, w)) {
                g.require(false, "disagreement at pair " + std::to_string(t));
                return;
            }
        }
    });

    // 5+6 share the instance set --------------------------------------------
    std::vector<approval_election> optimizer_instances;
    for (int t = 0; t < 200; ++t)
        optimizer_instances.push_back(
            random_instance(derive_seed(master_seed, 50000 + t), 30, 16));

    run_gate(5, "exact optimizer vs subset oracles (200 instances)", 120.0,
             [&](gate& g) {
                 int bb_mismatch = 0, quasi_checked = 0, quasi_mismatch = 0;
                 std::string first_quasi;
                 for (std::size_t t = 0; t < optimizer_instances.size(); ++t) {
                     const approval_election& e = optimizer_instances[t];
                     std::size_t bb = exact_min_justifying(e).size();
                     std::size_t bf = exact_min_bruteforce(e).size();
                     if (bb != bf) ++bb_mismatch;
                     if (e.n() <= 14) {
                         ++quasi_checked;
                         std::size_t qp = quasi_poly_min(e).size();
                         if (qp != bf) {
                             if (quasi_mismatch == 0)
                                 first_quasi = "#" + std::to_string(t) + ": " +
                                               std::to_string(qp) + " vs " +
                                               std::to_string(bf);
                             ++quasi_mismatch;
                         }
                     }
                 }
                 g.require(bb_mismatch == 0,
                           "branch-and-bound != brute force on " +
                               std::to_string(bb_mismatch) + " instances");
                 g.require(quasi_mismatch == 0,
                           "quasi != exact on " + std::to_string(quasi_mismatch) +
                               " of " + std::to_string(quasi_checked) +
                               " small instances (" + first_quasi + ")");
             });

    run_gate(6, "approximation bounds and strict potential descent", 120.0,
             [&](gate& g) {
                 for (std::size_t t = 0; t < optimizer_instances.size(); ++t) {
                     const approval_election& e = optimizer_instances[t];
                     double opt = static_cast<double>(exact_min_justifying(e).size());
                     double cc = static_cast<double>(
                         greedy_cc(e, greedy_cc_mode::stop_when_justifying).size());
                     auto trace = greedy_candidate_trace(e);
                     double gc = static_cast<double>(trace.steps.size());

                     double cc_bound = std::ceil(std::sqrt(2.0 * e.n())) * opt;
                     double gc_bound = std::ceil(
                         (std::log(static_cast<double>(e.m()) * e.n()) + 1.0) * opt);
                     g.require(cc <= cc_bound + 1e-9, "covering-greedy bound violated");
                     g.require(gc <= gc_bound + 1e-9, "candidate-greedy bound violated");

                     long long prev = trace.psi_initial;
                     for (const auto& step : trace.steps) {
                         g.require(step.psi_after < prev, "potential did not decrease");
                         prev = step.psi_after;
                     }
                 }
             });

    // 7 ------------------------------------------------------------------
    run_gate(7, "tree solver exactness on 200 interval instances", 60.0,
             [](gate& g) {
                 for (int t = 0; t < 200; ++t) {
                     split_mix64 rng(derive_seed(master_seed, 70000 + t));
                     int n = 1 + static_cast<int>(rng.next_below(50));
                     int m = 1 + static_cast<int>(rng.next_below(12));
                     interval_model iv;
                     for (int i = 0; i < n; ++i)
                         iv.voters.push_back({rng.next_double(), 0.25 * rng.next_double()});
                     for (int c = 0; c < m; ++c)
                         iv.candidates.push_back({rng.next_double(), 0.25 * rng.next_double()});
                     int k = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m)));

                     approval_election e = vcr_election(iv, k);
                     rooted_candidate_tree tree = vcr_to_tree(iv);
                     if (!validate_tree_representation(e, tree)) {
                         g.require(false, "conversion failed validation at " + std::to_string(t));
                         return;
                     }
                     std::size_t ts = solve_on_tree(e, tree).size();
                     std::size_t bf = exact_min_bruteforce(e).size();
                     if (ts != bf) {
                         g.require(false, "tree size " + std::to_string(ts) + " vs oracle " +
                                              std::to_string(bf) + " at " + std::to_string(t));
                         return;
                     }
                 }
             });

    // 8 ------------------------------------------------------------------
    std::string exp1_csv_first;
    run_gate(8, "threshold experiment fractions at the pinned grid points", 180.0,
             [&](gate& g) {
                 auto low_p = run_threshold_experiment(
                     threshold_config(0.04, 0.04, 0.02, {1, 2}));
                 double f_s1_low = low_p.rows[0].fractions[0];
                 double f_s2_low = low_p.rows[0].fractions[1];
                 g.require(f_s1_low >= 0.95, "frac(s=1,p=0.04)=" + std::to_string(f_s1_low));
                 g.require(f_s2_low >= 0.95, "frac(s=2,p=0.04)=" + std::to_string(f_s2_low));

                 auto high_s1 = run_threshold_experiment(
                     threshold_config(0.30, 0.30, 0.02, {1}));
                 double f_s1_high = high_s1.rows[0].fractions[0];
                 g.require(f_s1_high <= 0.05, "frac(s=1,p=0.30)=" + std::to_string(f_s1_high));

                 auto high_s2 = run_threshold_experiment(
                     threshold_config(0.16, 0.16, 0.02, {2}));
                 double f_s2_high = high_s2.rows[0].fractions[0];
                 g.require(f_s2_high <= 0.05, "frac(s=2,p=0.16)=" + std::to_string(f_s2_high));

                 auto s4 = run_threshold_experiment(
                     threshold_config(0.1, 0.5, 0.1, {4}));
                 for (std::size_t i : {std::size_t{0}, std::size_t{1}, std::size_t{2},
                                       std::size_t{4}}) {
                     double f = s4.rows[i].fractions[0];
                     char buf[64];
                     std::snprintf(buf, sizeof buf, "frac(s=4,p=%.1f)=%.3f",
                                   s4.rows[i].grid_value, f);
                     g.require(f >= 0.95, buf);
                 }

                 exp1_csv_first = threshold_csv(low_p) + threshold_csv(high_s1) +
                                  threshold_csv(high_s2) + threshold_csv(s4);
             });

    // 9 ------------------------------------------------------------------
    run_gate(9, "gender procedures: both-genders sweep, fixture, zero-fill", 60.0,
             [](gate& g) {
                 // 200 random instances satisfying the both-genders precondition
                 int done = 0;
                 for (std::uint64_t t = 0; done < 200; ++t) {
                     split_mix64 grng(derive_seed(master_seed, 90000 + t));
                     approval_election e =
                         gen_ic(24, 10, 4, 0.35, derive_seed(master_seed, 91000 + t));
                     gender_assignment genders;
                     for (int c = 0; c < e.m(); ++c)
                         genders.labels.push_back(grng.next_double() < 0.5
                                                      ? gender::male
                                                      : gender::female);
                     bool precondition = true;
                     for (gender want : {gender::male, gender::female}) {
                         bool found = false;
                         for (int c = 0; c < e.m(); ++c)
                             if (genders.of(c) == want && e.supporters(c).any())
                                 found = true;
                         if (!found) precondition = false;
                     }
                     if (!precondition) continue;
                     candidate_set w = committee_both_genders(e, genders);
                     bool male = false, female = false;
                     for (candidate_id c : w)
                         (genders.of(c) == gender::male ? male : female) = true;
                     g.require(is_jr_committee(e, w), "not a JR committee");
                     g.require(male && female, "missing a gender");
                     ++done;
                 }

                 // the gender-tension fixture pins both procedures at 6
                 auto [e3, genders3] = fixture_example3(8);
                 candidate_set both = committee_both_genders(e3, genders3);
                 g.require(is_jr_committee(e3, both), "fixture: not JR");
                 g.require(imbalance(both, genders3) == 6, "fixture: both-genders != 6");
                 candidate_set heur = min_imbalance_heuristic(e3, genders3);
                 g.require(imbalance(heur, genders3) == 6, "fixture: heuristic != 6");

                 // small greedy groups plus ample stock of both genders: perfect balance
                 int balanced_done = 0;
                 for (std::uint64_t t = 0; balanced_done < 200; ++t) {
                     split_mix64 grng(derive_seed(master_seed, 92000 + t));
                     approval_election e =
                         gen_ic(40, 40, 8, 0.3, derive_seed(master_seed, 93000 + t));
                     gender_assignment genders;
                     int males = 0;
                     for (int c = 0; c < e.m(); ++c) {
                         bool is_male = grng.next_double() < 0.5;
                         males += is_male ? 1 : 0;
                         genders.labels.push_back(is_male ? gender::male
                                                          : gender::female);
                     }
                     if (males < 8 || e.m() - males < 8) continue;
                     candidate_set cc = greedy_cc(e, greedy_cc_mode::stop_when_justifying);
                     candidate_set gc = greedy_candidate(e);
                     const candidate_set& group = gc.size() <= cc.size() ? gc : cc;
                     if (group.size() > 4) continue;
                     candidate_set w = min_imbalance_heuristic(e, genders);
                     g.require(imbalance(w, genders) == 0, "imbalance not zero");
                     g.require(is_jr_committee(e, w), "heuristic result not JR");
                     ++balanced_done;
                 }
             });

    // 10 -----------------------------------------------------------------
    std::string exp2_csv_first;
    run_gate(10, "greedy-vs-exact sweep stays near the optimum", 600.0,
             [&](gate& g) {
                 auto rows = run_greedy_experiment(greedy_sweep_config());
                 for (const auto& r : rows) {
                     char buf[96];
                     if (r.exact_failures > r.trials / 20) {
                         std::snprintf(buf, sizeof buf, "p=%.2f: %d budget failures",
                                       r.grid_value, r.exact_failures);
                         g.require(false, buf);
                     }
                     if (r.avg_cc - r.avg_exact > 1.5) {
                         std::snprintf(buf, sizeof buf,
                                       "p=%.2f: covering-greedy gap %.3f",
                                       r.grid_value, r.avg_cc - r.avg_exact);
                         g.require(false, buf);
                     }
                     if (r.avg_cand - r.avg_exact > 2.0) {
                         std::snprintf(buf, sizeof buf,
                                       "p=%.2f: candidate-greedy gap %.3f",
                                       r.grid_value, r.avg_cand - r.avg_exact);
                         g.require(false, buf);
                     }
                 }
                 exp2_csv_first = greedy_csv(rows);
             });

    // 11 -----------------------------------------------------------------
    run_gate(11, "reruns with the master seed are byte-identical", 900.0,
             [&](gate& g) {
                 auto exp1_again = threshold_csv(run_threshold_experiment(
                                       threshold_config(0.04, 0.04, 0.02, {1, 2}))) +
                                   threshold_csv(run_threshold_experiment(
                                       threshold_config(0.30, 0.30, 0.02, {1}))) +
                                   threshold_csv(run_threshold_experiment(
                                       threshold_config(0.16, 0.16, 0.02, {2}))) +
                                   threshold_csv(run_threshold_experiment(
                                       threshold_config(0.1, 0.5, 0.1, {4})));
                 g.require(exp1_again == exp1_csv_first, "threshold CSV differs");

                 auto exp2_again = greedy_csv(run_greedy_experiment(greedy_sweep_config()));
                 g.require(exp2_again == exp2_csv_first, "greedy CSV differs");

                 approval_election e = fixture_example2(10);
                 g.require(exact_min_justifying(e) == exact_min_justifying(e),
                           "exact solver not deterministic");
             });

    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
