#ifndef JR_EXPERIMENT_HPP
#define JR_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "jr/exact.hpp"
#include "jr/election.hpp"

namespace jr {

enum class model_kind { ic, euclid1d, euclid2d };

model_kind parse_model(std::string_view name);
std::string_view model_name(model_kind model);

// Sweep description shared by both experiment pipelines. `grid_*` sweeps the
// model parameter (approval probability p for IC, radius r otherwise).
struct experiment_config {
    model_kind model = model_kind::ic;
    int n = 2000;
    int m = 50;
    int k = 10;
    double grid_start = 0.0;
    double grid_stop = 0.98;
    double grid_step = 0.02;
    int trials = 200;
    std::vector<int> group_sizes = {1, 2, 3, 4}; // threshold experiment only
    std::uint64_t master_seed = 42;
    std::uint64_t node_budget = default_node_budget; // greedy experiment only
    std::string output_path;

    std::vector<double> grid_values() const;
    // Throws std::invalid_argument when a field is out of range.
    void validate() const;

    // Flat "key=value" lines; '#' comments. Unknown keys are errors.
    static experiment_config from_file(std::string_view text);
};

struct threshold_record {
    double grid_value;
    double avg_approvals;
    std::vector<double> fractions; // one per configured group size
    int trials;
};

struct threshold_result {
    std::vector<int> group_sizes;
    std::vector<threshold_record> rows;
    // IC model only: for each group size, the parameter values where
    // p(1-p)^s = 1/k, i.e. where the asymptotic fraction transitions.
    std::vector<std::vector<double>> transition_params;
};

// Experiment 1: for every grid point and group size, generates `trials`
// elections, samples one uniformly random group of that size per election,
// and records the fraction that is justifying.
threshold_result run_threshold_experiment(const experiment_config& cfg);

struct greedy_record {
    double grid_value;
    double avg_approvals;
    double avg_cc, sd_cc;
    double avg_cand, sd_cand;
    double avg_exact, sd_exact;
    int exact_failures;
    int trials;
};

// Experiment 2: per grid point, generates `trials` elections and records
// averages and standard deviations of the covering-greedy, candidate-greedy
// and certified-exact group sizes. Budget-exceeded runs count as failures and
// are excluded from the exact averages, never fabricated.
std::vector<greedy_record> run_greedy_experiment(const experiment_config& cfg);

// Single fixture row for the greedy experiment (the adversarial instance).
greedy_record run_greedy_fixture(int k, std::uint64_t node_budget = default_node_budget);

// CSV with header "grid_value,avg_approvals,frac_s<j>,...".
std::string threshold_csv(const threshold_result& result);
// CSV with header
// "grid_value,avg_approvals,avg_cc,sd_cc,avg_cand,sd_cand,avg_exact,sd_exact,exact_failures,trials".
std::string greedy_csv(const std::vector<greedy_record>& rows);

// Roots of p(1-p)^s = 1/k in (0,1), found by bisection; empty when the curve
// stays below 1/k.
std::vector<double> ic_transition_points(int s, int k);

enum class experiment_kind { threshold, greedy };

// Emits a python/matplotlib script that reads the CSV by column name and
// plots one series per group size (threshold) or the three solver series
// (greedy). For IC threshold data, adds dashed vertical lines at the
// transition points converted to average approvals (m*p).
// `csv_header` is validated against the expected schema; missing columns
// throw std::invalid_argument.
std::string emit_plot_script(const std::string& csv_path,
                             std::string_view csv_header, experiment_kind kind,
                             const experiment_config& cfg);

} // namespace jr

#endif
