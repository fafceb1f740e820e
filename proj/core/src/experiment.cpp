#include "jr/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "jr/generate.hpp"
#include "jr/greedy.hpp"
#include "jr/verify.hpp"

namespace jr {

model_kind parse_model(std::string_view name) {
    if (name == "ic") return model_kind::ic;
    if (name == "e1d") return model_kind::euclid1d;
    if (name == "e2d") return model_kind::euclid2d;
    throw std::invalid_argument("unknown model '" + std::string(name) +
                                "' (expected ic, e1d or e2d)");
}

std::string_view model_name(model_kind model) {
    switch (model) {
        case model_kind::ic: return "ic";
        case model_kind::euclid1d: return "e1d";
        case model_kind::euclid2d: return "e2d";
    }
    return "?";
}

std::vector<double> experiment_config::grid_values() const {
    std::vector<double> values;
    for (int i = 0;; ++i) {
        double v = grid_start + i * grid_step;
        if (v > grid_stop + grid_step * 1e-9) break;
        values.push_back(v);
    }
    return values;
}

void experiment_config::validate() const {
    if (n < 1 || m < 1 || k < 1 || k > m)
        throw std::invalid_argument("config: need n, m >= 1 and 1 <= k <= m");
    if (!(grid_step > 0)) throw std::invalid_argument("config: grid step must be > 0");
    if (grid_start > grid_stop)
        throw std::invalid_argument("config: grid start exceeds stop");
    if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
    if (grid_start < 0)
        throw std::invalid_argument("config: grid values must be non-negative");
    if (model == model_kind::ic && grid_stop > 1.0)
        throw std::invalid_argument("config: IC probability grid must stay in [0,1]");
    for (int s : group_sizes)
        if (s < 0 || s > m)
            throw std::invalid_argument("config: group sizes must be in [0, m]");
}

experiment_config experiment_config::from_file(std::string_view text) {
    experiment_config cfg;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw parse_error(line_no, "expected key=value");
        std::string key(line.substr(first, eq - first));
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value(line.substr(eq + 1));
        while (!value.empty() &&
               (value.back() == ' ' || value.back() == '\t' || value.back() == '\r'))
            value.pop_back();
        while (!value.empty() && (value.front() == ' ' || value.front() == '\t'))
            value.erase(value.begin());

        try {
            if (key == "model") cfg.model = parse_model(value);
            else if (key == "n") cfg.n = std::stoi(value);
            else if (key == "m") cfg.m = std::stoi(value);
            else if (key == "k") cfg.k = std::stoi(value);
            else if (key == "grid_start") cfg.grid_start = std::stod(value);
            else if (key == "grid_stop") cfg.grid_stop = std::stod(value);
            else if (key == "grid_step") cfg.grid_step = std::stod(value);
            else if (key == "trials") cfg.trials = std::stoi(value);
            else if (key == "seed") cfg.master_seed = std::stoull(value);
            else if (key == "budget") cfg.node_budget = std::stoull(value);
            else if (key == "output") cfg.output_path = value;
            else if (key == "group_sizes") {
                cfg.group_sizes.clear();
                std::stringstream ss(value);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.group_sizes.push_back(std::stoi(item));
            } else {
                throw parse_error(line_no, "unknown config key '" + key + "'");
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            throw parse_error(line_no, "bad value for key '" + key + "'");
        }
    }
    return cfg;
}

namespace {

approval_election generate(const experiment_config& cfg, double param,
                           std::uint64_t seed) {
    switch (cfg.model) {
        case model_kind::ic:
            return gen_ic(cfg.n, cfg.m, cfg.k, param, seed);
        case model_kind::euclid1d:
            return gen_euclid1d(cfg.n, cfg.m, cfg.k, param, seed).first;
        case model_kind::euclid2d:
            return gen_euclid2d(cfg.n, cfg.m, cfg.k, param, seed);
    }
    throw std::logic_error("unreachable");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

threshold_result run_threshold_experiment(const experiment_config& cfg) {
    cfg.validate();
    threshold_result result;
    result.group_sizes = cfg.group_sizes;

    auto grid = cfg.grid_values();
    std::size_t n_sizes = cfg.group_sizes.size();

    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
        threshold_record rec;
        rec.grid_value = grid[pi];
        rec.trials = cfg.trials;
        double approvals_sum = 0.0;

        for (std::size_t si = 0; si < n_sizes; ++si) {
            int s = cfg.group_sizes[si];
            int justifying = 0;
            for (int t = 0; t < cfg.trials; ++t) {
                std::uint64_t counter =
                    (pi * n_sizes + si) * static_cast<std::uint64_t>(cfg.trials) +
                    static_cast<std::uint64_t>(t);
                std::uint64_t trial_seed = derive_seed(cfg.master_seed, counter);
                approval_election e =
                    generate(cfg, grid[pi], derive_seed(trial_seed, 0));
                split_mix64 group_rng(derive_seed(trial_seed, 1));
                candidate_set w = sample_candidate_set(cfg.m, s, group_rng);
                if (is_justifying(e, w)) ++justifying;
                approvals_sum += avg_approvals(e);
            }
            rec.fractions.push_back(static_cast<double>(justifying) / cfg.trials);
        }

        rec.avg_approvals =
            approvals_sum / (static_cast<double>(n_sizes) * cfg.trials);
        result.rows.push_back(std::move(rec));
    }

    if (cfg.model == model_kind::ic)
        for (int s : cfg.group_sizes)
            result.transition_params.push_back(ic_transition_points(s, cfg.k));
    return result;
}

std::vector<greedy_record> run_greedy_experiment(const experiment_config& cfg) {
    cfg.validate();
    std::vector<greedy_record> rows;

    auto grid = cfg.grid_values();
    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
        long long sum_cc = 0, sumsq_cc = 0;
        long long sum_cand = 0, sumsq_cand = 0;
        long long sum_exact = 0, sumsq_exact = 0;
        int failures = 0;
        double approvals_sum = 0.0;

        for (int t = 0; t < cfg.trials; ++t) {
            std::uint64_t counter =
                pi * static_cast<std::uint64_t>(cfg.trials) +
                static_cast<std::uint64_t>(t);
            std::uint64_t trial_seed = derive_seed(cfg.master_seed, counter);
            approval_election e = generate(cfg, grid[pi], derive_seed(trial_seed, 0));
            approvals_sum += avg_approvals(e);

            long long cc = static_cast<long long>(
                greedy_cc(e, greedy_cc_mode::stop_when_justifying).size());
            long long cand = static_cast<long long>(greedy_candidate(e).size());
            sum_cc += cc;
            sumsq_cc += cc * cc;
            sum_cand += cand;
            sumsq_cand += cand * cand;
            try {
                long long ex = static_cast<long long>(
                    exact_min_justifying(e, cfg.node_budget).size());
                sum_exact += ex;
                sumsq_exact += ex * ex;
            } catch (const budget_exceeded&) {
                ++failures;
            }
        }

        auto mean_sd = [](long long sum, long long sumsq, int count) {
            if (count == 0) return std::pair<double, double>{0.0, 0.0};
            double mean = static_cast<double>(sum) / count;
            double var = static_cast<double>(sumsq) / count - mean * mean;
            return std::pair<double, double>{mean, std::sqrt(std::max(0.0, var))};
        };

        greedy_record rec;
        rec.grid_value = grid[pi];
        rec.avg_approvals = approvals_sum / cfg.trials;
        std::tie(rec.avg_cc, rec.sd_cc) = mean_sd(sum_cc, sumsq_cc, cfg.trials);
        std::tie(rec.avg_cand, rec.sd_cand) = mean_sd(sum_cand, sumsq_cand, cfg.trials);
        std::tie(rec.avg_exact, rec.sd_exact) =
            mean_sd(sum_exact, sumsq_exact, cfg.trials - failures);
        rec.exact_failures = failures;
        rec.trials = cfg.trials;
        rows.push_back(rec);
    }
    return rows;
}

greedy_record run_greedy_fixture(int k, std::uint64_t node_budget) {
    approval_election e = fixture_example2(k);
    greedy_record rec{};
    rec.grid_value = 0.0;
    rec.avg_approvals = avg_approvals(e);
    rec.avg_cc = static_cast<double>(
        greedy_cc(e, greedy_cc_mode::stop_when_justifying).size());
    rec.avg_cand = static_cast<double>(greedy_candidate(e).size());
    rec.avg_exact =
        static_cast<double>(exact_min_justifying(e, node_budget).size());
    rec.exact_failures = 0;
    rec.trials = 1;
    return rec;
}

std::string threshold_csv(const threshold_result& result) {
    std::ostringstream os;
    os << "grid_value,avg_approvals";
    for (int s : result.group_sizes) os << ",frac_s" << s;
    os << '\n';
    for (const auto& rec : result.rows) {
        os << format_double(rec.grid_value) << ',' << format_double(rec.avg_approvals);
        for (double f : rec.fractions) os << ',' << format_double(f);
        os << '\n';
    }
    return os.str();
}

std::string greedy_csv(const std::vector<greedy_record>& rows) {
    std::ostringstream os;
    os << "grid_value,avg_approvals,avg_cc,sd_cc,avg_cand,sd_cand,avg_exact,"
          "sd_exact,exact_failures,trials\n";
    for (const auto& r : rows) {
        os << format_double(r.grid_value) << ',' << format_double(r.avg_approvals)
           << ',' << format_double(r.avg_cc) << ',' << format_double(r.sd_cc) << ','
           << format_double(r.avg_cand) << ',' << format_double(r.sd_cand) << ','
           << format_double(r.avg_exact) << ',' << format_double(r.sd_exact) << ','
           << r.exact_failures << ',' << r.trials << '\n';
    }
    return os.str();
}

std::vector<double> ic_transition_points(int s, int k) {
    if (s < 0 || k < 1) throw std::invalid_argument("need s >= 0 and k >= 1");
    double target = 1.0 / k;
    auto f = [&](double p) { return p * std::pow(1.0 - p, s) - target; };

    auto bisect = [&](double lo, double hi) {
        for (int it = 0; it < 200; ++it) {
            double mid = (lo + hi) / 2;
            if ((f(lo) <= 0) == (f(mid) <= 0))
                lo = mid;
            else
                hi = mid;
        }
        return (lo + hi) / 2;
    };

    if (s == 0) {
        // f increases through 0 at p = 1/k
        return {target};
    }
    double peak = 1.0 / (s + 1);
    if (f(peak) <= 0) return {};
    return {bisect(0.0, peak), bisect(1.0, peak)};
}

namespace {

std::vector<std::string> split_header(std::string_view header) {
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (pos <= header.size()) {
        std::size_t c = header.find(',', pos);
        if (c == std::string_view::npos) {
            std::string last(header.substr(pos));
            while (!last.empty() && (last.back() == '\n' || last.back() == '\r'))
                last.pop_back();
            cols.push_back(last);
            break;
        }
        cols.emplace_back(header.substr(pos, c - pos));
        pos = c + 1;
    }
    return cols;
}

} // namespace

std::string emit_plot_script(const std::string& csv_path,
                             std::string_view csv_header, experiment_kind kind,
                             const experiment_config& cfg) {
    auto cols = split_header(csv_header);
    auto require = [&](const std::string& name) {
        for (const auto& c : cols)
            if (c == name) return;
        throw std::invalid_argument("CSV is missing column '" + name + "'");
    };
    require("grid_value");
    require("avg_approvals");

    std::ostringstream os;
    os << "#!/usr/bin/env python3\n"
       << "import csv\n"
       << "import matplotlib.pyplot as plt\n\n"
       << "with open(" << '"' << csv_path << '"' << ") as fh:\n"
       << "    rows = list(csv.DictReader(fh))\n"
       << "x = [float(r[\"avg_approvals\"]) for r in rows]\n\n";

    if (kind == experiment_kind::threshold) {
        for (int s : cfg.group_sizes) {
            std::string col = "frac_s" + std::to_string(s);
            require(col);
            os << "plt.plot(x, [float(r[\"" << col << "\"]) for r in rows], "
               << "marker=\"o\", markersize=2, label=\"s=" << s << "\")\n";
        }
        if (cfg.model == model_kind::ic) {
            for (int s : cfg.group_sizes)
                for (double p : ic_transition_points(s, cfg.k))
                    os << "plt.axvline(" << format_double(p * cfg.m)
                       << ", linestyle=\"--\", color=\"gray\", linewidth=0.8)\n";
        }
        os << "plt.ylabel(\"fraction of elections with a justifying sample\")\n";
    } else {
        for (const char* col : {"avg_cc", "avg_cand", "avg_exact"}) require(col);
        os << "plt.plot(x, [float(r[\"avg_cc\"]) for r in rows], "
              "marker=\"o\", markersize=2, label=\"covering greedy\")\n"
           << "plt.plot(x, [float(r[\"avg_cand\"]) for r in rows], "
              "marker=\"s\", markersize=2, label=\"candidate greedy\")\n"
           << "plt.plot(x, [float(r[\"avg_exact\"]) for r in rows], "
              "marker=\"^\", markersize=2, label=\"exact minimum\")\n"
           << "plt.ylabel(\"average justifying group size\")\n";
    }

    os << "plt.xlabel(\"average approvals per voter\")\n"
       << "plt.legend()\n"
       << "plt.tight_layout()\n"
       << "plt.savefig(" << '"' << csv_path << ".png\", dpi=150)\n";
    return os.str();
}

} // namespace jr
