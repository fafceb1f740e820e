#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "jr/committee.hpp"
#include "jr/exact.hpp"
#include "jr/experiment.hpp"
#include "jr/generate.hpp"
#include "jr/greedy.hpp"
#include "jr/tree.hpp"
#include "jr/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_verification = 2;
constexpr int exit_budget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

jr::approval_election load_election(const std::string& path) {
    std::vector<std::string> warnings;
    jr::approval_election e = jr::parse_election(read_file(path), &warnings);
    for (const auto& w : warnings) std::cerr << path << ": warning: " << w << '\n';
    return e;
}

std::string replace_extension(const std::string& path, const std::string& ext) {
    std::size_t slash = path.find_last_of('/');
    std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + ext;
    return path.substr(0, dot) + ext;
}

void print_group(const jr::candidate_set& w) {
    std::cout << "group: " << w.to_string() << '\n'
              << "size: " << w.size() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"justifying groups and JR committees in approval elections"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 42;
    std::uint64_t budget = jr::default_node_budget;
    std::string output;
    std::string format = "csv";
    app.add_option("--seed", seed, "master RNG seed")->envname("JR_SEED");
    app.add_option("--budget", budget, "node budget for the exact solver");
    app.add_option("--output", output, "output file path (default: stdout)");
    app.add_option("--format", format, "tabular output format")
        ->check(CLI::IsMember({"csv"}));

    int code = exit_ok;

    // ---- check ------------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "verify a candidate group against an election");
    std::string check_election, check_group;
    check->add_option("election", check_election, "election file (.appr)")->required();
    check->add_option("group", check_group, "file of candidate indices")->required();
    check->callback([&] {
        jr::approval_election e = load_election(check_election);
        jr::candidate_set w = jr::parse_candidate_set(read_file(check_group), e.m());
        bool justifying = jr::is_justifying(e, w);
        print_group(w);
        std::cout << "justifying: " << (justifying ? "yes" : "no") << '\n';
        std::cout << "jr-committee: "
                  << (jr::is_jr_committee(e, w) ? "yes" : "no") << '\n';
        if (!justifying) code = exit_verification;
    });

    // ---- solve ------------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "compute a small justifying group");
    std::string solve_election;
    bool use_cc = false, use_cand = false, use_exact = false, use_quasi = false;
    std::string tree_file;
    std::string cc_mode = "stop";
    solve->add_option("election", solve_election, "election file (.appr)")->required();
    auto* f_cc = solve->add_flag("--greedy-cc", use_cc, "covering greedy");
    auto* f_cand = solve->add_flag("--greedy-candidate", use_cand, "candidate greedy");
    auto* f_exact = solve->add_flag("--exact", use_exact, "certified branch-and-bound");
    auto* f_quasi = solve->add_flag("--quasi", use_quasi, "subset enumeration (tiny n)");
    auto* f_tree = solve->add_option("--tree", tree_file,
                                     "exact solve on a tree representation file");
    solve->add_option("--mode", cc_mode, "greedy-cc stopping rule")
        ->check(CLI::IsMember({"stop", "run-to-k"}));
    f_cc->excludes(f_cand, f_exact, f_quasi, f_tree);
    f_cand->excludes(f_exact, f_quasi, f_tree);
    f_exact->excludes(f_quasi, f_tree);
    f_quasi->excludes(f_tree);
    solve->callback([&] {
        jr::approval_election e = load_election(solve_election);
        jr::candidate_set w;
        std::string method;
        if (use_cc) {
            method = "greedy-cc";
            w = jr::greedy_cc(e, cc_mode == "stop"
                                     ? jr::greedy_cc_mode::stop_when_justifying
                                     : jr::greedy_cc_mode::run_to_k);
        } else if (use_cand) {
            method = "greedy-candidate";
            w = jr::greedy_candidate(e);
        } else if (use_exact) {
            method = "exact";
            w = jr::exact_min_justifying(e, budget);
        } else if (use_quasi) {
            method = "quasi";
            w = jr::quasi_poly_min(e);
        } else if (!tree_file.empty()) {
            method = "tree";
            w = jr::solve_on_tree(e, jr::parse_tree(read_file(tree_file)));
        } else {
            throw CLI::ValidationError("solve",
                                       "pick one of --greedy-cc, --greedy-candidate, "
                                       "--exact, --quasi, --tree");
        }
        std::cout << "method: " << method << '\n';
        print_group(w);
        std::cout << "justifying: " << (jr::is_justifying(e, w) ? "yes" : "no")
                  << '\n';
        if (!output.empty()) write_file(output, w.to_string() + "\n");
    });

    // ---- tree -------------------------------------------------------------
    auto* tree = app.add_subcommand(
        "tree", "interval-model conversion and representation checks");
    std::string from_vcr, validate_tree, tree_election;
    tree->add_option("--from-vcr", from_vcr, "build a tree from a .vcr file");
    tree->add_option("--validate", validate_tree, "tree file to check");
    tree->add_option("--election", tree_election, "election file for --validate");
    tree->callback([&] {
        if (!from_vcr.empty()) {
            jr::rooted_candidate_tree t =
                jr::vcr_to_tree(jr::parse_interval_model(read_file(from_vcr)));
            std::string text = jr::serialize_tree(t);
            if (output.empty())
                std::cout << text;
            else
                write_file(output, text);
            return;
        }
        if (!validate_tree.empty()) {
            if (tree_election.empty())
                throw CLI::ValidationError("tree", "--validate needs --election");
            jr::approval_election e = load_election(tree_election);
            bool ok = jr::validate_tree_representation(
                e, jr::parse_tree(read_file(validate_tree)));
            std::cout << "valid: " << (ok ? "yes" : "no") << '\n';
            if (!ok) code = exit_verification;
            return;
        }
        throw CLI::ValidationError("tree", "pick --from-vcr or --validate");
    });

    // ---- balance ----------------------------------------------------------
    auto* balance = app.add_subcommand(
        "balance", "JR committees with gender constraints");
    std::string balance_election;
    bool both_genders = false, min_imb = false;
    balance->add_option("election", balance_election,
                        "election file with a genders header")->required();
    auto* f_both = balance->add_flag("--both-genders", both_genders,
                                     "guarantee one member of each gender");
    auto* f_min = balance->add_flag("--min-imbalance", min_imb,
                                    "heuristically minimize the imbalance");
    f_both->excludes(f_min);
    balance->callback([&] {
        jr::approval_election e = load_election(balance_election);
        if (!e.genders())
            throw std::invalid_argument("election file has no genders header");
        const jr::gender_assignment& genders = *e.genders();
        jr::candidate_set w;
        if (both_genders)
            w = jr::committee_both_genders(e, genders);
        else if (min_imb)
            w = jr::min_imbalance_heuristic(e, genders);
        else
            throw CLI::ValidationError("balance",
                                       "pick --both-genders or --min-imbalance");
        std::cout << "committee: " << w.to_string() << '\n'
                  << "size: " << w.size() << '\n'
                  << "imbalance: " << jr::imbalance(w, genders) << '\n'
                  << "jr: " << (jr::is_jr_committee(e, w) ? "yes" : "no") << '\n';
        if (!output.empty()) write_file(output, w.to_string() + "\n");
    });

    // ---- gen --------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a random election");
    std::string gen_model = "ic";
    int gen_n = 100, gen_m = 20, gen_k = 5;
    double gen_p = 0.2, gen_r = 0.1;
    gen->add_option("--model", gen_model, "ic, e1d or e2d")
        ->check(CLI::IsMember({"ic", "e1d", "e2d"}));
    gen->add_option("-n,--voters", gen_n, "number of voters");
    gen->add_option("-m,--candidates", gen_m, "number of candidates");
    gen->add_option("-k,--committee", gen_k, "committee size");
    auto* opt_p = gen->add_option("-p,--probability", gen_p, "IC approval probability");
    auto* opt_r = gen->add_option("-r,--radius", gen_r, "Euclidean approval radius");
    gen->callback([&] {
        jr::model_kind model = jr::parse_model(gen_model);
        if (model == jr::model_kind::ic && opt_r->count() > 0)
            throw CLI::ValidationError("gen", "-r applies to Euclidean models only");
        if (model != jr::model_kind::ic && opt_p->count() > 0)
            throw CLI::ValidationError("gen", "-p applies to the IC model only");

        std::string appr;
        std::string vcr;
        switch (model) {
            case jr::model_kind::ic:
                appr = jr::serialize_election(
                    jr::gen_ic(gen_n, gen_m, gen_k, gen_p, seed));
                break;
            case jr::model_kind::euclid1d: {
                auto [e, iv] = jr::gen_euclid1d(gen_n, gen_m, gen_k, gen_r, seed);
                appr = jr::serialize_election(e);
                vcr = jr::serialize_interval_model(iv);
                break;
            }
            case jr::model_kind::euclid2d:
                appr = jr::serialize_election(
                    jr::gen_euclid2d(gen_n, gen_m, gen_k, gen_r, seed));
                break;
        }

        if (output.empty()) {
            std::cout << appr;
            if (!vcr.empty())
                std::cerr << "note: no --output given, interval model not written\n";
        } else {
            write_file(output, appr);
            if (!vcr.empty()) {
                std::string vcr_path = replace_extension(output, ".vcr");
                write_file(vcr_path, vcr);
                std::cerr << "wrote " << output << " and " << vcr_path << '\n';
            } else {
                std::cerr << "wrote " << output << '\n';
            }
        }
    });

    // ---- experiment ---------------------------------------------------------
    auto* experiment = app.add_subcommand(
        "experiment", "threshold and greedy-vs-exact sweeps");
    bool exp_threshold = false, exp_greedy = false;
    std::string config_path, plot_script_path, exp_model;
    int exp_n = -1, exp_m = -1, exp_k = -1, exp_trials = -1, fixture_k = 0;
    double exp_start = -1, exp_stop = -1, exp_step = -1;
    std::string exp_sizes;
    auto* f_thr = experiment->add_flag("--threshold", exp_threshold,
                                       "sample random groups per grid point");
    auto* f_gre = experiment->add_flag(
        "--greedy", exp_greedy, "compare greedy sizes against the exact optimum");
    f_thr->excludes(f_gre);
    experiment->add_option("--config", config_path, "key=value config file");
    experiment->add_option("--model", exp_model, "ic, e1d or e2d")
        ->check(CLI::IsMember({"ic", "e1d", "e2d"}));
    experiment->add_option("-n,--voters", exp_n, "voters per election");
    experiment->add_option("-m,--candidates", exp_m, "candidates per election");
    experiment->add_option("-k,--committee", exp_k, "committee size");
    experiment->add_option("--grid-start", exp_start, "first grid value");
    experiment->add_option("--grid-stop", exp_stop, "last grid value");
    experiment->add_option("--grid-step", exp_step, "grid increment");
    experiment->add_option("--trials", exp_trials, "elections per grid point");
    experiment->add_option("--sizes", exp_sizes,
                           "comma-separated group sizes (threshold)");
    experiment->add_option("--plot-script", plot_script_path,
                           "also emit a matplotlib script (needs --output)");
    experiment->add_option("--fixture-example2", fixture_k,
                           "emit one greedy-experiment row for the adversarial "
                           "fixture with this k");
    experiment->callback([&] {
        jr::experiment_config cfg;
        if (!config_path.empty())
            cfg = jr::experiment_config::from_file(read_file(config_path));
        if (!exp_model.empty()) cfg.model = jr::parse_model(exp_model);
        if (exp_n > 0) cfg.n = exp_n;
        if (exp_m > 0) cfg.m = exp_m;
        if (exp_k > 0) cfg.k = exp_k;
        if (exp_start >= 0) cfg.grid_start = exp_start;
        if (exp_stop >= 0) cfg.grid_stop = exp_stop;
        if (exp_step > 0) cfg.grid_step = exp_step;
        if (exp_trials > 0) cfg.trials = exp_trials;
        if (app.count("--seed") > 0) cfg.master_seed = seed;
        if (app.count("--budget") > 0) cfg.node_budget = budget;
        if (!output.empty()) cfg.output_path = output;
        if (!exp_sizes.empty()) {
            cfg.group_sizes.clear();
            std::stringstream ss(exp_sizes);
            std::string item;
            while (std::getline(ss, item, ','))
                cfg.group_sizes.push_back(std::stoi(item));
        }

        std::string csv;
        jr::experiment_kind kind;
        if (fixture_k > 0) {
            kind = jr::experiment_kind::greedy;
            csv = jr::greedy_csv({jr::run_greedy_fixture(fixture_k, cfg.node_budget)});
        } else if (exp_threshold) {
            kind = jr::experiment_kind::threshold;
            csv = jr::threshold_csv(jr::run_threshold_experiment(cfg));
        } else if (exp_greedy) {
            kind = jr::experiment_kind::greedy;
            csv = jr::greedy_csv(jr::run_greedy_experiment(cfg));
        } else {
            throw CLI::ValidationError("experiment",
                                       "pick --threshold, --greedy or "
                                       "--fixture-example2");
        }

        if (cfg.output_path.empty())
            std::cout << csv;
        else
            write_file(cfg.output_path, csv);

        if (!plot_script_path.empty()) {
            if (cfg.output_path.empty())
                throw CLI::ValidationError("experiment", "--plot-script needs --output");
            std::string header = csv.substr(0, csv.find('\n'));
            write_file(plot_script_path,
                       jr::emit_plot_script(cfg.output_path, header, kind, cfg));
        }
    });

    // ---- count-jr -----------------------------------------------------------
    auto* count = app.add_subcommand("count-jr", "count all JR committees");
    std::string count_election;
    count->add_option("election", count_election, "election file (.appr)")->required();
    count->callback([&] {
        jr::approval_election e = load_election(count_election);
        std::cout << "jr-committees: " << jr::count_jr_committees(e) << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        if (err.get_name() == "CallForHelp" || err.get_name() == "CallForAllHelp")
            return app.exit(err);
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    } catch (const jr::budget_exceeded& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_budget;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_usage;
    }
    return code;
}
