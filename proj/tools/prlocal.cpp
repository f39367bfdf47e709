// Command line front end: run estimators over edge-list or generated graphs,
// generate hard instance families, and measure query-count scaling.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "prlocal/baselines.hpp"
#include "prlocal/exact.hpp"
#include "prlocal/hard_instances.hpp"
#include "prlocal/json_io.hpp"
#include "prlocal/rounding_push.hpp"
#include "prlocal/stats.hpp"
#include "prlocal/synth.hpp"

using namespace prlocal;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr NodeId kSummaryExactLimit = 65536;  // exact comparison only below this size

std::unordered_map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::unordered_map<std::string, std::string> kv;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto j = nlohmann::json::parse(text);
        for (auto& [k, v] : j.items())
            kv[k] = v.is_string() ? v.get<std::string>() : v.dump();
        return kv;
    }
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line is not key=value: " + line);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

DirectedGraph graph_from_spec(const std::string& spec, std::uint64_t seed) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    std::unordered_map<std::string, std::uint64_t> args;
    if (colon != std::string::npos) {
        std::istringstream in(spec.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("generator spec needs key=value pairs: " + spec);
            args[item.substr(0, eq)] = std::stoull(item.substr(eq + 1));
        }
    }
    auto need = [&](const char* key) {
        auto it = args.find(key);
        if (it == args.end())
            throw std::invalid_argument(std::string("generator spec missing ") + key + ": " + spec);
        return it->second;
    };
    if (kind == "regular")
        return random_regular(static_cast<NodeId>(need("n")), static_cast<NodeId>(need("d")),
                              splitmix64(seed));
    if (kind == "mixed")
        return random_mixed(static_cast<NodeId>(need("n")), static_cast<NodeId>(need("maxd")),
                            splitmix64(seed));
    throw std::invalid_argument("unknown generator kind (use regular: or mixed:): " + spec);
}

struct EstimateOptions {
    std::string graph_path;
    std::string gen_spec;
    std::string algo;
    double alpha = 0.2;
    NodeId target = 0;
    int trials = 1;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    double budget_const = kDefaultBudgetConst;
    double r_max = 0.0;
    std::uint64_t n_walks = 10000;
    std::string out_path;
    std::string format = "jsonl";
    // parameter block overrides
    double epsilon_override = 0.0;
    std::uint64_t n_r_override = 0;
    int i_prime_override = -1;
    int levels_override = 0;
};

nlohmann::json run_one_trial(const DirectedGraph& g, const EstimateOptions& opt, int trial) {
    const std::uint64_t trial_seed = mix_seed(opt.seed, static_cast<std::uint64_t>(trial) + 1);
    OracleSession session(g, trial_seed);
    const std::uint64_t n = g.num_nodes(), m = g.num_edges();
    const NodeId din = g.max_in_degree(), dout = g.max_out_degree();

    nlohmann::json row;
    if (opt.algo == "adaptive") {
        row = nlohmann::json::parse(to_json_string(adaptive_estimate(
            session, opt.target, n, m, din, dout, opt.alpha, opt.budget_const)));
    } else if (opt.algo == "rounding_push") {
        AlgoParams params = compute_params(n, m, din, dout, opt.alpha);
        if (opt.epsilon_override > 0.0) params.epsilon = opt.epsilon_override;
        if (opt.n_r_override > 0) params.n_r = opt.n_r_override;
        if (opt.i_prime_override >= 0) params.i_prime = opt.i_prime_override;
        if (opt.levels_override > 0) params.levels = opt.levels_override;
        if (!(opt.r_max > 0.0))
            throw std::invalid_argument("algorithm rounding_push needs --r-max");
        params.r_max = opt.r_max;
        row = nlohmann::json::parse(
            to_json_string(rounding_push_run(session, opt.target, params)));
    } else if (opt.algo == "plain_mc") {
        row = nlohmann::json::parse(
            to_json_string(plain_mc(session, opt.target, opt.alpha, opt.n_walks)));
    } else if (opt.algo == "bippr") {
        const double r_max = opt.r_max > 0.0 ? opt.r_max : 0.25;
        row = nlohmann::json::parse(
            to_json_string(bippr(session, opt.target, opt.alpha, r_max, opt.n_walks)));
    } else {
        throw std::invalid_argument("unknown algorithm " + opt.algo);
    }
    row["trial"] = trial;
    row["algo"] = opt.algo;
    return row;
}

std::string csv_trial_row(const nlohmann::json& row) {
    std::ostringstream out;
    out.precision(17);
    const auto& q = row["queries"];
    out << row["trial"].get<int>() << ',' << row["algo"].get<std::string>() << ','
        << row["estimate"].get<double>() << ',' << q["indeg"].get<std::uint64_t>() << ','
        << q["outdeg"].get<std::uint64_t>() << ',' << q["parent"].get<std::uint64_t>() << ','
        << q["child"].get<std::uint64_t>() << ',' << q["jump"].get<std::uint64_t>() << ','
        << q["total"].get<std::uint64_t>() << ',' << row["seed"].get<std::uint64_t>() << ','
        << row["elapsed_ms"].get<double>();
    return out.str();
}

int cmd_estimate(const EstimateOptions& opt) {
    const DirectedGraph g = opt.graph_path.empty() ? graph_from_spec(opt.gen_spec, opt.seed)
                                                   : load_edge_list(opt.graph_path);
    g.check_node(opt.target);

    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + opt.out_path);
    }
    std::ostream& out = opt.out_path.empty() ? std::cout : file;

    if (opt.algo == "exact") {
        const double value = exact_pagerank(g, opt.alpha, 1e-12)[opt.target];
        if (opt.format == "csv") {
            out << "trial,algo,estimate,indeg,outdeg,parent,child,jump,total_queries,seed,"
                   "elapsed_ms\n";
            out << "0,exact," << std::setprecision(17) << value << ",0,0,0,0,0,0," << opt.seed
                << ",0\n";
        } else {
            nlohmann::json row{{"trial", 0},    {"algo", "exact"},      {"estimate", value},
                               {"seed", opt.seed}, {"elapsed_ms", 0.0},
                               {"queries",
                                {{"indeg", 0},
                                 {"outdeg", 0},
                                 {"parent", 0},
                                 {"child", 0},
                                 {"jump", 0},
                                 {"total", 0}}}};
            out << row.dump() << '\n';
        }
        return 0;
    }

    std::vector<nlohmann::json> rows(opt.trials);
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (int i = 0; i < opt.trials; ++i) rows[i] = run_one_trial(g, opt, i);
    } else {
        std::vector<std::thread> workers;
        std::atomic<int> next{0};
        std::atomic<bool> failed{false};
        std::string error;
        std::mutex error_mutex;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (int i = next.fetch_add(1); i < opt.trials; i = next.fetch_add(1)) {
                    try {
                        rows[i] = run_one_trial(g, opt, i);
                    } catch (const std::exception& e) {
                        std::scoped_lock lock(error_mutex);
                        failed = true;
                        error = e.what();
                        return;
                    }
                }
            });
        }
        for (auto& t : workers) t.join();
        if (failed) throw std::runtime_error(error);
    }

    if (opt.format == "csv") {
        out << "trial,algo,estimate,indeg,outdeg,parent,child,jump,total_queries,seed,"
               "elapsed_ms\n";
        for (const auto& row : rows) out << csv_trial_row(row) << '\n';
    } else {
        for (const auto& row : rows) out << row.dump() << '\n';
    }

    // closing summary against the exact score on graphs small enough to solve
    if (opt.format == "jsonl" && g.num_nodes() <= kSummaryExactLimit) {
        const double truth = exact_pagerank(g, opt.alpha, 1e-12)[opt.target];
        int failures = 0;
        double mean_estimate = 0.0;
        for (const auto& row : rows) {
            const double est = row["estimate"].get<double>();
            mean_estimate += est;
            if (std::abs(est - truth) >= 0.5 * truth) ++failures;
        }
        mean_estimate /= static_cast<double>(rows.size());
        nlohmann::json summary{{"summary", true},
                               {"trials", opt.trials},
                               {"exact", truth},
                               {"mean_estimate", mean_estimate},
                               {"failure_fraction",
                                static_cast<double>(failures) / static_cast<double>(opt.trials)}};
        out << summary.dump() << '\n';
    }
    return 0;
}

int cmd_gen_hard(std::uint64_t n, std::uint64_t m, NodeId din, NodeId dout, double alpha, int p,
                 std::uint64_t seed, const std::string& outdir, double v_factor, double y_factor) {
    HardFamilyOptions options;
    options.v_size_factor = v_factor;
    options.y_size_factor = y_factor;
    HardFamily family = build_hard_family(n, m, din, dout, alpha, p, seed, options);
    export_family(family, outdir);
    std::cout << "wrote " << family.graphs.size() << " graphs + manifest.json to " << outdir
              << " (t=" << family.t << ", |V|=" << family.size_v << ", |Y|=" << family.size_y
              << ")\n";
    return 0;
}

int cmd_scaling(std::vector<std::uint64_t> sizes, NodeId d, double alpha, int trials,
                std::uint64_t seed, const std::string& out_path, double budget_const) {
    if (sizes.size() < 3) throw std::invalid_argument("scaling needs at least 3 sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()))
        throw std::invalid_argument("sizes must be ascending");

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    out << "algo,n,mean_queries,stderr\n";
    out.precision(17);

    std::vector<std::pair<double, double>> adaptive_pts, plain_pts;
    for (std::uint64_t n : sizes) {
        const DirectedGraph g = random_regular(static_cast<NodeId>(n), d, mix_seed(seed, n));
        const ScoreVector pi = exact_pagerank(g, alpha, 1e-12);
        // benchmark target: the median-score node, stable across trials
        std::vector<NodeId> order(g.num_nodes());
        std::iota(order.begin(), order.end(), NodeId{0});
        std::nth_element(order.begin(), order.begin() + order.size() / 2, order.end(),
                         [&](NodeId a, NodeId b) { return pi[a] < pi[b]; });
        const NodeId t = order[order.size() / 2];
        // plain Monte Carlo gets the walk count that matches the target accuracy
        const auto walks = static_cast<std::uint64_t>(std::ceil(16.0 / pi[t]));

        std::vector<double> q_adaptive, q_plain;
        for (int i = 0; i < trials; ++i) {
            OracleSession sa(g, mix_seed(seed, 1000 * n + i));
            q_adaptive.push_back(static_cast<double>(
                adaptive_estimate(sa, t, n, g.num_edges(), d, d, alpha, budget_const)
                    .queries.total()));
            OracleSession sp(g, mix_seed(seed, 2000 * n + i));
            q_plain.push_back(
                static_cast<double>(plain_mc(sp, t, alpha, walks).queries.total()));
        }
        out << "adaptive," << n << ',' << mean(q_adaptive) << ',' << standard_error(q_adaptive)
            << '\n';
        out << "plain_mc," << n << ',' << mean(q_plain) << ',' << standard_error(q_plain) << '\n';
        adaptive_pts.push_back({static_cast<double>(n), mean(q_adaptive)});
        plain_pts.push_back({static_cast<double>(n), mean(q_plain)});
    }
    std::cout << "slope,adaptive," << loglog_slope(adaptive_pts) << '\n';
    std::cout << "slope,plain_mc," << loglog_slope(plain_pts) << '\n';
    return 0;
}

// Config files hold estimate options as key=value or a flat JSON object;
// values become defaults, so explicit flags still win.
void apply_config_defaults(CLI::App* est, int argc, char** argv) {
    std::string config_path;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc)
            config_path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            config_path = arg.substr(9);
    }
    if (config_path.empty()) return;
    for (const auto& [key, value] : load_config_file(config_path)) {
        CLI::Option* opt = est->get_option_no_throw("--" + key);
        if (!opt) throw std::invalid_argument("unknown config key: " + key);
        opt->default_val(value);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local single-node PageRank estimation in the arc-centric query model"};
    app.require_subcommand(1);

    EstimateOptions est;
    std::string config_path;
    CLI::App* estimate = app.add_subcommand("estimate", "run an estimator and emit report rows");
    auto* graph_opt = estimate->add_option("--graph", est.graph_path, "edge-list file");
    auto* gen_opt = estimate->add_option(
        "--gen", est.gen_spec, "generator spec: regular:n=..,d=.. or mixed:n=..,maxd=..");
    graph_opt->excludes(gen_opt);
    estimate->add_option("--algo", est.algo, "estimator")
        ->check(CLI::IsMember({"exact", "rounding_push", "adaptive", "plain_mc", "bippr"}));
    estimate->add_option("--alpha", est.alpha, "termination probability")->default_val("0.2");
    estimate->add_option("--target", est.target, "target node id")->default_val("0");
    estimate->add_option("--trials", est.trials, "independent runs")
        ->default_val("1")
        ->check(CLI::PositiveNumber);
    estimate->add_option("--seed", est.seed, "master seed")
        ->envname("PRLOCAL_SEED")
        ->default_val(std::to_string(kDefaultSeed));
    estimate->add_option("--jobs", est.jobs, "concurrent trials")->default_val("1");
    estimate->add_option("--budget-const", est.budget_const, "adaptive budget constant")
        ->default_val(std::to_string(kDefaultBudgetConst));
    estimate->add_option("--r-max", est.r_max, "push threshold (rounding_push, bippr)");
    estimate->add_option("--n-walks", est.n_walks, "walks for plain_mc/bippr")
        ->default_val("10000");
    estimate->add_option("--out", est.out_path, "output file (default stdout)");
    estimate->add_option("--format", est.format, "row format")
        ->default_val("jsonl")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    estimate->add_option("--config", config_path, "key=value or JSON config file");
    estimate->add_option("--epsilon", est.epsilon_override, "override threshold epsilon");
    estimate->add_option("--n-r", est.n_r_override, "override walk count n_r");
    estimate->add_option("--i-prime", est.i_prime_override, "override extension length");
    estimate->add_option("--levels", est.levels_override, "override level count L");

    std::uint64_t gh_n = 0, gh_m = 0, gh_seed = kDefaultSeed;
    NodeId gh_din = 0, gh_dout = 0;
    double gh_alpha = 0.2, gh_vfac = 1.0, gh_yfac = 1.5;
    int gh_p = 2;
    std::string gh_out;
    CLI::App* gen_hard =
        app.add_subcommand("gen-hard", "generate a hard instance family with a manifest");
    gen_hard->add_option("--n", gh_n, "node count")->required();
    gen_hard->add_option("--m", gh_m, "edge count")->required();
    gen_hard->add_option("--din", gh_din, "max in-degree")->required();
    gen_hard->add_option("--dout", gh_dout, "max out-degree")->required();
    gen_hard->add_option("--alpha", gh_alpha, "termination probability")->default_val("0.2");
    gen_hard->add_option("--p", gh_p, "instances beyond the base graph")->default_val("2");
    gen_hard->add_option("--seed", gh_seed, "master seed")
        ->envname("PRLOCAL_SEED")
        ->default_val(std::to_string(kDefaultSeed));
    gen_hard->add_option("--out", gh_out, "output directory")->required();
    gen_hard->add_option("--v-factor", gh_vfac, "V size multiplier")->default_val("1.0");
    gen_hard->add_option("--y-factor", gh_yfac, "Y size multiplier")->default_val("1.5");

    std::vector<std::uint64_t> sc_sizes;
    NodeId sc_d = 2;
    double sc_alpha = 0.5, sc_budget = kDefaultBudgetConst;
    int sc_trials = 10;
    std::uint64_t sc_seed = kDefaultSeed;
    std::string sc_out;
    CLI::App* scaling =
        app.add_subcommand("scaling", "query counts vs n for adaptive and plain Monte Carlo");
    scaling->add_option("--sizes", sc_sizes, "ascending node counts (>= 3)")
        ->required()
        ->delimiter(',');
    scaling->add_option("--d", sc_d, "regular degree")->default_val("2");
    scaling->add_option("--alpha", sc_alpha, "termination probability")->default_val("0.5");
    scaling->add_option("--trials", sc_trials, "trials per size")->default_val("10");
    scaling->add_option("--seed", sc_seed, "master seed")
        ->envname("PRLOCAL_SEED")
        ->default_val(std::to_string(kDefaultSeed));
    scaling->add_option("--out", sc_out, "CSV output file (default stdout)");
    scaling->add_option("--budget-const", sc_budget, "adaptive budget constant")
        ->default_val(std::to_string(kDefaultBudgetConst));

    try {
        apply_config_defaults(estimate, argc, argv);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(estimate)) {
            if (est.graph_path.empty() == est.gen_spec.empty())
                throw std::invalid_argument("estimate needs exactly one of --graph or --gen");
            const bool known = est.algo == "exact" || est.algo == "rounding_push" ||
                               est.algo == "adaptive" || est.algo == "plain_mc" ||
                               est.algo == "bippr";
            if (!known) throw std::invalid_argument("unknown algorithm: '" + est.algo + "'");
            return cmd_estimate(est);
        }
        if (app.got_subcommand(gen_hard))
            return cmd_gen_hard(gh_n, gh_m, gh_din, gh_dout, gh_alpha, gh_p, gh_seed, gh_out,
                                gh_vfac, gh_yfac);
        if (app.got_subcommand(scaling))
            return cmd_scaling(sc_sizes, sc_d, sc_alpha, sc_trials, sc_seed, sc_out, sc_budget);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
