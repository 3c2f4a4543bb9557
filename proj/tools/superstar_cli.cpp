// Command-line front end: simulation sweeps, theory tables, edge-list
// analysis, convergence and equivalence checks. Emits plot-ready CSV/JSON.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superstar/branching.hpp"
#include "superstar/ingest.hpp"
#include "superstar/model.hpp"
#include "superstar/parallel.hpp"
#include "superstar/stats.hpp"
#include "superstar/theory.hpp"

using json = nlohmann::ordered_json;
using namespace superstar;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Output sink: explicit path or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out;

    explicit Sink(const std::string& path) {
        if (path.empty() || path == "-") {
            out = &std::cout;
        } else {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            out = &file;
        }
    }
    std::ostream& stream() { return *out; }
};

void write_config_comment(std::ostream& out, const json& config) {
    out << "# config: " << config.dump() << '\n';
}

std::vector<std::int64_t> parse_n_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const double v = std::stod(tok);  // accepts 1e6 style
        out.push_back(static_cast<std::int64_t>(std::llround(v)));
    }
    if (out.empty()) throw CLI::ValidationError("--n-list", "empty list");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1])
            throw CLI::ValidationError("--n-list", "must be strictly increasing");
    return out;
}

stats::Pmf pooled_degree_pmf(const std::vector<RootedTree>& trees) {
    std::map<std::int64_t, std::int64_t> counts;
    std::int64_t total = 0;
    for (const auto& tree : trees) {
        for (std::int64_t i = 0; i < tree.n_vertices(); ++i) {
            if (i == tree.root) continue;
            ++counts[tree.degree[i]];
            ++total;
        }
    }
    stats::Pmf pmf;
    pmf.total_count = total;
    for (const auto& [k, c] : counts)
        pmf.mass[k] = static_cast<double>(c) / static_cast<double>(total);
    return pmf;
}

// ---------------------------------------------------------------------------
// theory
// ---------------------------------------------------------------------------

int run_theory(double p, std::int64_t k_max, const std::string& out_path,
               const std::string& format) {
    const auto mc = theory::constants(p);
    json config = {{"subcommand", "theory"}, {"p", p}, {"kmax", k_max}, {"format", format}};
    Sink sink(out_path);
    auto& out = sink.stream();

    if (format == "json") {
        json doc;
        doc["config"] = config;
        doc["constants"] = {{"p", mc.p},
                            {"c", mc.c},
                            {"alpha", mc.alpha},
                            {"gamma", mc.gamma},
                            {"lambert_w_inv_e", mc.lambert_w_inv_e},
                            {"height_const", mc.height_const},
                            {"beta", mc.beta},
                            {"tail_const", mc.tail_const}};
        json rows = json::array();
        for (std::int64_t k = 1; k <= k_max; ++k)
            rows.push_back({{"k", k},
                            {"nu_sm", theory::nu_sm(k, p)},
                            {"nu_pa", theory::nu_pa(k)},
                            {"p_geq_k", theory::p_geq_k_infty(k, p)}});
        doc["pmf"] = rows;
        out << doc.dump(2) << '\n';
    } else {
        write_config_comment(out, config);
        out << "# c=" << fmt17(mc.c) << " alpha=" << fmt17(mc.alpha) << " gamma=" << fmt17(mc.gamma)
            << " lambert_w_inv_e=" << fmt17(mc.lambert_w_inv_e)
            << " height_const=" << fmt17(mc.height_const) << " beta=" << fmt17(mc.beta)
            << " tail_const=" << fmt17(mc.tail_const) << '\n';
        out << "k,nu_sm,nu_pa,p_geq_k\n";
        for (std::int64_t k = 1; k <= k_max; ++k)
            out << k << ',' << fmt17(theory::nu_sm(k, p)) << ',' << fmt17(theory::nu_pa(k)) << ','
                << fmt17(theory::p_geq_k_infty(k, p)) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

int run_simulate(const std::string& model, std::int64_t n, double p, std::uint64_t seed,
                 std::int64_t reps, const std::string& out_dir, const std::string& format,
                 unsigned threads) {
    json config = {{"subcommand", "simulate"}, {"model", model}, {"n", n},
                   {"p", p},                   {"seed", seed},   {"reps", reps},
                   {"format", format}};

    if (model == "bp") {
        auto runs = run_replications(reps, threads, [&](std::int64_t rep) {
            auto rng = SplitMix64::for_replication(seed, static_cast<std::uint64_t>(rep));
            return simulate_bp(p, n, rng);
        });
        for (std::int64_t rep = 0; rep < reps; ++rep) {
            const auto& bp = runs[rep];
            if (!out_dir.empty()) {
                std::ofstream f(out_dir + "/bp_rep" + std::to_string(rep) + ".csv");
                write_config_comment(f, config);
                write_bp_csv(bp, f);
                // tau and Bir sidecar
                json side;
                side["config"] = config;
                side["rep"] = rep;
                side["tau"] = bp.tau;
                json bir = json::array();
                for (double t : bp.first_birth) bir.push_back(t);
                side["bir"] = bir;
                std::ofstream s(out_dir + "/bp_rep" + std::to_string(rep) + ".json");
                s << side.dump(2) << '\n';
            }
            std::cout << "rep " << rep << ": n=" << bp.n_vertices() << " blue=" << bp.n_blue
                      << " red=" << bp.n_red << " tau_n=" << fmt17(bp.clock)
                      << " max_d=" << bp.first_birth.size() - 1 << '\n';
        }
        return kExitOk;
    }

    const bool is_superstar = model == "superstar";
    auto trees = run_replications(reps, threads, [&](std::int64_t rep) {
        auto rng = SplitMix64::for_replication(seed, static_cast<std::uint64_t>(rep));
        if (is_superstar) return grow_superstar({p, n, seed}, rng);
        return grow_preferential(n, rng);
    });

    Sink sink("");
    for (std::int64_t rep = 0; rep < reps; ++rep) {
        const auto& tree = trees[rep];
        if (!out_dir.empty()) {
            std::ofstream f(out_dir + "/tree_rep" + std::to_string(rep) + ".csv");
            write_config_comment(f, config);
            write_tree_csv(tree, f);
        }
        std::cout << "rep " << rep << ": n=" << tree.n_vertices()
                  << " height=" << stats::tree_height(tree);
        if (is_superstar)
            std::cout << " superstar_fraction=" << fmt17(stats::superstar_fraction(tree))
                      << " max_nonsuperstar_degree=" << stats::max_nonsuperstar_degree(tree);
        std::cout << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

int run_analyze(const std::string& input, std::int64_t k_max, const std::string& out_path,
                const std::string& format) {
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot open input file: " + input);
    const auto edges = parse_edge_list(in);
    const auto summary = giant_component(edges);
    const auto report = analyze_component(summary, k_max);

    json config = {{"subcommand", "analyze"}, {"input", input}, {"kmax", k_max}, {"format", format}};
    Sink sink(out_path);
    auto& out = sink.stream();
    if (format == "json") {
        json doc;
        doc["config"] = config;
        doc["n_raw_lines"] = edges.n_raw_lines;
        doc["n_dropped"] = edges.n_dropped;
        std::ostringstream body;
        write_fit_report_json(report, body);
        doc["report"] = json::parse(body.str());
        out << doc.dump(2) << '\n';
    } else {
        write_config_comment(out, config);
        out << "# p_hat=" << fmt17(report.p_hat) << " n_vertices=" << summary.n_vertices
            << " n_edges=" << summary.n_edges << " d_max=" << summary.d_max
            << " superstar=" << summary.superstar_label
            << " excess_edges=" << summary.excess_edges << '\n';
        write_fit_report_csv(report, out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// converge: Monte Carlo sweeps against the four limit theorems
// ---------------------------------------------------------------------------

struct CheckRow {
    std::string name;
    double observed;
    double expected;
    std::string tolerance;
    bool pass;
};

int run_converge(double p, const std::string& n_list_str, std::int64_t reps, std::uint64_t seed,
                 const std::string& out_path, const std::string& format, unsigned threads) {
    const auto n_list = parse_n_list(n_list_str);
    const std::int64_t n_max = n_list.back();
    const auto mc = theory::constants(p);
    std::vector<CheckRow> rows;

    // Superstar strong law: deg(v0)/(n-1) -> p at the largest n.
    {
        auto fracs = run_replications(reps, threads, [&](std::int64_t rep) {
            auto rng = SplitMix64::for_replication(seed, static_cast<std::uint64_t>(rep));
            return stats::superstar_fraction(grow_superstar({p, n_max, seed}, rng));
        });
        double worst = 0.0;
        for (double f : fracs) worst = std::max(worst, std::abs(f - p));
        rows.push_back({"superstar_fraction_max_abs_err", worst, 0.0, "<= 0.01", worst <= 0.01});
    }

    // Degree law: averaged empirical pmf vs nu_sm for k = 1..5.
    {
        const std::int64_t pmf_reps = std::min<std::int64_t>(reps, 10);
        auto pmfs = run_replications(pmf_reps, threads, [&](std::int64_t rep) {
            auto rng = SplitMix64::for_replication(seed, 0x100000 + static_cast<std::uint64_t>(rep));
            return stats::degree_pmf(grow_superstar({p, n_max, seed}, rng), true);
        });
        double worst = 0.0;
        for (std::int64_t k = 1; k <= 5; ++k) {
            double avg = 0.0;
            for (const auto& pmf : pmfs) avg += pmf.at(k);
            avg /= static_cast<double>(pmf_reps);
            worst = std::max(worst, std::abs(avg - theory::nu_sm(k, p)) / theory::nu_sm(k, p));
        }
        rows.push_back({"degree_pmf_max_relerr_k1_5", worst, 0.0, "<= 0.05", worst <= 0.05});
    }

    // Max-degree exponent: median over reps at each n, log-log slope vs gamma.
    {
        auto median_max_degree = [&](bool superstar_model, std::uint64_t stream_base) {
            std::vector<std::pair<double, double>> points;
            for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
                const std::int64_t n = n_list[ni];
                auto maxima = run_replications(reps, threads, [&](std::int64_t rep) {
                    auto rng = SplitMix64::for_replication(
                        seed, stream_base + (static_cast<std::uint64_t>(ni) << 32) +
                                  static_cast<std::uint64_t>(rep));
                    if (superstar_model)
                        return static_cast<double>(
                            stats::max_nonsuperstar_degree(grow_superstar({p, n, seed}, rng)));
                    const auto tree = grow_preferential(n, rng);
                    return static_cast<double>(
                        *std::max_element(tree.degree.begin(), tree.degree.end()));
                });
                std::sort(maxima.begin(), maxima.end());
                points.emplace_back(static_cast<double>(n), maxima[maxima.size() / 2]);
            }
            return stats::loglog_slope(points).slope;
        };
        const double slope_sm = median_max_degree(true, 0x200000);
        const double slope_pa = median_max_degree(false, 0x300000);
        rows.push_back({"max_degree_slope_superstar", slope_sm, mc.gamma, "+/- 0.05",
                        std::abs(slope_sm - mc.gamma) <= 0.05});
        rows.push_back({"max_degree_slope_pa", slope_pa, 0.5, "in [0.45,0.55]",
                        slope_pa >= 0.45 && slope_pa <= 0.55});
    }

    // Height constant: mean H/log n at the largest n, monotone trend across n.
    {
        std::vector<double> means;
        for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
            const std::int64_t n = n_list[ni];
            // smaller n are cheap; oversample them so the trend steps are
            // resolved above sampling noise
            const std::int64_t n_reps = std::min<std::int64_t>(reps * (n_max / n), 64 * reps);
            auto hs = run_replications(n_reps, threads, [&](std::int64_t rep) {
                auto rng = SplitMix64::for_replication(
                    seed, 0x400000 + (static_cast<std::uint64_t>(ni) << 32) +
                              static_cast<std::uint64_t>(rep));
                return static_cast<double>(stats::tree_height(grow_superstar({p, n, seed}, rng))) /
                       std::log(static_cast<double>(n));
            });
            double mean = 0.0;
            for (double h : hs) mean += h;
            means.push_back(mean / static_cast<double>(n_reps));
        }
        const double final_err = std::abs(means.back() - mc.height_const) / mc.height_const;
        bool monotone = true;
        for (std::size_t i = 1; i < means.size(); ++i)
            if (std::abs(means[i] - mc.height_const) > std::abs(means[i - 1] - mc.height_const))
                monotone = false;
        rows.push_back({"height_over_logn_relerr", final_err, 0.0, "<= 0.15", final_err <= 0.15});
        rows.push_back({"height_trend_monotone", monotone ? 1.0 : 0.0, 1.0, "== 1", monotone});
    }

    json config = {{"subcommand", "converge"}, {"p", p},       {"n_list", n_list},
                   {"reps", reps},             {"seed", seed}, {"format", format}};
    Sink sink(out_path);
    auto& out = sink.stream();
    bool all_pass = true;
    if (format == "json") {
        json doc;
        doc["config"] = config;
        json jrows = json::array();
        for (const auto& r : rows) {
            jrows.push_back({{"check", r.name},
                             {"observed", r.observed},
                             {"expected", r.expected},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
            all_pass = all_pass && r.pass;
        }
        doc["checks"] = jrows;
        doc["all_pass"] = all_pass;
        out << doc.dump(2) << '\n';
    } else {
        write_config_comment(out, config);
        out << "check,observed,expected,tolerance,pass\n";
        for (const auto& r : rows) {
            out << r.name << ',' << fmt17(r.observed) << ',' << fmt17(r.expected) << ','
                << r.tolerance << ',' << (r.pass ? "true" : "false") << '\n';
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// equivalence: surgery(BP) vs the discrete model, pooled degree pmfs
// ---------------------------------------------------------------------------

int run_equivalence(double p, std::int64_t n, std::int64_t reps, std::uint64_t seed, double tol,
                    const std::string& out_path, const std::string& format, unsigned threads) {
    auto surgery_trees = run_replications(reps, threads, [&](std::int64_t rep) {
        auto rng = SplitMix64::for_replication(seed, static_cast<std::uint64_t>(rep));
        return surgery(simulate_bp(p, n, rng));
    });
    auto discrete_trees = run_replications(reps, threads, [&](std::int64_t rep) {
        auto rng = SplitMix64::for_replication(seed, 0x500000 + static_cast<std::uint64_t>(rep));
        return grow_superstar({p, n + 1, seed}, rng);
    });
    const double tv = stats::tv_distance(pooled_degree_pmf(surgery_trees),
                                         pooled_degree_pmf(discrete_trees));
    const bool pass = tv < tol;

    json config = {{"subcommand", "equivalence"}, {"p", p},       {"n", n},
                   {"reps", reps},                {"seed", seed}, {"tol", tol},
                   {"format", format}};
    Sink sink(out_path);
    auto& out = sink.stream();
    if (format == "json") {
        json doc;
        doc["config"] = config;
        doc["tv_distance"] = tv;
        doc["pass"] = pass;
        out << doc.dump(2) << '\n';
    } else {
        write_config_comment(out, config);
        out << "tv_distance,tol,pass\n";
        out << fmt17(tv) << ',' << fmt17(tol) << ',' << (pass ? "true" : "false") << '\n';
    }
    return pass ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Superstar random-tree model: simulation, theory tables, data analysis"};
    app.require_subcommand(1);

    unsigned threads = default_thread_count();
    app.add_option("--threads", threads, "worker threads for replications");

    double p = 0.5;
    std::int64_t n = 1000;
    std::int64_t theory_kmax = 10, analyze_kmax = 4;
    std::int64_t sim_reps = 1, conv_reps = 20, eq_reps = 200;
    std::uint64_t seed = 1;
    std::string out_path, out_dir, format = "csv", model = "superstar", input, n_list = "1000,10000,100000";
    double tol = 0.01;

    auto* theory_cmd = app.add_subcommand("theory", "closed-form constants and pmf tables");
    theory_cmd->add_option("--p", p, "model parameter in (0,1)")->required();
    theory_cmd->add_option("--kmax", theory_kmax, "largest degree in the table");
    theory_cmd->add_option("--out", out_path, "output path (default stdout)");
    theory_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* sim_cmd = app.add_subcommand("simulate", "grow trees or run the branching process");
    sim_cmd->add_option("--model", model)->check(CLI::IsMember({"superstar", "pa", "bp"}));
    sim_cmd->add_option("--n", n, "vertex count")->required();
    sim_cmd->add_option("--p", p, "model parameter (superstar and bp)");
    sim_cmd->add_option("--seed", seed, "RNG seed");
    sim_cmd->add_option("--reps", sim_reps, "replications")->check(CLI::PositiveNumber);
    sim_cmd->add_option("--out-dir", out_dir, "directory for per-rep dumps");
    sim_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* analyze_cmd = app.add_subcommand("analyze", "fit the degree law to an edge list");
    analyze_cmd->add_option("input", input, "edge-list file")->required();
    analyze_cmd->add_option("--kmax", analyze_kmax, "degrees in the fit table");
    analyze_cmd->add_option("--out", out_path, "output path (default stdout)");
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* conv_cmd = app.add_subcommand("converge", "Monte Carlo sweeps vs the limit theorems");
    conv_cmd->add_option("--p", p)->required();
    conv_cmd->add_option("--n-list", n_list, "comma-separated, strictly increasing");
    conv_cmd->add_option("--reps", conv_reps, "replications per n")->check(CLI::PositiveNumber);
    conv_cmd->add_option("--seed", seed);
    conv_cmd->add_option("--out", out_path, "output path (default stdout)");
    conv_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* eq_cmd = app.add_subcommand("equivalence", "surgery(BP) vs discrete model TV test");
    eq_cmd->add_option("--p", p)->required();
    eq_cmd->add_option("--n", n, "BP population size")->required();
    eq_cmd->add_option("--reps", eq_reps)->check(CLI::PositiveNumber);
    eq_cmd->add_option("--seed", seed);
    eq_cmd->add_option("--tol", tol, "TV pass threshold");
    eq_cmd->add_option("--out", out_path, "output path (default stdout)");
    eq_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    // parent options like --threads remain usable after a subcommand name
    for (auto* sub : {theory_cmd, sim_cmd, analyze_cmd, conv_cmd, eq_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (theory_cmd->parsed()) return run_theory(p, theory_kmax, out_path, format);
        if (sim_cmd->parsed()) return run_simulate(model, n, p, seed, sim_reps, out_dir, format, threads);
        if (analyze_cmd->parsed()) return run_analyze(input, analyze_kmax, out_path, format);
        if (conv_cmd->parsed()) return run_converge(p, n_list, conv_reps, seed, out_path, format, threads);
        if (eq_cmd->parsed()) return run_equivalence(p, n, eq_reps, seed, tol, out_path, format, threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
