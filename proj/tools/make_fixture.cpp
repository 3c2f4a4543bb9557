// Generates a synthetic retweet-graph-shaped edge list: one hub of the
// requested maximal degree inside an otherwise tree-like giant component,
// plus a few extra edges. Used because the original Twitter data is not
// redistributable.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "superstar/rng.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Synthetic giant-component fixture generator"};
    std::int64_t n_vertices = 1724, n_edges = 1814, d_max = 992;
    std::uint64_t seed = 42;
    std::string out_path = "-", hub_label = "hub";
    app.add_option("--vertices", n_vertices, "component size");
    app.add_option("--edges", n_edges, "edge count (>= vertices - 1)");
    app.add_option("--dmax", d_max, "hub degree");
    app.add_option("--seed", seed);
    app.add_option("--hub-label", hub_label);
    app.add_option("--out", out_path, "output path (default stdout)");
    CLI11_PARSE(app, argc, argv);

    if (n_edges < n_vertices - 1 || d_max < 1 || d_max > n_vertices - 1) {
        std::cerr << "error: infeasible fixture shape\n";
        return 2;
    }

    superstar::SplitMix64 rng(seed);
    auto label = [](std::int64_t i) { return "u" + std::to_string(i); };

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (out_path != "-") {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return 2;
        }
        out = &file;
    }

    std::set<std::pair<std::int64_t, std::int64_t>> used;  // non-hub extra edges, (lo, hi)
    *out << "# synthetic fixture: vertices=" << n_vertices << " edges=" << n_edges
         << " dmax=" << d_max << " seed=" << seed << '\n';

    // hub spokes: u1..u_dmax
    for (std::int64_t i = 1; i <= d_max; ++i) *out << hub_label << ' ' << label(i) << '\n';
    // remaining vertices hang off random earlier non-hub vertices
    for (std::int64_t i = d_max + 1; i < n_vertices; ++i) {
        const std::int64_t target = 1 + static_cast<std::int64_t>(
            rng.uniform_index(static_cast<std::uint64_t>(i - 1)));
        used.insert({target, i});
        *out << label(target) << ' ' << label(i) << '\n';
    }
    // extra edges between non-adjacent non-hub pairs
    std::int64_t extra = n_edges - (n_vertices - 1);
    while (extra > 0) {
        std::int64_t a = 1 + static_cast<std::int64_t>(
            rng.uniform_index(static_cast<std::uint64_t>(n_vertices - 1)));
        std::int64_t b = 1 + static_cast<std::int64_t>(
            rng.uniform_index(static_cast<std::uint64_t>(n_vertices - 1)));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!used.insert({a, b}).second) continue;
        *out << label(a) << ' ' << label(b) << '\n';
        --extra;
    }
    return 0;
}
