#ifndef SUPERSTAR_STATS_HPP
#define SUPERSTAR_STATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "superstar/ingest.hpp"
#include "superstar/tree.hpp"

namespace superstar::stats {

// Sparse degree pmf; total_count present for empirical distributions.
struct Pmf {
    std::map<std::int64_t, double> mass;
    std::optional<std::int64_t> total_count;

    double at(std::int64_t k) const {
        auto it = mass.find(k);
        return it == mass.end() ? 0.0 : it->second;
    }
    bool is_normalized(double tol = 1e-9) const;
};

struct ScalingFit {
    std::vector<std::pair<double, double>> points;  // (n, statistic)
    double slope;
    double intercept;  // of log y vs log n
};

Pmf degree_pmf(const RootedTree& tree, bool exclude_root);

// deg(v0) / (n - 1), the fraction of non-superstars attached to the superstar.
double superstar_fraction(const RootedTree& tree);

std::int64_t max_nonsuperstar_degree(const RootedTree& tree);

std::int64_t tree_height(const RootedTree& tree);

// Plug-in estimator p_hat = d_max / |V| from a giant-component summary.
double estimate_p(const ComponentSummary& summary);

// |model(k) - empirical(k)| / model(k); model mass at k must be positive.
double relative_error(std::int64_t k, const Pmf& empirical, const Pmf& model);

// Half L1 distance over the union support; both inputs must be normalized.
double tv_distance(const Pmf& a, const Pmf& b);

// Least-squares slope of log y against log n; needs >= 3 positive points.
ScalingFit loglog_slope(const std::vector<std::pair<double, double>>& points);

} // namespace superstar::stats

#endif
