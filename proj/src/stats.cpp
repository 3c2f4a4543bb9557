#include "superstar/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace superstar::stats {

bool Pmf::is_normalized(double tol) const {
    double total = 0.0;
    for (const auto& [k, m] : mass) {
        if (m < 0.0) return false;
        total += m;
    }
    return std::abs(total - 1.0) <= tol;
}

Pmf degree_pmf(const RootedTree& tree, bool exclude_root) {
    const std::int64_t n = tree.n_vertices();
    if (n == 0) throw std::invalid_argument("degree_pmf: empty tree");
    const std::int64_t count = exclude_root ? n - 1 : n;
    if (count == 0) throw std::invalid_argument("degree_pmf: no vertices left after excluding root");

    Pmf pmf;
    pmf.total_count = count;
    for (std::int64_t i = 0; i < n; ++i) {
        if (exclude_root && i == tree.root) continue;
        pmf.mass[tree.degree[i]] += 1.0 / static_cast<double>(count);
    }
    return pmf;
}

double superstar_fraction(const RootedTree& tree) {
    if (tree.model_tag != ModelTag::superstar)
        throw std::invalid_argument("superstar_fraction: not a superstar tree");
    const std::int64_t n = tree.n_vertices();
    if (n < 2) throw std::invalid_argument("superstar_fraction: need at least one non-superstar");
    return static_cast<double>(tree.degree[tree.root]) / static_cast<double>(n - 1);
}

std::int64_t max_nonsuperstar_degree(const RootedTree& tree) {
    if (tree.model_tag != ModelTag::superstar)
        throw std::invalid_argument("max_nonsuperstar_degree: not a superstar tree");
    if (tree.n_vertices() < 2)
        throw std::invalid_argument("max_nonsuperstar_degree: tree has only the superstar");
    std::int64_t best = 0;
    for (std::int64_t i = 0; i < tree.n_vertices(); ++i)
        if (i != tree.root && tree.degree[i] > best) best = tree.degree[i];
    return best;
}

std::int64_t tree_height(const RootedTree& tree) {
    const std::int64_t n = tree.n_vertices();
    // single forward pass; parent[i] < i makes depths available in order
    std::vector<std::int64_t> depth(n, 0);
    std::int64_t height = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (tree.parent[i] == kNoParent) continue;
        depth[i] = depth[tree.parent[i]] + 1;
        if (depth[i] > height) height = depth[i];
    }
    return height;
}

double estimate_p(const ComponentSummary& summary) {
    if (summary.n_vertices < 1 || summary.d_max < 1)
        throw std::invalid_argument("estimate_p: empty component");
    return static_cast<double>(summary.d_max) / static_cast<double>(summary.n_vertices);
}

double relative_error(std::int64_t k, const Pmf& empirical, const Pmf& model) {
    const double m = model.at(k);
    if (!(m > 0.0)) throw std::invalid_argument("relative_error: model mass at k must be positive");
    return std::abs(m - empirical.at(k)) / m;
}

double tv_distance(const Pmf& a, const Pmf& b) {
    if (!a.is_normalized() || !b.is_normalized())
        throw std::invalid_argument("tv_distance: inputs must be normalized");
    double total = 0.0;
    for (const auto& [k, m] : a.mass) total += std::abs(m - b.at(k));
    for (const auto& [k, m] : b.mass)
        if (a.mass.find(k) == a.mass.end()) total += m;
    return 0.5 * total;
}

ScalingFit loglog_slope(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("loglog_slope: need at least 3 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, y] : points) {
        if (!(n > 0.0) || !(y > 0.0))
            throw std::invalid_argument("loglog_slope: points must be positive");
        const double x = std::log(n), ly = std::log(y);
        sx += x;
        sy += ly;
        sxx += x * x;
        sxy += x * ly;
    }
    const double m = static_cast<double>(points.size());
    ScalingFit fit;
    fit.points = points;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    return fit;
}

} // namespace superstar::stats
