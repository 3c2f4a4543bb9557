#include "superstar/branching.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace superstar {

void BpState::validate() const {
    if (vertices.empty()) throw std::runtime_error("bp: empty state");
    if (n_blue + n_red != n_vertices()) throw std::runtime_error("bp: color counts do not sum to population");
    if (vertices.front().color != Color::red || vertices.front().birth_time != 0.0)
        throw std::runtime_error("bp: root must be red with birth time 0");
    if (tau.size() != vertices.size()) throw std::runtime_error("bp: tau size mismatch");
    for (std::size_t i = 1; i < tau.size(); ++i)
        if (!(tau[i] > tau[i - 1])) throw std::runtime_error("bp: tau not strictly increasing");
    std::int64_t blue_children = 0;
    for (const auto& v : vertices) {
        if (v.parent != kNoParent && !(v.birth_time > vertices[v.parent].birth_time))
            throw std::runtime_error("bp: child born before parent");
        blue_children += v.c_blue;
    }
    // every blue vertex is a blue child of exactly one vertex
    if (blue_children != n_blue) throw std::runtime_error("bp: blue child counts inconsistent");
}

BpState simulate_bp(double p, std::int64_t n_target, SplitMix64& rng) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("simulate_bp: p must be in (0,1)");
    if (n_target < 1) throw std::invalid_argument("simulate_bp: n_target must be >= 1");

    BpState bp;
    bp.p = p;
    bp.vertices.reserve(static_cast<std::size_t>(n_target));
    bp.tau.reserve(static_cast<std::size_t>(n_target));

    bp.vertices.push_back({1, Color::red, 0.0, kNoParent});
    bp.n_red = 1;
    bp.tau.push_back(0.0);
    bp.first_birth.push_back(0.0);

    // One endpoint per unit of birth rate: each vertex once for the "+1",
    // plus once per blue child. Uniform draw is then proportional to c_B + 1.
    std::vector<std::int64_t> endpoints;
    endpoints.reserve(static_cast<std::size_t>(2 * n_target));
    endpoints.push_back(0);

    while (bp.n_vertices() < n_target) {
        bp.clock += rng.exponential(static_cast<double>(bp.total_rate()));
        const std::int64_t parent = endpoints[rng.uniform_index(endpoints.size())];
        const bool red = rng.bernoulli(p);

        BpVertex child;
        child.id = bp.n_vertices() + 1;
        child.color = red ? Color::red : Color::blue;
        child.birth_time = bp.clock;
        child.parent = parent;
        child.mod_gen = red ? 0 : bp.vertices[parent].mod_gen + 1;

        const std::int64_t child_index = bp.n_vertices();
        if (red) {
            ++bp.vertices[parent].c_red;
            ++bp.n_red;
        } else {
            ++bp.vertices[parent].c_blue;
            ++bp.n_blue;
            endpoints.push_back(parent);
        }
        if (child.mod_gen == static_cast<std::int64_t>(bp.first_birth.size()))
            bp.first_birth.push_back(bp.clock);

        bp.vertices.push_back(child);
        bp.tau.push_back(bp.clock);
        endpoints.push_back(child_index);
    }
    return bp;
}

std::int64_t YuleTrajectory::count_at(double t) const {
    auto it = std::upper_bound(birth_times.begin(), birth_times.end(), t);
    return 1 + (it - birth_times.begin());
}

YuleTrajectory simulate_yule(double a, double horizon, SplitMix64& rng) {
    if (!(a > 0.0)) throw std::invalid_argument("simulate_yule: rate must be positive");
    if (!(horizon >= 0.0)) throw std::invalid_argument("simulate_yule: horizon must be nonnegative");
    YuleTrajectory traj{a, {}};
    double t = 0.0;
    std::int64_t count = 1;
    for (;;) {
        t += rng.exponential(a * static_cast<double>(count));
        if (t > horizon) break;
        traj.birth_times.push_back(t);
        ++count;
    }
    return traj;
}

YuleTrajectory simulate_yule_count(double a, std::int64_t target, SplitMix64& rng) {
    if (!(a > 0.0)) throw std::invalid_argument("simulate_yule: rate must be positive");
    if (target < 1) throw std::invalid_argument("simulate_yule: target must be >= 1");
    YuleTrajectory traj{a, {}};
    double t = 0.0;
    for (std::int64_t count = 1; count < target; ++count) {
        t += rng.exponential(a * static_cast<double>(count));
        traj.birth_times.push_back(t);
    }
    return traj;
}

RootedTree surgery(const BpState& bp) {
    if (bp.vertices.empty()) throw std::invalid_argument("surgery: empty state");
    const std::int64_t n = bp.n_vertices();

    RootedTree tree;
    tree.model_tag = ModelTag::superstar;
    tree.parent.assign(n + 1, kNoParent);
    tree.degree.assign(n + 1, 0);

    // BP vertex at index i becomes tree vertex i + 1; v0 is the new superstar.
    for (std::int64_t i = 0; i < n; ++i) {
        const BpVertex& v = bp.vertices[i];
        const std::int64_t target = (v.color == Color::red) ? 0 : v.parent + 1;
        tree.parent[i + 1] = target;
        ++tree.degree[i + 1];
        ++tree.degree[target];
    }
    return tree;
}

std::vector<std::pair<double, double>> martingale_trace(const BpState& bp,
                                                        const std::vector<double>& sample_times) {
    std::vector<std::pair<double, double>> trace;
    trace.reserve(sample_times.size());
    // prefix counts over birth order; tau is the sorted event-time sequence
    std::vector<std::int64_t> blue_prefix(bp.vertices.size() + 1, 0);
    for (std::size_t i = 0; i < bp.vertices.size(); ++i)
        blue_prefix[i + 1] = blue_prefix[i] + (bp.vertices[i].color == Color::blue ? 1 : 0);

    for (double t : sample_times) {
        if (!(t >= 0.0) || t > bp.clock)
            throw std::invalid_argument("martingale_trace: sample time outside run");
        auto it = std::upper_bound(bp.tau.begin(), bp.tau.end(), t);
        const std::int64_t alive = it - bp.tau.begin();
        const std::int64_t blue = blue_prefix[alive];
        trace.emplace_back(t, std::exp(-(2.0 - bp.p) * t) * static_cast<double>(alive + blue));
    }
    return trace;
}

std::vector<std::int64_t> modified_generation(const BpState& bp) {
    std::vector<std::int64_t> d(bp.vertices.size(), 0);
    for (std::size_t i = 0; i < bp.vertices.size(); ++i) {
        const BpVertex& v = bp.vertices[i];
        d[i] = (v.color == Color::red) ? 0 : d[v.parent] + 1;
    }
    return d;
}

std::vector<std::optional<double>> first_birth_times(const BpState& bp, std::int64_t k_max) {
    if (k_max < 0) throw std::invalid_argument("first_birth_times: k_max must be >= 0");
    std::vector<std::optional<double>> bir(static_cast<std::size_t>(k_max) + 1);
    for (std::size_t k = 0; k <= static_cast<std::size_t>(k_max); ++k)
        if (k < bp.first_birth.size()) bir[k] = bp.first_birth[k];
    return bir;
}

void write_bp_csv(const BpState& bp, std::ostream& out) {
    out << "id,color,birth_time,parent,c_blue,c_red\n";
    out << std::setprecision(17);
    for (const auto& v : bp.vertices) {
        out << v.id << ',' << (v.color == Color::red ? "red" : "blue") << ','
            << v.birth_time << ','
            << (v.parent == kNoParent ? kNoParent : bp.vertices[v.parent].id) << ','
            << v.c_blue << ',' << v.c_red << '\n';
    }
}

} // namespace superstar
