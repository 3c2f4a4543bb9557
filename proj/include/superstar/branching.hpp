#ifndef SUPERSTAR_BRANCHING_HPP
#define SUPERSTAR_BRANCHING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "superstar/rng.hpp"
#include "superstar/tree.hpp"

namespace superstar {

enum class Color : std::uint8_t { red, blue };

struct BpVertex {
    std::int64_t id;          // birth-order index, 1-based like the vertex labels
    Color color;
    double birth_time;        // sigma_v
    std::int64_t parent;      // kNoParent for the root
    std::int64_t c_blue = 0;  // blue children so far
    std::int64_t c_red = 0;
    std::int64_t mod_gen = 0; // d(v): edges to the nearest red ancestor, 0 if red
};

// Two-type continuous-time branching process. Each vertex births at rate
// c_blue + 1; the child is red with probability p. Red children of a red
// parent do not raise the parent's rate, blue children do.
struct BpState {
    std::vector<BpVertex> vertices;  // in birth order
    double clock = 0.0;
    std::int64_t n_blue = 0;
    std::int64_t n_red = 0;
    std::vector<double> tau;         // tau[k] = time the (k+1)-th vertex was born
    double p = 0.0;

    // Bir(k): time the first vertex with mod_gen == k was born. first_birth[0] = 0.
    std::vector<double> first_birth;

    std::int64_t n_vertices() const { return static_cast<std::int64_t>(vertices.size()); }

    // Total birth rate |BP(t)| + B(t).
    std::int64_t total_rate() const { return n_vertices() + n_blue; }

    void validate() const;
};

BpState simulate_bp(double p, std::int64_t n_target, SplitMix64& rng);

// Pure birth process at per-individual rate a, started from one individual.
// birth_times holds the event times; population at time t is
// 1 + #{times <= t}.
struct YuleTrajectory {
    double rate;
    std::vector<double> birth_times;

    std::int64_t count_at(double t) const;
};

YuleTrajectory simulate_yule(double a, double horizon, SplitMix64& rng);
YuleTrajectory simulate_yule_count(double a, std::int64_t target, SplitMix64& rng);

// Rewires every red vertex to a fresh superstar v0; blue vertices keep their
// BP parent. The result has n+1 vertices and the same law as the discrete model.
RootedTree surgery(const BpState& bp);

// M(t) = e^{-(2-p)t} (|BP(t)| + B(t)) evaluated at the requested times.
std::vector<std::pair<double, double>> martingale_trace(const BpState& bp,
                                                        const std::vector<double>& sample_times);

// Recomputes d(v) from parents and colors; equals the stored mod_gen values.
std::vector<std::int64_t> modified_generation(const BpState& bp);

// Bir(0..k_max); levels never reached are nullopt.
std::vector<std::optional<double>> first_birth_times(const BpState& bp, std::int64_t k_max);

// CSV `id,color,birth_time,parent,c_blue,c_red`.
void write_bp_csv(const BpState& bp, std::ostream& out);

} // namespace superstar

#endif
