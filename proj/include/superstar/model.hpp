#ifndef SUPERSTAR_MODEL_HPP
#define SUPERSTAR_MODEL_HPP

#include <cstdint>

#include "superstar/rng.hpp"
#include "superstar/tree.hpp"

namespace superstar {

struct GrowthParams {
    double p;            // superstar attachment probability, strictly in (0,1)
    std::int64_t n;      // target vertex count, >= 2
    std::uint64_t seed;

    void validate() const;
};

// Superstar model: vertex 0 is the superstar, vertex 1 attaches to it,
// each later arrival joins the superstar with probability p and otherwise
// a non-superstar chosen proportionally to its degree.
RootedTree grow_superstar(const GrowthParams& params, SplitMix64& rng);
RootedTree grow_superstar(const GrowthParams& params);

// Classical preferential attachment tree started from a single edge.
RootedTree grow_preferential(std::int64_t n, SplitMix64& rng);

} // namespace superstar

#endif
