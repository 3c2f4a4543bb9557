#ifndef SUPERSTAR_RNG_HPP
#define SUPERSTAR_RNG_HPP

#include <cstdint>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace superstar {

// SplitMix64: counter-based 64-bit generator (Steele, Lea & Flood 2014).
// Every seed yields an independent full-period stream, so per-replication
// streams are derived as seed ^ rep_index.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static SplitMix64 for_replication(std::uint64_t seed, std::uint64_t rep_index) {
        return SplitMix64(seed ^ rep_index);
    }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) without modulo bias.
    std::uint64_t uniform_index(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
        std::uint64_t threshold = (0ULL - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    bool bernoulli(double p) { return uniform01() < p; }

    double exponential(double rate) {
        if (!(rate > 0.0)) throw std::invalid_argument("exponential: rate must be positive");
        // uniform01() < 1, so the log argument is strictly positive
        return -std::log1p(-uniform01()) / rate;
    }

private:
    std::uint64_t state_;
};

} // namespace superstar

#endif
