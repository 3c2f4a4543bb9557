#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "superstar/branching.hpp"
#include "superstar/model.hpp"
#include "superstar/stats.hpp"

using namespace superstar;

namespace {

// BP run guaranteed to cover clock time t_min (rare reruns with a larger
// target use a fresh substream, keeping the result deterministic).
BpState simulate_bp_past(double p, double t_min, std::int64_t n_start, std::uint64_t seed,
                         std::uint64_t rep) {
    std::int64_t n = n_start;
    for (std::uint64_t attempt = 0;; ++attempt, n *= 4) {
        auto rng = SplitMix64::for_replication(seed, rep + (attempt << 48));
        auto bp = simulate_bp(p, n, rng);
        if (bp.clock >= t_min) return bp;
    }
}

} // namespace

TEST_SUITE_BEGIN("branching");

TEST_CASE("simulate_bp trivial run n=1") {
    SplitMix64 rng(1);
    const auto bp = simulate_bp(0.5, 1, rng);
    CHECK(bp.n_vertices() == 1);
    CHECK(bp.n_red == 1);
    CHECK(bp.n_blue == 0);
    CHECK(bp.tau.size() == 1);
    CHECK(bp.tau[0] == 0.0);
    CHECK(bp.vertices[0].color == Color::red);
    CHECK(bp.vertices[0].birth_time == 0.0);
}

TEST_CASE("simulate_bp validation") {
    SplitMix64 rng(1);
    CHECK_THROWS_AS(simulate_bp(0.0, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(simulate_bp(1.0, 10, rng), std::invalid_argument);
    CHECK_THROWS_AS(simulate_bp(0.5, 0, rng), std::invalid_argument);
}

TEST_CASE("rate bookkeeping and state invariants") {
    for (std::uint64_t seed : {3ULL, 4ULL}) {
        SplitMix64 rng(seed);
        const auto bp = simulate_bp(0.4, 5000, rng);
        bp.validate();  // rate = |BP| + B recomputed from child counts, taus increasing
        CHECK(bp.total_rate() == bp.n_vertices() + bp.n_blue);
    }
}

TEST_CASE("blue fraction converges to 1-p") {
    SplitMix64 rng(11);
    const auto bp = simulate_bp(0.3, 100000, rng);
    const double b = static_cast<double>(bp.n_blue) / static_cast<double>(bp.n_vertices());
    CHECK(b >= 0.69);
    CHECK(b <= 0.71);
}

TEST_CASE("red fraction within 0.01 of p at n=1e5") {
    SplitMix64 rng(12);
    const auto bp = simulate_bp(0.6, 100000, rng);
    const double r = static_cast<double>(bp.n_red) / static_cast<double>(bp.n_vertices());
    CHECK(std::abs(r - 0.6) <= 0.01);
}

TEST_CASE("stopping time asymptotics: tau_n - log(n)/(2-p) stabilizes") {
    SplitMix64 rng(21);
    const auto bp = simulate_bp(0.5, 100000, rng);
    std::vector<double> offsets;
    for (std::int64_t n : {1000, 10000, 100000})
        offsets.push_back(bp.tau[n - 1] - std::log(static_cast<double>(n)) / 1.5);
    double mean = (offsets[0] + offsets[1] + offsets[2]) / 3.0;
    double var = 0.0;
    for (double o : offsets) var += (o - mean) * (o - mean);
    CHECK(std::sqrt(var / 3.0) < 0.2);
}

TEST_CASE("yule trivial and validation") {
    SplitMix64 rng(1);
    const auto traj = simulate_yule(1.0, 2.0, rng);
    CHECK(traj.count_at(0.0) == 1);
    CHECK_THROWS_AS(simulate_yule(0.0, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(simulate_yule(-1.0, 1.0, rng), std::invalid_argument);
}

TEST_CASE("yule martingale: e^{-at} count has mean 1") {
    const int reps = 100000;
    const double a = 1.0, t = 5.0;
    double total = 0.0;
    for (int r = 0; r < reps; ++r) {
        auto rng = SplitMix64::for_replication(31, r);
        total += std::exp(-a * t) * static_cast<double>(simulate_yule(a, t, rng).count_at(t));
    }
    const double mean = total / reps;
    CHECK(mean >= 0.98);
    CHECK(mean <= 1.02);
}

TEST_CASE("surgery base case and red rewiring") {
    SplitMix64 rng(41);
    const auto one = simulate_bp(0.5, 1, rng);
    const auto tiny = surgery(one);
    CHECK(tiny.n_vertices() == 2);
    CHECK(tiny.parent[1] == 0);
    tiny.validate();

    const auto bp = simulate_bp(0.5, 3000, rng);
    const auto tree = surgery(bp);
    CHECK(tree.n_vertices() == bp.n_vertices() + 1);
    tree.validate();
    for (std::int64_t i = 0; i < bp.n_vertices(); ++i) {
        const auto& v = bp.vertices[i];
        if (v.color == Color::red) {
            CHECK(tree.parent[i + 1] == 0);
        } else {
            CHECK(tree.parent[i + 1] == v.parent + 1);
        }
        // deg(v, output) = c_blue(v) + 1
        CHECK(tree.degree[i + 1] == v.c_blue + 1);
    }
    CHECK(tree.degree[0] == bp.n_red);
}

TEST_CASE("martingale trace") {
    const auto bp = simulate_bp_past(0.5, 3.0, 4000, 51, 0);
    const auto trace = martingale_trace(bp, {0.0});
    CHECK(trace[0].second == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(martingale_trace(bp, {bp.clock + 1.0}), std::invalid_argument);

    // martingale mean 1 at t = 3 over 1e4 reps
    const int reps = 10000;
    double total = 0.0, total_sq = 0.0;
    for (int r = 0; r < reps; ++r) {
        const auto run = simulate_bp_past(0.5, 3.0, 4000, 52, r);
        const double m = martingale_trace(run, {3.0})[0].second;
        total += m;
        total_sq += m * m;
    }
    const double mean = total / reps;
    CHECK(mean >= 0.97);
    CHECK(mean <= 1.03);
    // second moment bound 1 + (4-3p)/(2-p)
    CHECK(total_sq / reps <= 1.0 + (4.0 - 3.0 * 0.5) / (2.0 - 0.5) + 0.05);
}

TEST_CASE("offspring means for the root match the closed forms") {
    const int reps = 20000;
    const double p = 0.5, t = 1.0;
    double sum_b = 0, sum_b2 = 0, sum_r = 0, sum_r2 = 0;
    for (int r = 0; r < reps; ++r) {
        const auto bp = simulate_bp_past(p, t, 200, 61, r);
        std::int64_t cb = 0, cr = 0;
        for (const auto& v : bp.vertices) {
            if (v.parent != 0 || v.birth_time > t) continue;
            (v.color == Color::blue ? cb : cr) += 1;
        }
        sum_b += cb;
        sum_b2 += static_cast<double>(cb) * cb;
        sum_r += cr;
        sum_r2 += static_cast<double>(cr) * cr;
    }
    const double mean_b = sum_b / reps, mean_r = sum_r / reps;
    const double se_b = std::sqrt((sum_b2 / reps - mean_b * mean_b) / reps);
    const double se_r = std::sqrt((sum_r2 / reps - mean_r * mean_r) / reps);
    const double expect_b = std::exp((1.0 - p) * t) - 1.0;
    const double expect_r = p / (1.0 - p) * expect_b;
    CHECK(std::abs(mean_b - expect_b) <= 3.0 * se_b);
    CHECK(std::abs(mean_r - expect_r) <= 3.0 * se_r);
}

TEST_CASE("modified generation") {
    // hand-built state: red root, blue chain of length 3, red child with blue child
    BpState bp;
    bp.p = 0.5;
    bp.vertices = {
        {1, Color::red, 0.0, kNoParent},
        {2, Color::blue, 0.1, 0},   // d = 1
        {3, Color::blue, 0.2, 1},   // d = 2
        {4, Color::blue, 0.3, 2},   // d = 3
        {5, Color::red, 0.4, 2},    // d = 0
        {6, Color::blue, 0.5, 4},   // blue child of red vertex -> d = 1
    };
    const auto d = modified_generation(bp);
    CHECK(d == std::vector<std::int64_t>{0, 1, 2, 3, 0, 1});
}

TEST_CASE("modified generation recomputation matches online values") {
    SplitMix64 rng(71);
    const auto bp = simulate_bp(0.4, 20000, rng);
    const auto d = modified_generation(bp);
    for (std::size_t i = 0; i < bp.vertices.size(); ++i) CHECK(d[i] == bp.vertices[i].mod_gen);
}

TEST_CASE("first birth times: Bir(0)=0, strictly increasing, absent when unreached") {
    SplitMix64 rng(81);
    const auto bp = simulate_bp(0.5, 50000, rng);
    const auto bir = first_birth_times(bp, 40);
    REQUIRE(bir[0].has_value());
    CHECK(*bir[0] == 0.0);
    bool seen_gap = false;
    for (std::size_t k = 1; k < bir.size(); ++k) {
        if (!bir[k].has_value()) {
            seen_gap = true;
            continue;
        }
        CHECK_FALSE(seen_gap);  // levels fill bottom-up
        CHECK(*bir[k] > *bir[k - 1]);
    }
    CHECK_FALSE(bir[40].has_value());  // d=40 unreachable at this size
}

TEST_CASE("embedded chain: surgery degrees match the discrete law at small n") {
    // pooled degree pmfs, n = 1000 (+1 vertex after surgery), 100 reps per side
    const int reps = 100;
    std::map<std::int64_t, double> pooled_a, pooled_b;
    for (int r = 0; r < reps; ++r) {
        auto rng_a = SplitMix64::for_replication(91, r);
        const auto sa = surgery(simulate_bp(0.5, 1000, rng_a));
        for (std::int64_t i = 1; i < sa.n_vertices(); ++i)
            pooled_a[sa.degree[i]] += 1.0 / (1000.0 * reps);
        auto rng_b = SplitMix64::for_replication(92, r);
        const auto sb = grow_superstar({0.5, 1001, 92}, rng_b);
        for (std::int64_t i = 1; i < sb.n_vertices(); ++i)
            pooled_b[sb.degree[i]] += 1.0 / (1000.0 * reps);
    }
    double tv = 0.0;
    for (const auto& [k, m] : pooled_a) tv += std::abs(m - (pooled_b.count(k) ? pooled_b[k] : 0.0));
    for (const auto& [k, m] : pooled_b)
        if (!pooled_a.count(k)) tv += m;
    CHECK(tv / 2.0 < 0.03);
}

TEST_CASE("bp CSV dump shape") {
    SplitMix64 rng(95);
    const auto bp = simulate_bp(0.5, 50, rng);
    std::stringstream ss;
    write_bp_csv(bp, ss);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "id,color,birth_time,parent,c_blue,c_red");
    int rows = 0;
    for (std::string line; std::getline(ss, line);) ++rows;
    CHECK(rows == 50);
}

TEST_SUITE_END();
