#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "superstar/model.hpp"
#include "superstar/stats.hpp"

using namespace superstar;

TEST_SUITE_BEGIN("model");

TEST_CASE("grow_superstar base case n=2") {
    auto tree = grow_superstar({0.5, 2, 1});
    CHECK(tree.n_vertices() == 2);
    CHECK(tree.parent[0] == kNoParent);
    CHECK(tree.parent[1] == 0);
    CHECK(tree.degree[0] == 1);
    CHECK(tree.degree[1] == 1);
    tree.validate();
}

TEST_CASE("grow_superstar parameter validation") {
    CHECK_THROWS_AS(grow_superstar({0.0, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow_superstar({1.0, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow_superstar({-0.1, 10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(grow_superstar({0.5, 1, 1}), std::invalid_argument);
}

TEST_CASE("grow_superstar n=3 superstar degree expectation is 1.5") {
    // single Bernoulli choice: v2 joins v0 w.p. 1/2, so E deg(v0) = 1.5
    const int reps = 100000;
    double total = 0.0;
    for (int r = 0; r < reps; ++r) {
        auto rng = SplitMix64::for_replication(99, r);
        total += static_cast<double>(grow_superstar({0.5, 3, 99}, rng).degree[0]);
    }
    CHECK(total / reps == doctest::Approx(1.5).epsilon(0.01));
}

TEST_CASE("determinism: identical params and seed give bit-identical trees") {
    const auto a = grow_superstar({0.37, 5000, 123});
    const auto b = grow_superstar({0.37, 5000, 123});
    CHECK(a.parent == b.parent);
    CHECK(a.degree == b.degree);
    const auto c = grow_superstar({0.37, 5000, 124});
    CHECK(a.parent != c.parent);
}

TEST_CASE("structural invariants on random trees") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        auto tree = grow_superstar({0.5, 2000, seed});
        tree.validate();  // birth order, degree bookkeeping, degree sum
        CHECK(tree.parent[0] == kNoParent);

        SplitMix64 rng(seed);
        auto pa = grow_preferential(2000, rng);
        pa.validate();
    }
}

TEST_CASE("attachment law matches exhaustive enumeration at n=4") {
    // Oracle: enumerate the random choices for v2 and v3 at p = 1/2.
    // Outcome key is (parent[2], parent[3]).
    std::map<std::pair<int, int>, double> exact;
    exact[{0, 0}] = 0.25;        // v2->v0 ; v3->v0
    exact[{0, 1}] = 0.125;       // v2->v0 ; v3 uniform over {v1,v2} (degrees 1,1)
    exact[{0, 2}] = 0.125;
    exact[{1, 0}] = 0.25;        // v2->v1 ; v3->v0
    exact[{1, 1}] = 0.5 * 2.0 / 6.0;  // degrees among non-superstars: v1=2, v2=1
    exact[{1, 2}] = 0.5 * 1.0 / 6.0;

    const int reps = 200000;
    std::map<std::pair<int, int>, double> empirical;
    for (int r = 0; r < reps; ++r) {
        auto rng = SplitMix64::for_replication(7, r);
        const auto tree = grow_superstar({0.5, 4, 7}, rng);
        empirical[{static_cast<int>(tree.parent[2]), static_cast<int>(tree.parent[3])}] +=
            1.0 / reps;
    }
    double tv = 0.0;
    for (const auto& [key, prob] : exact) tv += std::abs(prob - empirical[key]);
    CHECK(tv / 2.0 < 0.01);
}

TEST_CASE("superstar strong law at n=1e6") {
    const auto tree = grow_superstar({0.5, 1000000, 2024});
    const double frac = static_cast<double>(tree.degree[0]) / 1000000.0;
    CHECK(frac >= 0.49);
    CHECK(frac <= 0.51);
}

TEST_CASE("grow_preferential base case and validation") {
    SplitMix64 rng(1);
    const auto tree = grow_preferential(2, rng);
    CHECK(tree.n_vertices() == 2);
    CHECK(tree.parent[1] == 0);
    CHECK_THROWS_AS(grow_preferential(1, rng), std::invalid_argument);
}

TEST_CASE("preferential attachment degree-1 fraction at n=1e6") {
    SplitMix64 rng(77);
    const auto tree = grow_preferential(1000000, rng);
    std::int64_t ones = 0;
    for (auto d : tree.degree) ones += (d == 1);
    const double frac = static_cast<double>(ones) / 1000000.0;
    // limit value 4/(1*2*3) = 2/3
    CHECK(frac >= 0.66);
    CHECK(frac <= 0.6733);
}

TEST_CASE("tree CSV round trip") {
    const auto tree = grow_superstar({0.4, 500, 5});
    std::stringstream ss;
    write_tree_csv(tree, ss);
    const auto back = read_tree_csv(ss, ModelTag::superstar);
    CHECK(back.parent == tree.parent);
    CHECK(back.degree == tree.degree);
}

TEST_SUITE_END();
