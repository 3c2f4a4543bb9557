#include "superstar/model.hpp"

#include <stdexcept>

namespace superstar {

void GrowthParams::validate() const {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("GrowthParams: p must be in (0,1)");
    if (n < 2) throw std::invalid_argument("GrowthParams: n must be >= 2");
}

RootedTree grow_superstar(const GrowthParams& params, SplitMix64& rng) {
    params.validate();
    const std::int64_t n = params.n;

    RootedTree tree;
    tree.model_tag = ModelTag::superstar;
    tree.parent.assign(n, kNoParent);
    tree.degree.assign(n, 0);

    // Each edge appends its non-superstar endpoints; a uniform draw from the
    // list is then degree-proportional among non-superstars. Superstar
    // endpoints are never appended, so vertex 0 is never a candidate.
    std::vector<std::int64_t> endpoints;
    endpoints.reserve(static_cast<std::size_t>(2 * n));

    tree.parent[1] = 0;
    tree.degree[0] = 1;
    tree.degree[1] = 1;
    endpoints.push_back(1);

    for (std::int64_t k = 2; k < n; ++k) {
        std::int64_t target;
        if (rng.bernoulli(params.p)) {
            target = 0;
        } else {
            target = endpoints[rng.uniform_index(endpoints.size())];
            endpoints.push_back(target);
        }
        tree.parent[k] = target;
        ++tree.degree[target];
        tree.degree[k] = 1;
        endpoints.push_back(k);
    }
    return tree;
}

RootedTree grow_superstar(const GrowthParams& params) {
    SplitMix64 rng(params.seed);
    return grow_superstar(params, rng);
}

RootedTree grow_preferential(std::int64_t n, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("grow_preferential: n must be >= 2");

    RootedTree tree;
    tree.model_tag = ModelTag::preferential;
    tree.parent.assign(n, kNoParent);
    tree.degree.assign(n, 0);

    std::vector<std::int64_t> endpoints;
    endpoints.reserve(static_cast<std::size_t>(2 * n));

    tree.parent[1] = 0;
    tree.degree[0] = 1;
    tree.degree[1] = 1;
    endpoints.push_back(0);
    endpoints.push_back(1);

    for (std::int64_t k = 2; k < n; ++k) {
        std::int64_t target = endpoints[rng.uniform_index(endpoints.size())];
        tree.parent[k] = target;
        ++tree.degree[target];
        tree.degree[k] = 1;
        endpoints.push_back(target);
        endpoints.push_back(k);
    }
    return tree;
}

} // namespace superstar
