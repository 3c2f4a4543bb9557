#ifndef SUPERSTAR_TREE_HPP
#define SUPERSTAR_TREE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace superstar {

enum class ModelTag { superstar, preferential };

inline constexpr std::int64_t kNoParent = -1;

// Rooted tree in birth order: vertex 0 is the root (the superstar for
// ModelTag::superstar), parent[i] < i for every non-root vertex.
struct RootedTree {
    std::vector<std::int64_t> parent;  // parent[root] == kNoParent
    std::vector<std::int64_t> degree;
    std::int64_t root = 0;
    ModelTag model_tag = ModelTag::superstar;

    std::int64_t n_vertices() const { return static_cast<std::int64_t>(parent.size()); }

    // Recomputes degrees from the parent array.
    std::vector<std::int64_t> recompute_degrees() const;

    // Throws std::runtime_error if any structural invariant fails.
    void validate() const;
};

// CSV serialization: header `index,parent,degree`, root parent written as -1.
void write_tree_csv(const RootedTree& tree, std::ostream& out);
RootedTree read_tree_csv(std::istream& in, ModelTag tag);

// One `u v` line per edge, usable by the ingest pipeline.
void write_edge_list(const RootedTree& tree, std::ostream& out);

} // namespace superstar

#endif
