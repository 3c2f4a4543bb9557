#include "superstar/tree.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace superstar {

std::vector<std::int64_t> RootedTree::recompute_degrees() const {
    std::vector<std::int64_t> deg(parent.size(), 0);
    for (std::int64_t i = 0; i < n_vertices(); ++i) {
        if (parent[i] == kNoParent) continue;
        ++deg[i];
        ++deg[parent[i]];
    }
    return deg;
}

void RootedTree::validate() const {
    const std::int64_t n = n_vertices();
    if (n < 1) throw std::runtime_error("tree: empty");
    if (degree.size() != parent.size()) throw std::runtime_error("tree: degree array size mismatch");
    if (root != 0 || parent[0] != kNoParent) throw std::runtime_error("tree: root must be vertex 0 with no parent");
    for (std::int64_t i = 1; i < n; ++i) {
        if (parent[i] < 0 || parent[i] >= i)
            throw std::runtime_error("tree: parent[i] must be < i (birth order)");
    }
    std::int64_t deg_sum = 0;
    auto rec = recompute_degrees();
    for (std::int64_t i = 0; i < n; ++i) {
        if (rec[i] != degree[i]) throw std::runtime_error("tree: stored degree disagrees with parent array");
        deg_sum += degree[i];
    }
    if (deg_sum != 2 * (n - 1)) throw std::runtime_error("tree: degree sum != 2(n-1)");
}

void write_tree_csv(const RootedTree& tree, std::ostream& out) {
    out << "index,parent,degree\n";
    for (std::int64_t i = 0; i < tree.n_vertices(); ++i)
        out << i << ',' << tree.parent[i] << ',' << tree.degree[i] << '\n';
}

RootedTree read_tree_csv(std::istream& in, ModelTag tag) {
    RootedTree tree;
    tree.model_tag = tag;
    std::string line;
    // skip leading '#' comment lines (embedded config)
    while (std::getline(in, line) && !line.empty() && line[0] == '#') {}
    if (line.rfind("index,parent,degree", 0) != 0)
        throw std::runtime_error("tree csv: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::int64_t idx, par, deg;
        char c1, c2;
        if (!(row >> idx >> c1 >> par >> c2 >> deg) || c1 != ',' || c2 != ',')
            throw std::runtime_error("tree csv: malformed row: " + line);
        if (idx != static_cast<std::int64_t>(tree.parent.size()))
            throw std::runtime_error("tree csv: rows out of order");
        tree.parent.push_back(par);
        tree.degree.push_back(deg);
    }
    tree.validate();
    return tree;
}

void write_edge_list(const RootedTree& tree, std::ostream& out) {
    for (std::int64_t i = 0; i < tree.n_vertices(); ++i)
        if (tree.parent[i] != kNoParent) out << tree.parent[i] << ' ' << i << '\n';
}

} // namespace superstar
