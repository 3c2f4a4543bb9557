#ifndef SUPERSTAR_INGEST_HPP
#define SUPERSTAR_INGEST_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace superstar {

// Normalized undirected edge list: no self-loops, no duplicate pairs.
struct EdgeList {
    std::vector<std::pair<std::string, std::string>> edges;
    std::int64_t n_raw_lines = 0;
    std::int64_t n_dropped = 0;  // self-loops + duplicates
};

// Giant-component summary of an ingested graph.
struct ComponentSummary {
    std::int64_t n_vertices = 0;
    std::int64_t n_edges = 0;
    std::int64_t d_max = 0;
    std::string superstar_label;
    bool superstar_tied = false;  // more than one vertex attains d_max
    std::map<std::int64_t, std::int64_t> degree_histogram;
    std::int64_t excess_edges = 0;  // n_edges - (n_vertices - 1)
};

struct FitRow {
    std::int64_t k;
    double empirical;
    double model_sm;
    double model_pa;
    double relerr_sm;
    double relerr_pa;
};

struct FitReport {
    double p_hat;
    ComponentSummary summary;
    std::vector<FitRow> rows;
};

// One edge per line, two whitespace-separated labels; '#' lines and blank
// lines are skipped. Self-loops and duplicate undirected pairs are dropped
// and counted. Throws on malformed lines (with line number) and empty input.
EdgeList parse_edge_list(std::istream& in);

// Largest connected component; ties broken by the lexicographically smallest
// member label.
ComponentSummary giant_component(const EdgeList& edges);

// Degree-law fit for k = 1..k_max: empirical pmf vs nu_sm(., p_hat) and nu_pa.
FitReport analyze_component(const ComponentSummary& summary, std::int64_t k_max = 4);

void write_fit_report_json(const FitReport& report, std::ostream& out);
void write_fit_report_csv(const FitReport& report, std::ostream& out);

} // namespace superstar

#endif
