#include "superstar/ingest.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "superstar/stats.hpp"
#include "superstar/theory.hpp"

namespace superstar {

EdgeList parse_edge_list(std::istream& in) {
    EdgeList out;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++out.n_raw_lines;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a)) continue;  // whitespace-only line
        if (!(row >> b) || (row >> extra))
            throw std::runtime_error("edge list: line " + std::to_string(line_no) +
                                     ": expected exactly 2 tokens");
        if (a == b) {
            ++out.n_dropped;
            continue;
        }
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!seen.insert(key).second) {
            ++out.n_dropped;
            continue;
        }
        out.edges.push_back(std::move(key));
    }
    if (out.edges.empty()) throw std::runtime_error("edge list: no edges found");
    return out;
}

ComponentSummary giant_component(const EdgeList& edges) {
    if (edges.edges.empty()) throw std::invalid_argument("giant_component: empty edge list");

    std::unordered_map<std::string, std::int64_t> id_of;
    std::vector<const std::string*> label_of;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = id_of.try_emplace(label, static_cast<std::int64_t>(label_of.size()));
        if (inserted) label_of.push_back(&it->first);
        return it->second;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> iedges;
    iedges.reserve(edges.edges.size());
    for (const auto& [a, b] : edges.edges) iedges.emplace_back(intern(a), intern(b));
    const std::int64_t n = static_cast<std::int64_t>(label_of.size());

    // union-find
    std::vector<std::int64_t> uf(n);
    for (std::int64_t i = 0; i < n; ++i) uf[i] = i;
    auto find = [&](std::int64_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& [a, b] : iedges) uf[find(a)] = find(b);

    std::unordered_map<std::int64_t, std::int64_t> comp_size;
    for (std::int64_t i = 0; i < n; ++i) ++comp_size[find(i)];

    // largest component; ties by smallest member label
    std::int64_t best_root = -1;
    const std::string* best_min_label = nullptr;
    std::unordered_map<std::int64_t, const std::string*> min_label;
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t r = find(i);
        auto& ml = min_label[r];
        if (ml == nullptr || *label_of[i] < *ml) ml = label_of[i];
    }
    for (const auto& [r, size] : comp_size) {
        if (best_root == -1 || size > comp_size[best_root] ||
            (size == comp_size[best_root] && *min_label[r] < *best_min_label)) {
            best_root = r;
            best_min_label = min_label[r];
        }
    }

    ComponentSummary summary;
    summary.n_vertices = comp_size[best_root];
    std::vector<std::int64_t> degree(n, 0);
    for (const auto& [a, b] : iedges) {
        if (find(a) != best_root) continue;
        ++summary.n_edges;
        ++degree[a];
        ++degree[b];
    }
    for (std::int64_t i = 0; i < n; ++i) {
        if (find(i) != best_root) continue;
        ++summary.degree_histogram[degree[i]];
        if (degree[i] > summary.d_max) summary.d_max = degree[i];
    }
    std::int64_t at_max = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (find(i) != best_root || degree[i] != summary.d_max) continue;
        ++at_max;
        if (summary.superstar_label.empty() || *label_of[i] < summary.superstar_label)
            summary.superstar_label = *label_of[i];
    }
    summary.superstar_tied = at_max > 1;
    summary.excess_edges = summary.n_edges - (summary.n_vertices - 1);
    return summary;
}

FitReport analyze_component(const ComponentSummary& summary, std::int64_t k_max) {
    FitReport report;
    report.summary = summary;
    report.p_hat = stats::estimate_p(summary);

    stats::Pmf empirical;
    empirical.total_count = summary.n_vertices;
    for (const auto& [k, count] : summary.degree_histogram)
        empirical.mass[k] = static_cast<double>(count) / static_cast<double>(summary.n_vertices);

    for (std::int64_t k = 1; k <= k_max; ++k) {
        FitRow row;
        row.k = k;
        row.empirical = empirical.at(k);
        row.model_sm = theory::nu_sm(k, report.p_hat);
        row.model_pa = theory::nu_pa(k);
        row.relerr_sm = std::abs(row.model_sm - row.empirical) / row.model_sm;
        row.relerr_pa = std::abs(row.model_pa - row.empirical) / row.model_pa;
        report.rows.push_back(row);
    }
    return report;
}

void write_fit_report_json(const FitReport& report, std::ostream& out) {
    out << std::setprecision(17);
    out << "{\n";
    out << "  \"p_hat\": " << report.p_hat << ",\n";
    out << "  \"n_vertices\": " << report.summary.n_vertices << ",\n";
    out << "  \"n_edges\": " << report.summary.n_edges << ",\n";
    out << "  \"d_max\": " << report.summary.d_max << ",\n";
    out << "  \"superstar_label\": \"" << report.summary.superstar_label << "\",\n";
    out << "  \"superstar_tied\": " << (report.summary.superstar_tied ? "true" : "false") << ",\n";
    out << "  \"excess_edges\": " << report.summary.excess_edges << ",\n";
    out << "  \"rows\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const auto& r = report.rows[i];
        out << "    {\"k\": " << r.k << ", \"empirical\": " << r.empirical
            << ", \"model_sm\": " << r.model_sm << ", \"model_pa\": " << r.model_pa
            << ", \"relerr_sm\": " << r.relerr_sm << ", \"relerr_pa\": " << r.relerr_pa << "}"
            << (i + 1 < report.rows.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
}

void write_fit_report_csv(const FitReport& report, std::ostream& out) {
    out << std::setprecision(17);
    out << "k,empirical,model_sm,model_pa,relerr_sm,relerr_pa\n";
    for (const auto& r : report.rows)
        out << r.k << ',' << r.empirical << ',' << r.model_sm << ',' << r.model_pa << ','
            << r.relerr_sm << ',' << r.relerr_pa << '\n';
}

} // namespace superstar
