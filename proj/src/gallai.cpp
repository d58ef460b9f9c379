#include "splp/gallai.hpp"

#include <chrono>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "splp/decomposition.hpp"
#include "splp/oracle.hpp"
#include "splp/parallel.hpp"

namespace splp {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void require_connected(const Graph& g, const char* who) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument(std::string(who) + ": empty graph");
    if (!is_connected(g))
        throw std::invalid_argument(std::string(who) + ": graph is disconnected");
}

} // namespace

SpPipeline sp_pipeline(const Graph& g) {
    SpPipeline p;
    p.embedding = complete_to_two_tree(g);
    TreeDecomposition td = decomposition_from_embedding(p.embedding);
    p.nice = make_nice(td);
    p.dp = run_forward_dp(p.nice, g);
    return p;
}

int sp_longest_path_length(const Graph& g) {
    require_connected(g, "sp_longest_path_length");
    if (g.vertex_count() == 1) return 0;
    return longest_path_length(sp_pipeline(g).dp);
}

GallaiReport gallai_naive(const Graph& g, int jobs) {
    auto start = std::chrono::steady_clock::now();
    require_connected(g, "gallai_naive");
    const int n = g.vertex_count();
    GallaiReport report;
    report.algorithm = "naive";
    report.n = n;
    report.m = g.edge_count();
    if (n == 1) {
        report.L = 0;
        report.gallai_vertices.insert(0);
        report.millis = elapsed_ms(start);
        return report;
    }
    report.L = sp_longest_path_length(g);

    std::vector<char> hit(n, 0);
    parallel_for(n, jobs, [&](int v) {
        const Graph rest = delete_vertex(g, v).graph;
        int best = -1; // empty remainder: even the trivial path is gone
        for (const std::vector<int>& comp : connected_components(rest)) {
            Graph piece = induced_subgraph(rest, comp).graph;
            best = std::max(best, sp_longest_path_length(piece));
        }
        hit[v] = best < report.L;
    });
    for (int v = 0; v < n; ++v)
        if (hit[v]) report.gallai_vertices.insert(v);
    report.millis = elapsed_ms(start);
    return report;
}

GallaiReport gallai_fast(const Graph& g) {
    auto start = std::chrono::steady_clock::now();
    require_connected(g, "gallai_fast");
    const int n = g.vertex_count();
    GallaiReport report;
    report.algorithm = "fast";
    report.n = n;
    report.m = g.edge_count();
    if (n == 1) {
        report.L = 0;
        report.gallai_vertices.insert(0);
        report.millis = elapsed_ms(start);
        return report;
    }

    SpPipeline p = sp_pipeline(g);
    report.L = longest_path_length(p.dp);
    ConfigMarking mk = mark_contributing_configs(p.dp);
    std::vector<int> forget = forget_nodes(p.nice, n);
    for (int v = 0; v < n; ++v) {
        const int child = p.nice.nodes[forget[v]].child[0];
        const VertexSet& bag = p.nice.nodes[child].bag;
        const SizeTables& tables = size_tables(bag.size());
        int slot = 0;
        while (bag.values()[slot] != v) ++slot;
        bool on_every = true, any = false;
        for (int m = 0; m < tables.count(); ++m) {
            if (!mk.is_marked(p.dp, child, m)) continue;
            any = true;
            if (tables.configs[m].state[slot] == PathConfiguration::OFF) {
                on_every = false;
                break;
            }
        }
        if (!any)
            throw std::logic_error("gallai_fast: node without marked configuration");
        if (on_every) report.gallai_vertices.insert(v);
    }
    report.millis = elapsed_ms(start);
    return report;
}

GallaiReport gallai_oracle(const Graph& g, int cap) {
    auto start = std::chrono::steady_clock::now();
    require_connected(g, "gallai_oracle");
    LongestPathSet lps = enumerate_longest_paths(g, cap);
    GallaiReport report;
    report.algorithm = "oracle";
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.L = lps.length;
    report.gallai_vertices = gallai_set_bruteforce(g, cap);
    report.millis = elapsed_ms(start);
    return report;
}

MergeSummary gallai_report_merge(const std::vector<GallaiReport>& reports,
                                 const Graph* g) {
    if (reports.empty())
        throw std::invalid_argument("gallai_report_merge: no reports");
    MergeSummary summary;
    summary.L = reports.front().L;
    summary.gallai_vertices = reports.front().gallai_vertices;
    for (const GallaiReport& r : reports) {
        summary.algorithms.push_back(r.algorithm);
        if (r.L == summary.L && r.gallai_vertices == summary.gallai_vertices)
            continue;
        std::ostringstream out;
        out << "gallai_report_merge: " << reports.front().algorithm << " and "
            << r.algorithm << " disagree: L " << summary.L << " vs " << r.L
            << ", sets {";
        for (int v : summary.gallai_vertices.values()) out << ' ' << v;
        out << " } vs {";
        for (int v : r.gallai_vertices.values()) out << ' ' << v;
        out << " }";
        if (g) out << "\ngraph:\n" << serialize_edge_list(*g);
        throw std::runtime_error(out.str());
    }
    return summary;
}

} // namespace splp
