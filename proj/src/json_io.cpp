#include "splp/json_io.hpp"

namespace splp {

namespace {

json vertex_array(const VertexSet& s) {
    json out = json::array();
    for (int v : s) out.push_back(v);
    return out;
}

json edge_array(const Edge& e) { return json::array({e.first, e.second}); }

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Leaf: return "leaf";
        case NodeKind::Introduce: return "introduce";
        case NodeKind::Forget: return "forget";
        case NodeKind::Join: return "join";
    }
    return "?";
}

} // namespace

json graph_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_array(e));
    return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

json report_json(const GallaiReport& report) {
    return {{"n", report.n},
            {"m", report.m},
            {"L", report.L},
            {"gallai", vertex_array(report.gallai_vertices)},
            {"algo", report.algorithm},
            {"millis", report.millis}};
}

json embedding_json(const TwoTreeEmbedding& emb) {
    json host = json::array();
    const auto& edges = emb.host.edges();
    for (size_t i = 0; i < edges.size(); ++i)
        host.push_back({{"u", edges[i].first},
                        {"v", edges[i].second},
                        {"real", emb.real[i]}});
    return {{"n", emb.host.vertex_count()},
            {"base_edge", edge_array(emb.base_edge)},
            {"elimination_order", emb.elimination_order},
            {"host_edges", host}};
}

json nice_decomposition_json(const NiceTreeDecomposition& ntd) {
    json nodes = json::array();
    for (const NiceNode& node : ntd.nodes) {
        json children = json::array();
        for (int c : node.child)
            if (c >= 0) children.push_back(c);
        json entry = {{"kind", node_kind_name(node.kind)},
                      {"bag", vertex_array(node.bag)},
                      {"children", children}};
        if (node.kind == NodeKind::Introduce || node.kind == NodeKind::Forget)
            entry["vertex"] = node.vertex;
        nodes.push_back(std::move(entry));
    }
    return {{"width", ntd.width()}, {"root", ntd.root}, {"nodes", nodes}};
}

json longest_paths_json(const LongestPathSet& lps, bool dump_paths) {
    json out = {{"L", lps.length},
                {"count", static_cast<int>(lps.paths.size())}};
    if (dump_paths) {
        json paths = json::array();
        for (const Path& p : lps.paths) paths.push_back(p.vertices);
        out["paths"] = std::move(paths);
    }
    return out;
}

json recognition_json(const RecognitionResult& result) {
    json out = {{"series_parallel", result.accepted()}};
    if (result.removal_order) out["removal_order"] = *result.removal_order;
    if (result.certificate) {
        json sets = json::array();
        for (const VertexSet& s : result.certificate->branch_sets)
            sets.push_back(vertex_array(s));
        out["k4_branch_sets"] = std::move(sets);
    }
    return out;
}

json trace_json(const ProofTrace& trace) {
    json steps = json::array();
    for (const TraceStep& s : trace.steps) {
        json entry = {{"kind", to_string(s.kind)},
                      {"justification", s.justification}};
        if (s.triangle)
            entry["triangle"] =
                json::array({(*s.triangle)[0], (*s.triangle)[1], (*s.triangle)[2]});
        if (s.edge) entry["edge"] = edge_array(*s.edge);
        if (s.component)
            entry["component"] = {{"edge", edge_array(s.component->anchor)},
                                  {"direction", s.component->direction},
                                  {"vertices", vertex_array(s.component->vertices)}};
        if (s.vertex) entry["vertex"] = *s.vertex;
        steps.push_back(std::move(entry));
    }
    return {{"final_vertex", trace.final_vertex}, {"steps", steps}};
}

json merge_json(const MergeSummary& summary) {
    return {{"L", summary.L},
            {"gallai", vertex_array(summary.gallai_vertices)},
            {"algos", summary.algorithms}};
}

json dp_tables_json(const DPTable& dp) {
    json nodes = json::array();
    const auto& ntd = *dp.ntd;
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const NiceNode& node = ntd.nodes[i];
        const int total = size_tables(node.bag.size()).count();
        int reachable = 0;
        for (int c = 0; c < total; ++c)
            if (dp.value_at(static_cast<int>(i), c) >= 0) ++reachable;
        nodes.push_back({{"node", i},
                         {"kind", node_kind_name(node.kind)},
                         {"bag_size", node.bag.size()},
                         {"reachable", reachable},
                         {"total", total}});
    }
    return {{"root_value", dp.root_final}, {"nodes", nodes}};
}

} // namespace splp
