#pragma once

#include <json.hpp>

#include "splp/decomposition.hpp"
#include "splp/gallai.hpp"
#include "splp/graph.hpp"
#include "splp/oracle.hpp"
#include "splp/path_dp.hpp"
#include "splp/trace.hpp"
#include "splp/two_tree.hpp"

namespace splp {

using json = nlohmann::json;

// {"n", "m", "edges": [[u, v], ...]}
json graph_json(const Graph& g);

// {"n", "m", "L", "gallai": [...], "algo", "millis"}
json report_json(const GallaiReport& report);

// {"n", "base_edge", "elimination_order", "host_edges": [{"u","v","real"}]}
json embedding_json(const TwoTreeEmbedding& emb);

// {"width", "root", "nodes": [{"kind","bag","vertex","children"}]}
json nice_decomposition_json(const NiceTreeDecomposition& ntd);

// {"L", "count", "paths": [[...], ...]}; paths included only when dump_paths.
json longest_paths_json(const LongestPathSet& lps, bool dump_paths);

// {"series_parallel", "removal_order"} or {"series_parallel",
//  "k4_branch_sets": [[...], [...], [...], [...]]}
json recognition_json(const RecognitionResult& result);

// {"final_vertex", "steps": [{"kind", "justification", optional "triangle",
//  "edge", "component": {"edge","direction","vertices"}, "vertex"}]}
json trace_json(const ProofTrace& trace);

// {"L", "gallai": [...], "algos": [...]}
json merge_json(const MergeSummary& summary);

// {"root_value", "nodes": [{"node","kind","bag_size","reachable","total"}]}
json dp_tables_json(const DPTable& dp);

} // namespace splp
