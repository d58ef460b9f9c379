#pragma once

#include <string>
#include <vector>

#include "splp/graph.hpp"
#include "splp/path_dp.hpp"
#include "splp/two_tree.hpp"

namespace splp {

struct GallaiReport {
    int L = 0;
    VertexSet gallai_vertices; // vertices on every longest path
    std::string algorithm;     // "naive", "fast" or "oracle"
    int n = 0;
    int m = 0;
    double millis = 0.0;
};

// Embedding + decomposition + forward DP for a connected partial 2-tree on
// at least two vertices.  Throws std::invalid_argument otherwise.
struct SpPipeline {
    TwoTreeEmbedding embedding;
    NiceTreeDecomposition nice;
    DPTable dp;
};

SpPipeline sp_pipeline(const Graph& g);

// Longest-path length of a connected partial 2-tree; 0 for a single vertex.
int sp_longest_path_length(const Graph& g);

// Deletion definition: v is reported iff the longest path of g - v is
// shorter (per component; an empty remainder counts as length -1, making the
// sole vertex of the one-vertex graph a hit).  jobs parallelizes over the
// deletions; 0 picks the hardware default.
GallaiReport gallai_naive(const Graph& g, int jobs = 0);

// Single forward DP plus one marking pass; v is reported iff at v's Forget
// node every marked configuration entering it has v on the path (END or
// MID).  Always set-equal to gallai_naive.
GallaiReport gallai_fast(const Graph& g);

// Brute-force intersection of all longest paths; any connected graph.
GallaiReport gallai_oracle(const Graph& g, int cap = 14);

struct MergeSummary {
    int L = 0;
    VertexSet gallai_vertices;
    std::vector<std::string> algorithms;
};

// Consolidates reports for one graph; throws std::runtime_error naming the
// disagreeing algorithms (and dumping the edge list when g is given) if any
// two reports differ in L or vertex set.
MergeSummary gallai_report_merge(const std::vector<GallaiReport>& reports,
                                 const Graph* g = nullptr);

} // namespace splp
