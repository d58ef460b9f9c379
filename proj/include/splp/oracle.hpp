#pragma once

#include <vector>

#include "splp/graph.hpp"

namespace splp {

// Exhaustive ground truth for desk-scale graphs.  Every routine here is
// deliberately brute force; the fast algorithms are tested against these.

struct LongestPathSet {
    int length = 0;           // edge count of a longest path
    std::vector<Path> paths;  // every longest path, canonical and sorted
};

// All longest paths by exhaustive DFS from every start vertex, deduplicated
// by canonical orientation.  Throws if g has more than cap vertices.
LongestPathSet enumerate_longest_paths(const Graph& g, int cap = 14);

// Vertices common to all longest paths.
VertexSet gallai_set_bruteforce(const Graph& g, int cap = 14);

// Index sets into lps.paths for membership patterns of u, v, w.
struct LPClassification {
    std::vector<int> with_uv;          // contains u and v
    std::vector<int> with_u_not_v;     // contains u, avoids v
    std::vector<int> with_uvw;         // contains u, v and w
    std::vector<int> with_uv_not_w;    // contains u and v, avoids w
    std::vector<int> with_u_only;      // contains u, avoids v and w
    std::vector<int> v_between_uw;     // contains all three, v between u and w
};

LPClassification classify_longest_paths(const LongestPathSet& lps, int u,
                                        int v, int w);

// True iff every two longest paths share a vertex.  Requires connected g.
bool pairwise_intersection_holds(const Graph& g, int cap = 14);

// True iff every p of the longest paths share a common vertex (vacuously
// true when fewer than p longest paths exist).  Requires connected g.
bool p_wise_common_vertex(const Graph& g, int p, int cap = 14);

bool hamiltonian_cycle_exists(const Graph& g);
bool hamiltonian_path_exists(const Graph& g);

// Exact treewidth by dynamic programming over elimination prefixes.
// Limited to n <= 16.
int exact_treewidth(const Graph& g);

// Backtracking isomorphism test for small graphs.
bool graphs_isomorphic(const Graph& a, const Graph& b);

} // namespace splp
