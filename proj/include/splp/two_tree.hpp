#pragma once

#include <array>
#include <optional>
#include <vector>

#include "splp/graph.hpp"

namespace splp {

// Witness that a graph is not a partial 2-tree: four disjoint branch sets,
// each inducing a connected subgraph, pairwise joined by an edge.
struct K4MinorCertificate {
    std::array<VertexSet, 4> branch_sets;
};

bool validate_k4_certificate(const K4MinorCertificate& cert, const Graph& g);

struct RecognitionResult {
    // Exactly one of the two is set.
    std::optional<std::vector<int>> removal_order;
    std::optional<K4MinorCertificate> certificate;
    bool accepted() const { return removal_order.has_value(); }
};

// Reduction-based partial 2-tree test: repeatedly remove vertices of degree
// <= 1 and contract degree-2 vertices (adding the fill edge if absent),
// always picking the lowest-numbered eligible vertex.  Accepts iff the graph
// shrinks to at most two vertices; otherwise extracts a certificate.
RecognitionResult recognize_partial_two_tree(const Graph& g);

// A 2-tree on all of V(G) whose edges contain E(G), with per-edge flags for
// edges of G ("real") versus fill edges, plus the construction order.
struct TwoTreeEmbedding {
    Graph host;
    std::vector<bool> real;             // parallel to host.edges()
    std::vector<int> elimination_order; // n-2 vertices, first eliminated first
    Edge base_edge;

    bool edge_real(int u, int v) const;
    // The two host neighbors of v that survive v's elimination.
    std::array<int, 2> anchors_of(int v) const;
};

// Deterministic completion of a connected partial 2-tree (n >= 2) to a
// spanning 2-tree.  A degree-1 vertex v with neighbor u receives a fill edge
// to the lowest-numbered other current neighbor of u, so every eliminated
// vertex has exactly two adjacent neighbors in the host.
TwoTreeEmbedding complete_to_two_tree(const Graph& g);

// Replays the stored elimination order and checks host/graph consistency:
// spans V(G), covers E(G), real flags exact, host is a 2-tree.
bool validate_embedding(const TwoTreeEmbedding& emb, const Graph& g);

// Piece of G hanging off a host edge {x,y}: the vertices of one component
// of host - x - y (the one holding the common host-neighbor `direction`)
// together with x and y.  The induced subgraph of G may be disconnected.
struct Component {
    Edge anchor;
    int direction;
    VertexSet vertices;
    VertexSet interior; // vertices minus the anchor endpoints
};

// One component per common host-neighbor z of {x,y}, ascending in z.
// Requires {x,y} to be a host edge.
std::vector<Component> components_of_virtual_edge(const TwoTreeEmbedding& emb,
                                                  int x, int y);

// All triangles of the host 2-tree, as sorted triples in sorted order.
std::vector<std::array<int, 3>> virtual_triangles(const TwoTreeEmbedding& emb);

} // namespace splp
