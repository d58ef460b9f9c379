#pragma once

#include <array>
#include <vector>

#include "splp/graph.hpp"
#include "splp/two_tree.hpp"

namespace splp {

// Width-2 tree decomposition whose bags are the host triangles (or the base
// edge when n = 2), rooted at the lexicographically smallest bag.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<int> parent; // -1 at root
    std::vector<std::vector<int>> children;
    int root = 0;

    int width() const;
};

TreeDecomposition decomposition_from_embedding(const TwoTreeEmbedding& emb);

// The three decomposition axioms: vertex coverage, edge coverage, and
// connectivity of each vertex's occurrence set.
bool validate_tree_decomposition(const TreeDecomposition& td, const Graph& g);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    VertexSet bag;
    int vertex = -1; // the introduced/forgotten vertex
    int parent = -1;
    std::array<int, 2> child{-1, -1};
};

// Children always precede their parent in `nodes`; a single ascending sweep
// is bottom-up and a descending sweep is top-down.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
};

// Refine into Leaf/Introduce/Forget/Join form with an empty root bag.
// Between adjacent bags, departing vertices are forgotten in ascending id
// order before arriving ones are introduced in ascending id order; sibling
// subtrees are folded with a left-leaning chain of Join nodes.
NiceTreeDecomposition make_nice(const TreeDecomposition& td);

bool validate_nice(const NiceTreeDecomposition& ntd, const Graph& g);

// Maps each edge of g to the Introduce nodes that consume it: {u,v} is
// assigned to every Introduce node whose introduced vertex is one endpoint
// and whose bag already holds the other.  On any root-ward branch at most
// one such node exists per edge, so no realization can use an edge twice.
std::vector<std::vector<Edge>> assign_edges(const NiceTreeDecomposition& ntd,
                                            const Graph& g);

// The unique Forget node of each vertex (asserts uniqueness).
std::vector<int> forget_nodes(const NiceTreeDecomposition& ntd, int n);

} // namespace splp
