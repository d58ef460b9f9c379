#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splp/graph.hpp"
#include "splp/oracle.hpp"
#include "splp/two_tree.hpp"

namespace splp {

enum class SurgeryKind { two_tails, shared_vertex, corollary_dispatch };

const char* to_string(SurgeryKind k);

// Record of one path-surgery application: the inputs as given, the
// constructed output path(s), and the splice vertices the rewiring used.
struct SurgeryWitness {
    SurgeryKind kind;
    std::vector<Path> inputs;
    std::vector<Path> outputs;
    int x = -1;
    int y = -1;
    int z = -1; // -1 when the surgery has no shared vertex
};

// Rewires two paths joined through their tails into two replacement paths
// whose total length strictly exceeds the originals'.  Requires: r1, r2 are
// tails of p1, p2 (subpaths containing an endpoint); r1 avoids p2 and r2
// avoids p1 entirely; conn meets p1 only inside r1 and p2 only inside r2,
// touching both.  Returns (q1, q2) with |q1| + |q2| > |p1| + |p2|.
std::pair<Path, Path> surgery_two_tails(const Path& p1, const Path& r1,
                                        const Path& p2, const Path& r2,
                                        const Path& conn,
                                        SurgeryWitness* witness = nullptr);

// Rewires two paths meeting at z into a single path strictly longer than
// one of them.  Requires: r1, r2 are subpaths of p1, p2 with endpoint z;
// r1 meets p2 exactly in z and r2 meets p1 exactly in z; conn avoids z,
// meets p1 only inside r1 and p2 only inside r2, touching both.
Path surgery_shared_vertex(const Path& p1, const Path& p2, int z,
                           const Path& r1, const Path& r2, const Path& conn,
                           SurgeryWitness* witness = nullptr);

struct CorollaryResult {
    SurgeryKind branch; // two_tails or shared_vertex
    std::optional<Path> single;                // shared_vertex branch
    std::optional<std::pair<Path, Path>> pair; // two_tails branch
};

// Dispatch form that accepts the second path's reserved region in pieces:
// pairwise internally disjoint subpaths of p2, each anchored at z or at an
// endpoint of p2, jointly meeting p1 in at most z.  Locates the splice pair
// (x, y) and routes to surgery_shared_vertex when the piece holding y
// contains z (trimmed to its z-to-y side), else to surgery_two_tails with
// tails r1 - z and that piece.
CorollaryResult surgery_corollary(const Path& p1, const Path& p2, int z,
                                  const Path& r1,
                                  const std::vector<Path>& r2_pieces,
                                  const Path& conn,
                                  SurgeryWitness* witness = nullptr);

// Optional side paths for the second structural check: s1 runs between two
// triangle vertices and s2 between the shared one and the third, each
// meeting the triangle only in its own endpoints.
struct Sp2Sides {
    Path s1;
    Path s2;
};

struct TriangleTailsReport {
    // Intersection flags for the pairs (r1,r2), (r1,r3), (r2,r3).
    std::array<bool, 3> pair_intersects{};
    int intersecting_pairs = 0;
    // When exactly one pair meets: the component holding both its tails.
    std::optional<Component> container;
    bool sp2_checked = false;
    bool sp2_ok = true;
    bool ok = true;          // all structural conclusions verified
    std::string violation;   // counterexample dump when !ok
};

// Structural check for three tails hanging off a virtual triangle, each
// meeting the triangle only in its own vertex: at most one pair of tails
// may intersect, and an intersecting pair must live inside one component
// of its edge away from the third vertex.  Violations would certify a K4
// minor, so they are reported as counterexample dumps, not exceptions.
TriangleTailsReport validate_triangle_tails(
    const TwoTreeEmbedding& emb, const Graph& g,
    const std::array<int, 3>& triangle, const Path& r1, const Path& r2,
    const Path& r3, const std::optional<Sp2Sides>& sides = std::nullopt);

enum class TraceStepKind {
    triangle_found,
    edge_selected,
    component_iterated,
    vertex_found,
};

const char* to_string(TraceStepKind k);

struct TraceStep {
    TraceStepKind kind;
    std::optional<std::array<int, 3>> triangle;
    std::optional<Edge> edge;
    std::optional<Component> component;
    std::optional<int> vertex;
    std::string justification; // which longest-path checks passed
};

struct ProofTrace {
    std::vector<TraceStep> steps;
    int final_vertex = -1;
};

// Creation triangle of the base edge: the last-eliminated vertex together
// with its two anchors.  The triangle walk starts here.
std::array<int, 3> root_triangle(const TwoTreeEmbedding& emb);

// True iff every crossing pair of longest paths — one containing u but not
// v paired with one containing v but not u, and either of those paired with
// one containing both — shares a vertex inside the component interior.
// pairs_checked receives the number of pairs examined.
bool crossing_pairs_meet_interior(const LongestPathSet& lps, int u, int v,
                                  const Component& c,
                                  int* pairs_checked = nullptr);

struct GallaiTriangleResult {
    std::array<int, 3> triangle;
    std::vector<TraceStep> steps; // one component_iterated step per hop
};

// Walks from the root triangle into ever-smaller components while some
// longest path avoids the current triangle; ends at a triangle met by every
// longest path.  Component vertex sets strictly shrink hop over hop.
GallaiTriangleResult find_gallai_triangle(const Graph& g,
                                          const TwoTreeEmbedding& emb,
                                          const LongestPathSet& lps);

struct EdgeSelection {
    std::optional<int> vertex; // set when a single vertex already suffices
    std::optional<Edge> edge;
    std::optional<Component> component;
    int pair_checks = 0; // crossing pairs verified against the interior
};

// Given a triangle met by every longest path: returns the lowest triangle
// vertex lying on all longest paths when one exists; otherwise the first
// triangle edge (lexicographic) met by every longest path together with the
// first component (ascending direction, skipping the third triangle vertex)
// whose interior holds a common vertex of every crossing pair.
EdgeSelection select_gallai_edge(const Graph& g, const TwoTreeEmbedding& emb,
                                 const std::array<int, 3>& triangle,
                                 const LongestPathSet& lps);

// One shrink step.  With w the component's direction vertex, either the
// lowest of u, v, w lying on every longest path is returned, or the search
// of select_gallai_edge is repeated over the triangle {u, v, w} restricted
// to components strictly inside c.
EdgeSelection iterate_component(const Graph& g, const TwoTreeEmbedding& emb,
                                const Edge& edge, const Component& c,
                                const LongestPathSet& lps);

// Full engine: embed, enumerate all longest paths, walk to a triangle met
// by every longest path, select an edge and component, then shrink until a
// vertex on every longest path is found.  Step sequence:
// component_iterated* triangle_found edge_selected* vertex_found, or a lone
// vertex_found for graphs with fewer than three vertices.
ProofTrace run_trace(const Graph& g, int cap = 14);

// Re-derives the embedding and longest paths and re-checks every step's
// claim, including strict component shrinkage step over step.  Throws
// std::runtime_error naming the first failing step.
void verify_trace(const Graph& g, const ProofTrace& trace, int cap = 14);

} // namespace splp
