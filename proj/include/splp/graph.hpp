#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace splp {

// Undirected edge, stored normalized with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Sorted set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    explicit VertexSet(std::vector<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v); // no-op if absent
    bool empty() const { return ids_.empty(); }
    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& values() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    VertexSet intersect(const VertexSet& other) const;
    VertexSet unite(const VertexSet& other) const;
    VertexSet minus(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    bool is_strict_subset_of(const VertexSet& other) const;

    bool operator==(const VertexSet&) const = default;
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

private:
    std::vector<int> ids_; // sorted, unique
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Validates: vertex ids in range, no self-loops, no duplicate edges.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet vertex_set() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;            // sorted lexicographically
    std::vector<std::vector<int>> adj_;  // each neighbor list sorted
};

// Simple path as an explicit vertex sequence (single vertex allowed).
struct Path {
    std::vector<int> vertices;

    Path() = default;
    Path(std::initializer_list<int> vs) : vertices(vs) {}
    explicit Path(std::vector<int> vs) : vertices(std::move(vs)) {}

    // Number of edges.
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool contains(int v) const;
    int front() const { return vertices.front(); }
    int back() const { return vertices.back(); }
    VertexSet vertex_set() const;
    std::vector<Edge> edge_set() const;

    // A path and its reverse are the same path; the canonical orientation
    // puts the smaller endpoint first.
    Path canonical() const;
    Path reversed() const;

    // Nonempty, pairwise distinct vertices, consecutive pairs adjacent in g.
    bool is_valid_in(const Graph& g) const;

    bool operator==(const Path&) const = default;
    bool operator<(const Path& o) const { return vertices < o.vertices; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
          line(line_no) {}
};

// Text format: first line "n m", then m lines "u v"; '#' starts a comment
// line; blank lines are ignored.  Rejects n = 0, ids out of range,
// self-loops, duplicate edges and malformed lines, each with a line number.
Graph parse_edge_list(const std::string& text);

// Inverse of parse_edge_list; edges sorted by (min,max) endpoint pair.
std::string serialize_edge_list(const Graph& g);

bool is_connected(const Graph& g);

struct VertexDeletion {
    Graph graph;
    std::vector<int> old_to_new; // -1 for the deleted vertex
    std::vector<int> new_to_old;
};

// Removes v and compacts ids, returning the id mapping alongside.
VertexDeletion delete_vertex(const Graph& g, int v);

// Vertex sets of the connected components, each sorted, ordered by smallest
// member.  Isolated vertices form singleton components.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> new_to_old; // new id i held old id new_to_old[i]
};

// Subgraph induced by `keep` (must be nonempty, ids in range), with vertices
// renumbered 0..|keep|-1 in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Maximal subpaths between/around cut vertices, in order along p; adjacent
// pieces share exactly their common cut vertex and concatenation gives p.
// Cut vertices not on p are ignored.
std::vector<Path> split_path_at(const Path& p, const VertexSet& cuts);

// Walks p from its endpoint x and returns the prefix up to and including the
// first vertex that lies on q.  Requires: x an endpoint of p, x not on q,
// and p, q sharing at least one vertex.
Path bridge_path(const Path& p, const Path& q, int x);

// Maximal runs of consecutive vertices of p that lie inside keep, in order.
std::vector<Path> induced_subpaths(const Path& p, const VertexSet& keep);

} // namespace splp
