#include "splp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace splp {

VertexSet::VertexSet(std::initializer_list<int> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
    VertexSet out;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(out.ids_));
    return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(out.ids_));
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
}

bool VertexSet::is_strict_subset_of(const VertexSet& other) const {
    return size() < other.size() && is_subset_of(other);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop not allowed");
        g.edges_.push_back(make_edge(a, b));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
        throw std::invalid_argument("duplicate edge not allowed");
    for (const auto& [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

VertexSet Graph::vertex_set() const {
    std::vector<int> ids(n_);
    for (int i = 0; i < n_; ++i) ids[i] = i;
    return VertexSet(std::move(ids));
}

bool Path::contains(int v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

VertexSet Path::vertex_set() const {
    return VertexSet(vertices);
}

std::vector<Edge> Path::edge_set() const {
    std::vector<Edge> out;
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        out.push_back(make_edge(vertices[i], vertices[i + 1]));
    std::sort(out.begin(), out.end());
    return out;
}

Path Path::reversed() const {
    Path out = *this;
    std::reverse(out.vertices.begin(), out.vertices.end());
    return out;
}

Path Path::canonical() const {
    if (vertices.empty() || vertices.front() <= vertices.back()) return *this;
    return reversed();
}

bool Path::is_valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    std::set<int> seen;
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    for (size_t i = 0; i + 1 < vertices.size(); ++i)
        if (!g.has_edge(vertices[i], vertices[i + 1])) return false;
    return true;
}

namespace {

// Parses a whole line as exactly `count` ints; throws ParseError otherwise.
std::vector<int> parse_ints(const std::string& line, int line_no, int count) {
    std::vector<int> out;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (true) {
        while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        if (p == end) break;
        int value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t' && *next != '\r'))
            throw ParseError(line_no, "malformed integer in '" + line + "'");
        out.push_back(value);
        p = next;
    }
    if (static_cast<int>(out.size()) != count)
        throw ParseError(line_no, "expected " + std::to_string(count) +
                                      " integers, got " + std::to_string(out.size()));
    return out;
}

bool skippable(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (c != ' ' && c != '\t' && c != '\r') return false;
    }
    return true; // blank
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::set<int>> adj;
    int header_line = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        if (n < 0) {
            auto hdr = parse_ints(line, line_no, 2);
            n = hdr[0];
            m = hdr[1];
            header_line = line_no;
            if (n <= 0) throw ParseError(line_no, "vertex count must be positive");
            if (m < 0) throw ParseError(line_no, "edge count must be nonnegative");
            adj.resize(n);
            continue;
        }
        if (static_cast<int>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than declared");
        auto uv = parse_ints(line, line_no, 2);
        int u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex id out of range");
        if (u == v) throw ParseError(line_no, "self-loop not allowed");
        auto e = make_edge(u, v);
        if (adj[e.first].count(e.second))
            throw ParseError(line_no, "duplicate edge");
        adj[e.first].insert(e.second);
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(line_no ? line_no : 1, "missing header line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(header_line, "declared " + std::to_string(m) +
                                          " edges, found " +
                                          std::to_string(edges.size()));
    return Graph::from_edges(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 0) throw std::invalid_argument("is_connected requires n >= 1");
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty set");
    InducedSubgraph out;
    out.new_to_old = keep;
    std::sort(out.new_to_old.begin(), out.new_to_old.end());
    out.new_to_old.erase(
        std::unique(out.new_to_old.begin(), out.new_to_old.end()),
        out.new_to_old.end());
    std::vector<int> old_to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < out.new_to_old.size(); ++i) {
        int v = out.new_to_old[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        old_to_new[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (old_to_new[a] >= 0 && old_to_new[b] >= 0)
            edges.push_back(make_edge(old_to_new[a], old_to_new[b]));
    out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

VertexDeletion delete_vertex(const Graph& g, int v) {
    int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    VertexDeletion out;
    out.old_to_new.assign(n, -1);
    out.new_to_old.reserve(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        out.old_to_new[u] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(u);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back(make_edge(out.old_to_new[a], out.old_to_new[b]));
    }
    out.graph = Graph::from_edges(n - 1, edges);
    return out;
}

std::vector<Path> split_path_at(const Path& p, const VertexSet& cuts) {
    if (p.vertices.empty()) throw std::invalid_argument("empty path");
    std::vector<int> positions;
    for (size_t i = 0; i < p.vertices.size(); ++i)
        if (cuts.contains(p.vertices[i])) positions.push_back(static_cast<int>(i));
    std::vector<Path> pieces;
    int start = 0;
    for (int pos : positions) {
        pieces.emplace_back(std::vector<int>(p.vertices.begin() + start,
                                             p.vertices.begin() + pos + 1));
        start = pos;
    }
    pieces.emplace_back(std::vector<int>(p.vertices.begin() + start,
                                         p.vertices.end()));
    return pieces;
}

Path bridge_path(const Path& p, const Path& q, int x) {
    if (p.vertices.empty() || q.vertices.empty())
        throw std::invalid_argument("bridge_path: empty path");
    if (p.front() != x && p.back() != x)
        throw std::invalid_argument("bridge_path: x is not an endpoint of p");
    if (q.contains(x))
        throw std::invalid_argument("bridge_path: x lies on q");
    std::vector<int> walk = p.vertices;
    if (walk.front() != x) std::reverse(walk.begin(), walk.end());
    std::vector<int> prefix;
    for (int v : walk) {
        prefix.push_back(v);
        if (q.contains(v)) return Path(std::move(prefix));
    }
    throw std::invalid_argument("bridge_path: p and q share no vertex");
}

std::vector<Path> induced_subpaths(const Path& p, const VertexSet& keep) {
    std::vector<Path> out;
    std::vector<int> run;
    for (int v : p.vertices) {
        if (keep.contains(v)) {
            run.push_back(v);
        } else if (!run.empty()) {
            out.emplace_back(std::move(run));
            run.clear();
        }
    }
    if (!run.empty()) out.emplace_back(std::move(run));
    return out;
}

} // namespace splp
