#include "splp/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "splp/prng.hpp"

namespace splp {

Family family_from_string(const std::string& name) {
    if (name == "tree") return Family::tree;
    if (name == "cactus") return Family::cactus;
    if (name == "outerplanar") return Family::outerplanar;
    if (name == "two_tree") return Family::two_tree;
    if (name == "series_parallel") return Family::series_parallel;
    if (name == "random_connected") return Family::random_connected;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::tree: return "tree";
        case Family::cactus: return "cactus";
        case Family::outerplanar: return "outerplanar";
        case Family::two_tree: return "two_tree";
        case Family::series_parallel: return "series_parallel";
        case Family::random_connected: return "random_connected";
    }
    throw std::logic_error("bad family");
}

namespace {

Graph gen_tree(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i)
        edges.push_back(make_edge(static_cast<int>(rng.below(i)), i));
    return Graph::from_edges(n, edges);
}

// Random 2-tree: each new vertex is attached to both endpoints of a
// uniformly chosen existing host edge.
std::vector<Edge> two_tree_edges(int n, SplitMix64& rng) {
    if (n < 2) throw std::invalid_argument("two_tree requires n >= 2");
    std::vector<Edge> edges{make_edge(0, 1)};
    for (int i = 2; i < n; ++i) {
        Edge e = edges[rng.below(edges.size())];
        edges.push_back(make_edge(e.first, i));
        edges.push_back(make_edge(e.second, i));
    }
    return edges;
}

// Random 2-tree followed by coin-flip deletion of non-tree edges.  A
// breadth-first spanning tree (root 0, sorted adjacency) is kept intact so
// the result stays connected; every other edge is deleted independently
// with probability `density`, flipping coins in ascending edge order.
Graph gen_series_parallel(int n, double density, SplitMix64& rng) {
    if (n == 1) return Graph::from_edges(1, {});
    auto edges = two_tree_edges(n, rng);
    Graph host = Graph::from_edges(n, edges);
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int w : host.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    std::set<Edge> tree_edges;
    for (int v = 1; v < n; ++v) tree_edges.insert(make_edge(v, parent[v]));
    std::vector<Edge> kept;
    for (const Edge& e : host.edges()) {
        if (tree_edges.count(e)) {
            kept.push_back(e);
        } else if (!rng.chance(density)) {
            kept.push_back(e);
        }
    }
    return Graph::from_edges(n, kept);
}

// Polygon 0..n-1 triangulated by random ear removal, then each chord (never
// a polygon edge) deleted independently with probability `density` in the
// order the chords were created.
Graph gen_outerplanar(int n, double density, SplitMix64& rng) {
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {make_edge(0, 1)});
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    std::vector<Edge> chords;
    while (active.size() > 3) {
        size_t k = active.size();
        size_t idx = rng.below(k);
        int a = active[(idx + k - 1) % k];
        int b = active[(idx + 1) % k];
        chords.push_back(make_edge(a, b));
        active.erase(active.begin() + idx);
    }
    for (const Edge& c : chords)
        if (!rng.chance(density)) edges.push_back(c);
    return Graph::from_edges(n, edges);
}

// Blocks (pendant edges or small cycles) attached one at a time, each at a
// single uniformly chosen existing vertex.
Graph gen_cactus(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    int count = 1;
    while (count < n) {
        int attach = static_cast<int>(rng.below(count));
        int remaining = n - count;
        bool cycle = false;
        if (remaining >= 2) cycle = rng.below(2) == 1;
        if (!cycle) {
            edges.push_back(make_edge(attach, count));
            count += 1;
        } else {
            int max_new = std::min(remaining, 5);
            int k = 2 + static_cast<int>(rng.below(max_new - 1));
            int prev = attach;
            for (int j = 0; j < k; ++j) {
                edges.push_back(make_edge(prev, count + j));
                prev = count + j;
            }
            edges.push_back(make_edge(prev, attach));
            count += k;
        }
    }
    return Graph::from_edges(n, edges);
}

// Random attachment tree plus independent extra edges.
Graph gen_random_connected(int n, double density, SplitMix64& rng) {
    std::vector<Edge> edges;
    std::set<Edge> have;
    for (int i = 1; i < n; ++i) {
        Edge e = make_edge(static_cast<int>(rng.below(i)), i);
        edges.push_back(e);
        have.insert(e);
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (have.count(make_edge(u, v))) continue;
            if (rng.chance(density)) edges.push_back(make_edge(u, v));
        }
    }
    return Graph::from_edges(n, edges);
}

} // namespace

Graph generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generate requires n >= 1");
    if (spec.density < 0.0 || spec.density > 1.0)
        throw std::invalid_argument("density must be in [0,1]");
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case Family::tree:
            return gen_tree(spec.n, rng);
        case Family::cactus:
            return gen_cactus(spec.n, rng);
        case Family::outerplanar:
            return gen_outerplanar(spec.n, spec.density, rng);
        case Family::two_tree:
            if (spec.n == 1) return Graph::from_edges(1, {});
            return Graph::from_edges(spec.n, two_tree_edges(spec.n, rng));
        case Family::series_parallel:
            return gen_series_parallel(spec.n, spec.density, rng);
        case Family::random_connected:
            return gen_random_connected(spec.n, spec.density, rng);
    }
    throw std::logic_error("bad family");
}

namespace {

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(make_edge(i, (i + 1) % 5));        // outer cycle
        edges.push_back(make_edge(i, i + 5));              // spokes
        edges.push_back(make_edge(5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

// Petersen with vertex 0 split into three degree-1 vertices, each keeping
// one of the original incident edges.  Vertices 1..9 become 0..8 and the
// three new leaves are 9, 10, 11.
Graph wvz() {
    Graph p = petersen();
    std::vector<Edge> edges;
    for (const auto& [u, v] : p.edges())
        if (u != 0 && v != 0) edges.push_back(make_edge(u - 1, v - 1));
    int leaf = 9;
    for (int w : p.neighbors(0)) edges.push_back(make_edge(w - 1, leaf++));
    return Graph::from_edges(12, edges);
}

} // namespace

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen();
    if (name == "wvz") return wvz();
    if (name == "k4")
        return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (name == "triangle") return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    auto parse_tail = [&](const std::string& prefix) -> int {
        std::string tail = name.substr(prefix.size());
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("unknown named graph: " + name);
        return std::stoi(tail);
    };
    if (name.rfind("path_", 0) == 0) {
        int n = parse_tail("path_");
        if (n < 1) throw std::invalid_argument("path_<n> requires n >= 1");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) edges.push_back(make_edge(i, i + 1));
        return Graph::from_edges(n, edges);
    }
    if (name.rfind("star_", 0) == 0) {
        int k = parse_tail("star_");
        if (k < 1) throw std::invalid_argument("star_<k> requires k >= 1");
        std::vector<Edge> edges;
        for (int i = 1; i <= k; ++i) edges.push_back(make_edge(0, i));
        return Graph::from_edges(k + 1, edges);
    }
    throw std::invalid_argument("unknown named graph: " + name);
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
           is_connected(g);
}

namespace {

// Biconnected components via iterative lowlink with an edge stack.
struct BlockFinder {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> blocks;
    int counter = 0;

    explicit BlockFinder(const Graph& graph)
        : g(graph), num(graph.vertex_count(), -1), low(graph.vertex_count(), 0) {}

    void run() {
        for (int s = 0; s < g.vertex_count(); ++s)
            if (num[s] < 0) dfs(s);
    }

    void dfs(int root) {
        struct Frame { int v, parent; size_t idx; };
        std::vector<Frame> frames{{root, -1, 0}};
        num[root] = low[root] = counter++;
        while (!frames.empty()) {
            auto& f = frames.back();
            const auto& nbrs = g.neighbors(f.v);
            if (f.idx < nbrs.size()) {
                int w = nbrs[f.idx++];
                if (w == f.parent) continue;
                if (num[w] < 0) {
                    stack.push_back(make_edge(f.v, w));
                    num[w] = low[w] = counter++;
                    frames.push_back({w, f.v, 0});
                } else if (num[w] < num[f.v]) {
                    stack.push_back(make_edge(f.v, w));
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (frames.empty()) break;
                int p = frames.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    std::vector<Edge> block;
                    Edge top = make_edge(p, v);
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == top) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
};

} // namespace

bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    BlockFinder bf(g);
    bf.run();
    for (const auto& block : bf.blocks) {
        if (block.size() == 1) continue;
        std::set<int> verts;
        for (const auto& [u, v] : block) {
            verts.insert(u);
            verts.insert(v);
        }
        if (block.size() != verts.size()) return false; // cycle has |E| == |V|
    }
    return true;
}

} // namespace splp
