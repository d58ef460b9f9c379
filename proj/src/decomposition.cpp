#include "splp/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace splp {

int TreeDecomposition::width() const {
    int w = 0;
    for (const VertexSet& b : bags) w = std::max(w, b.size());
    return w - 1;
}

int NiceTreeDecomposition::width() const {
    int w = 0;
    for (const NiceNode& nd : nodes) w = std::max(w, nd.bag.size());
    return w - 1;
}

TreeDecomposition decomposition_from_embedding(const TwoTreeEmbedding& emb) {
    const Graph& host = emb.host;
    const int n = host.vertex_count();
    if (n < 2) throw std::invalid_argument("decomposition: host too small");

    TreeDecomposition td;
    if (n == 2) {
        td.bags.push_back(host.vertex_set());
        td.parent = {-1};
        td.children = {{}};
        td.root = 0;
        return td;
    }

    // Construction order: reverse elimination.  Each added vertex u forms a
    // bag with its two anchors; the bag hangs off the bag that created the
    // anchor edge (the base edge counts as created by the first bag).
    std::vector<int> rank(n, n); // base endpoints keep rank n
    for (size_t i = 0; i < emb.elimination_order.size(); ++i)
        rank[emb.elimination_order[i]] = static_cast<int>(i);

    auto edge_key = [n](const Edge& e) {
        return static_cast<int64_t>(e.first) * n + e.second;
    };
    std::unordered_map<int64_t, int> creator;
    creator.reserve(2 * static_cast<size_t>(n));
    creator[edge_key(emb.base_edge)] = 0;
    std::vector<int> parent;
    std::vector<VertexSet> bags;
    for (auto it = emb.elimination_order.rbegin();
         it != emb.elimination_order.rend(); ++it) {
        int u = *it;
        int a = -1, b = -1;
        for (int w : host.neighbors(u))
            if (rank[w] > rank[u]) (a < 0 ? a : b) = w;
        if (b < 0)
            throw std::invalid_argument("decomposition: invalid embedding");
        int idx = static_cast<int>(bags.size());
        bags.push_back(VertexSet({u, a, b}));
        parent.push_back(idx == 0 ? -1 : creator.at(edge_key(make_edge(a, b))));
        creator[edge_key(make_edge(u, a))] = idx;
        creator[edge_key(make_edge(u, b))] = idx;
    }

    // Re-root at the lexicographically smallest bag for determinism.
    int new_root = 0;
    for (size_t i = 1; i < bags.size(); ++i)
        if (bags[i] < bags[new_root]) new_root = static_cast<int>(i);
    const int count = static_cast<int>(bags.size());
    std::vector<std::vector<int>> adjacent(count);
    for (int i = 0; i < count; ++i)
        if (parent[i] >= 0) {
            adjacent[i].push_back(parent[i]);
            adjacent[parent[i]].push_back(i);
        }
    td.bags = std::move(bags);
    td.parent.assign(count, -2);
    td.children.assign(count, {});
    td.root = new_root;
    std::vector<int> stack{new_root};
    td.parent[new_root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adjacent[v])
            if (td.parent[u] == -2) {
                td.parent[u] = v;
                td.children[v].push_back(u);
                stack.push_back(u);
            }
    }
    for (int i = 0; i < count; ++i)
        if (td.parent[i] == -2)
            throw std::logic_error("decomposition: bag tree disconnected");
    return td;
}

bool validate_tree_decomposition(const TreeDecomposition& td, const Graph& g) {
    const int n = g.vertex_count();
    const int count = static_cast<int>(td.bags.size());
    if (count == 0 || td.root < 0 || td.root >= count) return false;
    if (td.parent.size() != td.bags.size()) return false;

    std::vector<int> occurrences(n, 0), internal_edges(n, 0);
    for (const VertexSet& b : td.bags)
        for (int v : b.values()) {
            if (v < 0 || v >= n) return false;
            ++occurrences[v];
        }
    for (int v = 0; v < n; ++v)
        if (occurrences[v] == 0) return false; // vertex coverage

    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const VertexSet& b : td.bags)
            if (b.contains(e.first) && b.contains(e.second)) {
                covered = true;
                break;
            }
        if (!covered) return false; // edge coverage
    }

    // Connectivity: a vertex's occurrence set spanning k bags with j tree
    // edges inside it forms a forest of k - j components; require 1.
    for (int i = 0; i < count; ++i) {
        if (i == td.root) {
            if (td.parent[i] != -1) return false;
            continue;
        }
        int p = td.parent[i];
        if (p < 0 || p >= count) return false;
        for (int v : td.bags[i].values())
            if (td.bags[p].contains(v)) ++internal_edges[v];
    }
    for (int v = 0; v < n; ++v)
        if (occurrences[v] - internal_edges[v] != 1) return false;
    return true;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NodeKind kind, VertexSet bag, int vertex, int c0, int c1 = -1) {
        NiceNode nd;
        nd.kind = kind;
        nd.bag = std::move(bag);
        nd.vertex = vertex;
        nd.child = {c0, c1};
        int idx = static_cast<int>(nodes.size());
        if (c0 >= 0) nodes[c0].parent = idx;
        if (c1 >= 0) nodes[c1].parent = idx;
        nodes.push_back(std::move(nd));
        return idx;
    }

    // Leaf followed by introductions of the bag's vertices in ascending id.
    int leaf_chain(const VertexSet& bag) {
        int top = add(NodeKind::Leaf, VertexSet(), -1, -1);
        VertexSet cur;
        for (int v : bag.values()) {
            cur.insert(v);
            top = add(NodeKind::Introduce, cur, v, top);
        }
        return top;
    }

    // Forget departing vertices ascending, then introduce arriving ones
    // ascending, turning the bag at `top` into `target`.
    int transition(int top, const VertexSet& target) {
        VertexSet cur = nodes[top].bag;
        const VertexSet departing = cur.minus(target);
        for (int v : departing.values()) {
            VertexSet next = cur;
            next.erase(v);
            top = add(NodeKind::Forget, next, v, top);
            cur = std::move(next);
        }
        const VertexSet arriving = target.minus(cur);
        for (int v : arriving.values()) {
            VertexSet next = cur;
            next.insert(v);
            top = add(NodeKind::Introduce, next, v, top);
            cur = std::move(next);
        }
        return top;
    }
};

} // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
    const int count = static_cast<int>(td.bags.size());
    NiceBuilder nb;

    // Iterative post-order over the bag tree; children in lex-bag order.
    std::vector<std::vector<int>> kids = td.children;
    for (std::vector<int>& ks : kids)
        std::sort(ks.begin(), ks.end(),
                  [&](int a, int b) { return td.bags[a] < td.bags[b]; });

    std::vector<int> top(count, -1);
    std::vector<std::pair<int, size_t>> stack{{td.root, 0}};
    while (!stack.empty()) {
        auto& [node, next_child] = stack.back();
        if (next_child < kids[node].size()) {
            int c = kids[node][next_child++];
            stack.emplace_back(c, 0);
            continue;
        }
        stack.pop_back();
        const VertexSet& bag = td.bags[node];
        if (kids[node].empty()) {
            top[node] = nb.leaf_chain(bag);
        } else {
            int acc = -1;
            for (int c : kids[node]) {
                int branch = nb.transition(top[c], bag);
                acc = acc < 0 ? branch
                              : nb.add(NodeKind::Join, bag, -1, acc, branch);
            }
            top[node] = acc;
        }
    }

    // Root: forget everything down to the empty bag.
    int root_top = nb.transition(top[td.root], VertexSet());

    NiceTreeDecomposition ntd;
    ntd.nodes = std::move(nb.nodes);
    ntd.root = root_top;
    if (ntd.root != static_cast<int>(ntd.nodes.size()) - 1)
        throw std::logic_error("make_nice: root is not the last node");
    return ntd;
}

bool validate_nice(const NiceTreeDecomposition& ntd, const Graph& g) {
    const int count = static_cast<int>(ntd.nodes.size());
    const int n = g.vertex_count();
    if (count == 0 || ntd.root < 0 || ntd.root >= count) return false;
    if (!ntd.nodes[ntd.root].bag.empty()) return false;
    if (ntd.nodes[ntd.root].parent != -1) return false;

    std::vector<int> forget_count(n, 0);
    std::vector<char> in_any_bag(n, 0);
    int reachable = 0;
    for (int i = 0; i < count; ++i) {
        const NiceNode& nd = ntd.nodes[i];
        for (int v : nd.bag.values()) {
            if (v < 0 || v >= n) return false;
            in_any_bag[v] = 1;
        }
        int kid_count = (nd.child[0] >= 0) + (nd.child[1] >= 0);
        for (int c : nd.child)
            if (c >= 0 && (c >= count || ntd.nodes[c].parent != i)) return false;
        if (i != ntd.root &&
            (nd.parent < 0 || nd.parent >= count ||
             (ntd.nodes[nd.parent].child[0] != i &&
              ntd.nodes[nd.parent].child[1] != i)))
            return false;
        ++reachable;
        switch (nd.kind) {
        case NodeKind::Leaf:
            if (kid_count != 0 || !nd.bag.empty()) return false;
            break;
        case NodeKind::Introduce: {
            if (kid_count != 1 || nd.vertex < 0) return false;
            const VertexSet& cb = ntd.nodes[nd.child[0]].bag;
            if (cb.contains(nd.vertex)) return false;
            VertexSet expect = cb;
            expect.insert(nd.vertex);
            if (!(nd.bag == expect)) return false;
            break;
        }
        case NodeKind::Forget: {
            if (kid_count != 1 || nd.vertex < 0) return false;
            const VertexSet& cb = ntd.nodes[nd.child[0]].bag;
            if (!cb.contains(nd.vertex)) return false;
            VertexSet expect = cb;
            expect.erase(nd.vertex);
            if (!(nd.bag == expect)) return false;
            ++forget_count[nd.vertex];
            break;
        }
        case NodeKind::Join: {
            if (kid_count != 2) return false;
            if (!(ntd.nodes[nd.child[0]].bag == nd.bag) ||
                !(ntd.nodes[nd.child[1]].bag == nd.bag))
                return false;
            break;
        }
        }
    }
    (void)reachable;

    // Children-precede-parent ordering (the DP sweeps rely on it).
    for (int i = 0; i < count; ++i)
        for (int c : ntd.nodes[i].child)
            if (c >= i) return false;

    // Every vertex appears, and is forgotten exactly once: with connected
    // occurrence sets the single forget is the unique topmost exit.
    for (int v = 0; v < n; ++v)
        if (!in_any_bag[v] || forget_count[v] != 1) return false;

    // Occurrence connectivity via the forest-count argument.
    std::vector<int> occurrences(n, 0), internal_edges(n, 0);
    for (int i = 0; i < count; ++i) {
        const NiceNode& nd = ntd.nodes[i];
        for (int v : nd.bag.values()) {
            ++occurrences[v];
            if (i != ntd.root && ntd.nodes[nd.parent].bag.contains(v))
                ++internal_edges[v];
        }
    }
    for (int v = 0; v < n; ++v)
        if (occurrences[v] - internal_edges[v] != 1) return false;

    // Edge coverage: every bag contributes its vertex pairs that are edges
    // of g; the union must be all of E(g).  Walking bags once keeps this
    // linear in the decomposition size for bounded width.
    std::vector<Edge> covered;
    covered.reserve(static_cast<size_t>(count) * 3);
    for (int i = 0; i < count; ++i) {
        const auto& vs = ntd.nodes[i].bag.values();
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b)
                if (g.has_edge(vs[a], vs[b]))
                    covered.push_back(make_edge(vs[a], vs[b]));
    }
    std::sort(covered.begin(), covered.end());
    covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
    return static_cast<int>(covered.size()) == g.edge_count();
}

std::vector<std::vector<Edge>> assign_edges(const NiceTreeDecomposition& ntd,
                                            const Graph& g) {
    std::vector<std::vector<Edge>> assigned(ntd.nodes.size());
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const NiceNode& nd = ntd.nodes[i];
        if (nd.kind != NodeKind::Introduce) continue;
        for (int u : nd.bag.values())
            if (u != nd.vertex && g.has_edge(u, nd.vertex))
                assigned[i].push_back(make_edge(u, nd.vertex));
    }
    return assigned;
}

std::vector<int> forget_nodes(const NiceTreeDecomposition& ntd, int n) {
    std::vector<int> forget(n, -1);
    for (size_t i = 0; i < ntd.nodes.size(); ++i) {
        const NiceNode& nd = ntd.nodes[i];
        if (nd.kind != NodeKind::Forget) continue;
        if (nd.vertex < 0 || nd.vertex >= n || forget[nd.vertex] != -1)
            throw std::logic_error("forget_nodes: vertex forgotten twice");
        forget[nd.vertex] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v)
        if (forget[v] == -1)
            throw std::logic_error("forget_nodes: vertex never forgotten");
    return forget;
}

} // namespace splp
