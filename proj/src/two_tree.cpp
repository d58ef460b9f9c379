#include "splp/two_tree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splp {

namespace {

std::vector<std::set<int>> adjacency_sets(const Graph& g) {
    std::vector<std::set<int>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    return adj;
}

void remove_live_vertex(std::vector<std::set<int>>& adj, int v) {
    for (int u : adj[v]) adj[u].erase(v);
    adj[v].clear();
}

// Decision-only series-parallel reduction on a throwaway adjacency
// structure.  Returns true iff the graph reduces to <= 2 live vertices.
bool reduces_away(std::vector<std::set<int>> adj, std::vector<char> alive,
                  int live_count) {
    std::set<int> eligible;
    for (int v = 0; v < static_cast<int>(adj.size()); ++v)
        if (alive[v] && adj[v].size() <= 2) eligible.insert(v);
    while (!eligible.empty() && live_count > 2) {
        int v = *eligible.begin();
        eligible.erase(eligible.begin());
        if (!alive[v]) continue;
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        remove_live_vertex(adj, v);
        alive[v] = 0;
        --live_count;
        if (nbrs.size() == 2 && adj[nbrs[0]].count(nbrs[1]) == 0) {
            adj[nbrs[0]].insert(nbrs[1]);
            adj[nbrs[1]].insert(nbrs[0]);
        }
        for (int u : nbrs)
            if (adj[u].size() <= 2) eligible.insert(u);
    }
    return live_count <= 2;
}

// Contract v into u on a live adjacency structure (v disappears).
void contract_into(std::vector<std::set<int>>& adj, int u, int v) {
    std::vector<int> nbrs(adj[v].begin(), adj[v].end());
    remove_live_vertex(adj, v);
    for (int x : nbrs) {
        if (x == u) continue;
        adj[u].insert(x);
        adj[x].insert(u);
    }
}

// Shrinks a graph with a K4 minor down to an explicit K4 model.  Branch
// sets are tracked through contractions; degree-<=2 reductions never
// destroy the minor, and when none applies some edge contraction keeps the
// graph non-series-parallel (otherwise the 4-vertex complete kernel is
// already reached).
K4MinorCertificate extract_k4(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj = adjacency_sets(g);
    std::vector<char> alive(n, 1);
    std::vector<std::vector<int>> branch(n);
    for (int v = 0; v < n; ++v) branch[v] = {v};
    int live_count = n;

    auto lowest_reducible = [&]() {
        for (int v = 0; v < n; ++v)
            if (alive[v] && adj[v].size() <= 2) return v;
        return -1;
    };

    while (true) {
        int v = lowest_reducible();
        if (v >= 0) {
            std::vector<int> nbrs(adj[v].begin(), adj[v].end());
            if (nbrs.size() == 2 && adj[nbrs[0]].count(nbrs[1]) == 0) {
                // Series contraction: v's branch set joins its lower
                // neighbor, preserving connectivity via the live edge.
                int a = nbrs[0];
                contract_into(adj, a, v);
                branch[a].insert(branch[a].end(), branch[v].begin(),
                                 branch[v].end());
            } else {
                remove_live_vertex(adj, v);
            }
            alive[v] = 0;
            --live_count;
            continue;
        }
        // Minimum degree >= 3 on every live vertex.
        if (live_count < 4)
            throw std::logic_error("extract_k4: graph reduced away");
        if (live_count == 4) {
            std::vector<int> live;
            for (int u = 0; u < n; ++u)
                if (alive[u]) live.push_back(u);
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (adj[live[i]].count(live[j]) == 0)
                        throw std::logic_error(
                            "extract_k4: kernel of four vertices not complete");
            K4MinorCertificate cert;
            for (int i = 0; i < 4; ++i)
                cert.branch_sets[i] = VertexSet(branch[live[i]]);
            return cert;
        }
        // More than four live vertices: contract the first edge whose
        // contraction stays non-series-parallel.  One always exists.
        bool contracted = false;
        for (int u = 0; u < n && !contracted; ++u) {
            if (!alive[u]) continue;
            for (int w : adj[u]) {
                if (w < u) continue;
                std::vector<std::set<int>> trial = adj;
                contract_into(trial, u, w);
                std::vector<char> trial_alive = alive;
                trial_alive[w] = 0;
                if (!reduces_away(std::move(trial), std::move(trial_alive),
                                  live_count - 1)) {
                    contract_into(adj, u, w);
                    branch[u].insert(branch[u].end(), branch[w].begin(),
                                     branch[w].end());
                    alive[w] = 0;
                    --live_count;
                    contracted = true;
                    break;
                }
            }
        }
        if (!contracted)
            throw std::logic_error("extract_k4: no safe contraction found");
    }
}

} // namespace

bool validate_k4_certificate(const K4MinorCertificate& cert, const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (int i = 0; i < 4; ++i) {
        if (cert.branch_sets[i].empty()) return false;
        for (int v : cert.branch_sets[i].values()) {
            if (v < 0 || v >= n || owner[v] != -1) return false;
            owner[v] = i;
        }
    }
    // Each branch set must induce a connected subgraph of g.
    for (int i = 0; i < 4; ++i) {
        const std::vector<int>& vs = cert.branch_sets[i].values();
        std::set<int> seen{vs[0]};
        std::vector<int> stack{vs[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (owner[u] == i && seen.insert(u).second) stack.push_back(u);
        }
        if (seen.size() != vs.size()) return false;
    }
    // Every pair of branch sets must be joined by an edge of g.
    bool joined[4][4] = {};
    for (const Edge& e : g.edges()) {
        int a = owner[e.first], b = owner[e.second];
        if (a >= 0 && b >= 0 && a != b) joined[a][b] = joined[b][a] = true;
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (!joined[i][j]) return false;
    return true;
}

RecognitionResult recognize_partial_two_tree(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj = adjacency_sets(g);
    std::vector<char> alive(n, 1);
    int live_count = n;
    std::vector<int> order;
    std::set<int> eligible;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 2) eligible.insert(v);

    while (!eligible.empty() && live_count > 2) {
        int v = *eligible.begin();
        eligible.erase(eligible.begin());
        if (!alive[v]) continue;
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        remove_live_vertex(adj, v);
        alive[v] = 0;
        --live_count;
        order.push_back(v);
        if (nbrs.size() == 2 && adj[nbrs[0]].count(nbrs[1]) == 0) {
            adj[nbrs[0]].insert(nbrs[1]);
            adj[nbrs[1]].insert(nbrs[0]);
        }
        for (int u : nbrs)
            if (adj[u].size() <= 2) eligible.insert(u);
    }

    RecognitionResult result;
    if (live_count <= 2)
        result.removal_order = std::move(order);
    else
        result.certificate = extract_k4(g);
    return result;
}

bool TwoTreeEmbedding::edge_real(int u, int v) const {
    const std::vector<Edge>& es = host.edges();
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(es.begin(), es.end(), e);
    if (it == es.end() || *it != e)
        throw std::invalid_argument("edge_real: not a host edge");
    return real[static_cast<size_t>(it - es.begin())];
}

std::array<int, 2> TwoTreeEmbedding::anchors_of(int v) const {
    const int n = host.vertex_count();
    std::vector<int> pos(n, n); // base endpoints keep rank n (never eliminated)
    for (size_t i = 0; i < elimination_order.size(); ++i)
        pos[elimination_order[i]] = static_cast<int>(i);
    if (pos[v] == n)
        throw std::invalid_argument("anchors_of: vertex is never eliminated");
    std::array<int, 2> out{-1, -1};
    int found = 0;
    for (int u : host.neighbors(v))
        if (pos[u] > pos[v]) {
            if (found == 2)
                throw std::logic_error("anchors_of: more than two anchors");
            out[found++] = u;
        }
    if (found != 2) throw std::logic_error("anchors_of: fewer than two anchors");
    return out;
}

TwoTreeEmbedding complete_to_two_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2)
        throw std::invalid_argument("complete_to_two_tree: need at least 2 vertices");
    if (!is_connected(g))
        throw std::invalid_argument("complete_to_two_tree: graph is disconnected");

    std::vector<std::set<int>> adj = adjacency_sets(g);
    std::vector<char> alive(n, 1);
    int live_count = n;
    std::vector<std::array<int, 3>> steps; // (v, a, b)
    std::set<int> eligible;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() <= 2) eligible.insert(v);

    while (live_count > 2) {
        auto it = eligible.begin();
        while (it != eligible.end() && !alive[*it]) it = eligible.erase(it);
        if (it == eligible.end())
            throw std::invalid_argument(
                "complete_to_two_tree: graph is not series-parallel");
        int v = *it;
        eligible.erase(it);
        std::vector<int> nbrs(adj[v].begin(), adj[v].end());
        int a, b;
        if (nbrs.size() == 1) {
            // Pendant vertex: pair its neighbor with that neighbor's
            // lowest-numbered other neighbor via a fill edge.
            a = nbrs[0];
            auto jt = adj[a].begin();
            if (*jt == v) ++jt;
            if (jt == adj[a].end())
                throw std::logic_error("complete_to_two_tree: isolated edge"
                                       " with more than two vertices left");
            b = *jt;
        } else if (nbrs.size() == 2) {
            a = nbrs[0];
            b = nbrs[1];
        } else {
            throw std::logic_error("complete_to_two_tree: eligible vertex"
                                   " with unexpected degree");
        }
        remove_live_vertex(adj, v);
        alive[v] = 0;
        --live_count;
        steps.push_back({v, a, b});
        if (adj[a].count(b) == 0) {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        for (int u : nbrs)
            if (alive[u] && adj[u].size() <= 2) eligible.insert(u);
    }

    int x = -1, y = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) (x < 0 ? x : y) = v;
    if (adj[x].count(y) == 0)
        throw std::logic_error("complete_to_two_tree: base pair not adjacent");

    std::vector<Edge> host_edges{make_edge(x, y)};
    host_edges.reserve(1 + 2 * steps.size());
    for (const std::array<int, 3>& s : steps) {
        host_edges.push_back(make_edge(s[0], s[1]));
        host_edges.push_back(make_edge(s[0], s[2]));
    }
    std::sort(host_edges.begin(), host_edges.end());
    host_edges.erase(std::unique(host_edges.begin(), host_edges.end()),
                     host_edges.end());

    TwoTreeEmbedding emb;
    emb.host = Graph::from_edges(n, host_edges);
    emb.real.reserve(emb.host.edge_count());
    for (const Edge& e : emb.host.edges())
        emb.real.push_back(g.has_edge(e.first, e.second));
    emb.elimination_order.reserve(steps.size());
    for (const std::array<int, 3>& s : steps)
        emb.elimination_order.push_back(s[0]);
    emb.base_edge = make_edge(x, y);
    return emb;
}

bool validate_embedding(const TwoTreeEmbedding& emb, const Graph& g) {
    const int n = g.vertex_count();
    if (emb.host.vertex_count() != n || n < 2) return false;
    if (emb.real.size() != emb.host.edges().size()) return false;
    if (emb.host.edge_count() != 2 * n - 3) return false;

    // Real flags must mark exactly the edges of g.
    size_t real_count = 0;
    for (size_t i = 0; i < emb.real.size(); ++i) {
        const Edge& e = emb.host.edges()[i];
        bool in_g = g.has_edge(e.first, e.second);
        if (emb.real[i] != in_g) return false;
        if (emb.real[i]) ++real_count;
    }
    if (real_count != g.edges().size()) return false; // some g edge missing

    // The elimination order plus the base endpoints must partition V.
    if (static_cast<int>(emb.elimination_order.size()) != n - 2) return false;
    std::vector<char> seen(n, 0);
    for (int v : emb.elimination_order) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    int x = emb.base_edge.first, y = emb.base_edge.second;
    if (x < 0 || y < 0 || x >= n || y >= n || x == y) return false;
    if (seen[x] || seen[y]) return false;

    // Replay: every eliminated vertex must have exactly two neighbors,
    // which are adjacent, at its elimination; success certifies the host
    // is a 2-tree built over the base edge.
    std::vector<std::set<int>> adj = adjacency_sets(emb.host);
    for (int v : emb.elimination_order) {
        if (adj[v].size() != 2) return false;
        int a = *adj[v].begin();
        int b = *std::next(adj[v].begin());
        if (adj[a].count(b) == 0) return false;
        remove_live_vertex(adj, v);
    }
    return adj[x].count(y) == 1 && adj[x].size() == 1 && adj[y].size() == 1;
}

std::vector<Component> components_of_virtual_edge(const TwoTreeEmbedding& emb,
                                                  int x, int y) {
    const Graph& host = emb.host;
    if (!host.has_edge(x, y))
        throw std::invalid_argument("components_of_virtual_edge: not a host edge");
    std::vector<int> common;
    {
        const std::vector<int>& nx = host.neighbors(x);
        const std::vector<int>& ny = host.neighbors(y);
        std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                              std::back_inserter(common));
    }
    std::vector<Component> out;
    std::vector<char> visited(host.vertex_count(), 0);
    visited[x] = visited[y] = 1;
    for (int z : common) {
        if (visited[z]) continue; // already swept into an earlier component
        std::vector<int> interior{z};
        visited[z] = 1;
        std::vector<int> stack{z};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : host.neighbors(v))
                if (!visited[u]) {
                    visited[u] = 1;
                    interior.push_back(u);
                    stack.push_back(u);
                }
        }
        Component c;
        c.anchor = make_edge(x, y);
        c.direction = z;
        c.interior = VertexSet(interior);
        interior.push_back(x);
        interior.push_back(y);
        c.vertices = VertexSet(interior);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::array<int, 3>> virtual_triangles(const TwoTreeEmbedding& emb) {
    // Every triangle of a 2-tree is the creation triangle of its first
    // eliminated corner, so the anchor steps enumerate all of them.
    const int n = emb.host.vertex_count();
    std::vector<int> pos(n, n);
    for (size_t i = 0; i < emb.elimination_order.size(); ++i)
        pos[emb.elimination_order[i]] = static_cast<int>(i);
    std::vector<std::array<int, 3>> out;
    for (int v : emb.elimination_order) {
        std::array<int, 2> ab{-1, -1};
        int found = 0;
        for (int u : emb.host.neighbors(v))
            if (pos[u] > pos[v] && found < 2) ab[found++] = u;
        std::array<int, 3> tri{v, ab[0], ab[1]};
        std::sort(tri.begin(), tri.end());
        out.push_back(tri);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace splp
