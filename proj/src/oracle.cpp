#include "splp/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace splp {

namespace {

struct PathCollector {
    const Graph& g;
    int n;
    int best = 0;
    std::set<std::vector<int>> found; // canonical sequences of length == best
    std::vector<int> path;
    std::vector<char> used;

    explicit PathCollector(const Graph& graph)
        : g(graph), n(graph.vertex_count()), used(graph.vertex_count(), 0) {}

    void record() {
        int len = static_cast<int>(path.size()) - 1;
        if (len < best) return;
        if (len > best) {
            best = len;
            found.clear();
        }
        if (path.front() <= path.back()) {
            found.insert(path);
        } else {
            std::vector<int> rev(path.rbegin(), path.rend());
            found.insert(std::move(rev));
        }
    }

    void dfs(int v) {
        path.push_back(v);
        used[v] = 1;
        record();
        // Even taking every unused vertex cannot beat the current best.
        int optimistic = static_cast<int>(path.size()) - 1 +
                         (n - static_cast<int>(path.size()));
        if (optimistic >= best) {
            for (int w : g.neighbors(v))
                if (!used[w]) dfs(w);
        }
        used[v] = 0;
        path.pop_back();
    }
};

} // namespace

LongestPathSet enumerate_longest_paths(const Graph& g, int cap) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("enumerate_longest_paths requires n >= 1");
    if (g.vertex_count() > cap)
        throw std::invalid_argument("graph exceeds the exhaustive-search cap");
    PathCollector pc(g);
    for (int s = 0; s < g.vertex_count(); ++s) pc.dfs(s);
    LongestPathSet out;
    out.length = pc.best;
    for (const auto& seq : pc.found) out.paths.emplace_back(seq);
    return out;
}

VertexSet gallai_set_bruteforce(const Graph& g, int cap) {
    auto lps = enumerate_longest_paths(g, cap);
    VertexSet common = lps.paths.front().vertex_set();
    for (size_t i = 1; i < lps.paths.size() && !common.empty(); ++i)
        common = common.intersect(lps.paths[i].vertex_set());
    return common;
}

LPClassification classify_longest_paths(const LongestPathSet& lps, int u,
                                        int v, int w) {
    LPClassification out;
    for (int i = 0; i < static_cast<int>(lps.paths.size()); ++i) {
        const Path& p = lps.paths[i];
        bool has_u = p.contains(u), has_v = p.contains(v), has_w = p.contains(w);
        if (has_u && has_v) out.with_uv.push_back(i);
        if (has_u && !has_v) out.with_u_not_v.push_back(i);
        if (has_u && has_v && has_w) {
            out.with_uvw.push_back(i);
            auto pos = [&](int x) {
                return std::find(p.vertices.begin(), p.vertices.end(), x) -
                       p.vertices.begin();
            };
            auto pu = pos(u), pv = pos(v), pw = pos(w);
            if ((pu < pv && pv < pw) || (pw < pv && pv < pu))
                out.v_between_uw.push_back(i);
        }
        if (has_u && has_v && !has_w) out.with_uv_not_w.push_back(i);
        if (has_u && !has_v && !has_w) out.with_u_only.push_back(i);
    }
    return out;
}

bool pairwise_intersection_holds(const Graph& g, int cap) {
    if (!is_connected(g))
        throw std::invalid_argument("pairwise intersection requires a connected graph");
    auto lps = enumerate_longest_paths(g, cap);
    std::vector<VertexSet> sets;
    sets.reserve(lps.paths.size());
    for (const auto& p : lps.paths) sets.push_back(p.vertex_set());
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i].intersect(sets[j]).empty()) return false;
    return true;
}

namespace {

// Depth-first over p-subsets with the running intersection; a partial subset
// whose intersection is already empty is itself a witness.
bool subsets_share(const std::vector<VertexSet>& sets, size_t start,
                   int remaining, const VertexSet& current) {
    if (current.empty()) return false;
    if (remaining == 0) return true;
    for (size_t i = start; i + remaining <= sets.size() + 1 && i < sets.size(); ++i) {
        if (!subsets_share(sets, i + 1, remaining - 1, current.intersect(sets[i])))
            return false;
    }
    return true;
}

} // namespace

bool p_wise_common_vertex(const Graph& g, int p, int cap) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    if (!is_connected(g))
        throw std::invalid_argument("p-wise intersection requires a connected graph");
    auto lps = enumerate_longest_paths(g, cap);
    if (static_cast<int>(lps.paths.size()) < p) return true; // vacuous
    std::vector<VertexSet> sets;
    for (const auto& path : lps.paths) sets.push_back(path.vertex_set());
    VertexSet everything = g.vertex_set();
    VertexSet global = everything;
    for (const auto& s : sets) global = global.intersect(s);
    if (!global.empty()) return true;
    return subsets_share(sets, 0, p, everything);
}

namespace {

bool ham_path_dfs(const Graph& g, int v, std::vector<char>& used, int left) {
    if (left == 0) return true;
    for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        if (ham_path_dfs(g, w, used, left - 1)) return true;
        used[w] = 0;
    }
    return false;
}

bool ham_cycle_dfs(const Graph& g, int v, std::vector<char>& used, int left) {
    if (left == 0) return g.has_edge(v, 0);
    for (int w : g.neighbors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        if (ham_cycle_dfs(g, w, used, left - 1)) return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool hamiltonian_cycle_exists(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return false;
    std::vector<char> used(n, 0);
    used[0] = 1;
    return ham_cycle_dfs(g, 0, used, n - 1);
}

bool hamiltonian_path_exists(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (n == 1) return true;
    std::vector<char> used(n, 0);
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        if (ham_path_dfs(g, s, used, n - 1)) return true;
        used[s] = 0;
    }
    return false;
}

namespace {

// Elimination degree of v when the set X is already eliminated: vertices
// outside X + {v} reachable from v through X.
int elim_degree(const Graph& g, unsigned x_mask, int v) {
    unsigned seen = 1u << v;
    std::vector<int> stack{v};
    int count = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b : g.neighbors(a)) {
            if (seen & (1u << b)) continue;
            seen |= 1u << b;
            if (x_mask & (1u << b)) {
                stack.push_back(b);
            } else {
                ++count;
            }
        }
    }
    return count;
}

} // namespace

int exact_treewidth(const Graph& g) {
    int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("exact_treewidth requires n >= 1");
    if (n > 16) throw std::invalid_argument("exact_treewidth limited to n <= 16");
    unsigned full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> f(full + 1, 0);
    for (unsigned s = 1; s <= full; ++s) {
        int best = n; // upper bound
        for (int v = 0; v < n; ++v) {
            if (!(s & (1u << v))) continue;
            unsigned rest = s & ~(1u << v);
            int width = std::max(f[rest], elim_degree(g, rest, v));
            best = std::min(best, width);
        }
        f[s] = best;
    }
    return f[full];
}

namespace {

bool iso_extend(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                std::vector<char>& used_b, const std::vector<int>& order,
                size_t idx) {
    if (idx == order.size()) return true;
    int va = order[idx];
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
        if (used_b[vb] || a.degree(va) != b.degree(vb)) continue;
        bool ok = true;
        for (size_t j = 0; j < idx && ok; ++j) {
            int wa = order[j];
            if (a.has_edge(va, wa) != b.has_edge(vb, map_ab[wa])) ok = false;
        }
        if (!ok) continue;
        map_ab[va] = vb;
        used_b[vb] = 1;
        if (iso_extend(a, b, map_ab, used_b, order, idx + 1)) return true;
        used_b[vb] = 0;
        map_ab[va] = -1;
    }
    return false;
}

} // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<int> deg_a, deg_b;
    for (int v = 0; v < a.vertex_count(); ++v) deg_a.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) deg_b.push_back(b.degree(v));
    std::sort(deg_a.begin(), deg_a.end());
    std::sort(deg_b.begin(), deg_b.end());
    if (deg_a != deg_b) return false;
    std::vector<int> order(a.vertex_count());
    for (int i = 0; i < a.vertex_count(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::vector<int> map_ab(a.vertex_count(), -1);
    std::vector<char> used_b(b.vertex_count(), 0);
    return iso_extend(a, b, map_ab, used_b, order, 0);
}

} // namespace splp
