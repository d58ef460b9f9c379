#include "splp/path_dp.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace splp {

int PathConfiguration::active_external_tags() const {
    int tags = 0;
    for (int8_t p : partner)
        if (p == kExternal) ++tags;
    return tags;
}

bool PathConfiguration::is_valid() const {
    const int s = size();
    if (static_cast<int>(partner.size()) != s) return false;
    if (externals_used < 0 || externals_used > 2) return false;
    for (int i = 0; i < s; ++i) {
        if (state[i] > MID) return false;
        int8_t p = partner[i];
        if (state[i] != END) {
            if (p != kNone) return false;
            continue;
        }
        if (p == kNone || p < kNone || p >= s) return false;
        if (p >= 0 && (p == i || state[p] != END || partner[p] != i))
            return false;
    }
    int tags = active_external_tags();
    // externals_used - tags counts endpoints of fully closed fragments.
    return tags <= externals_used && (externals_used - tags) % 2 == 0;
}

std::vector<int8_t> PathConfiguration::encoded() const {
    std::vector<int8_t> key;
    key.reserve(1 + 2 * state.size());
    key.push_back(static_cast<int8_t>(externals_used));
    for (uint8_t st : state) key.push_back(static_cast<int8_t>(st));
    for (int8_t p : partner) key.push_back(p);
    return key;
}

int SizeTables::ordinal_of(const PathConfiguration& c) const {
    auto it = index.find(c.encoded());
    return it == index.end() ? -1 : it->second;
}

namespace {

using PC = PathConfiguration;

int require_ordinal(const SizeTables& t, const PC& c) {
    int ord = t.ordinal_of(c);
    if (ord < 0)
        throw std::logic_error("path_dp: transition produced an unknown configuration");
    return ord;
}

// Pairings of `ends`: first unresolved slot takes the External tag, then
// each later unresolved slot, recursively; deterministic catalog order.
template <typename Emit>
void enumerate_pairings(std::vector<int8_t>& partner,
                        const std::vector<int>& ends, const Emit& emit) {
    int first = -1;
    for (int e : ends)
        if (partner[e] == PC::kNone) {
            first = e;
            break;
        }
    if (first < 0) {
        emit();
        return;
    }
    partner[first] = PC::kExternal;
    enumerate_pairings(partner, ends, emit);
    partner[first] = PC::kNone;
    for (int j : ends) {
        if (j <= first || partner[j] != PC::kNone) continue;
        partner[first] = static_cast<int8_t>(j);
        partner[j] = static_cast<int8_t>(first);
        enumerate_pairings(partner, ends, emit);
        partner[first] = PC::kNone;
        partner[j] = PC::kNone;
    }
}

std::vector<PC> enumerate_catalog(int s) {
    std::vector<PC> out;
    std::vector<uint8_t> state(s, 0);
    while (true) {
        std::vector<int> ends;
        for (int i = 0; i < s; ++i)
            if (state[i] == PC::END) ends.push_back(i);
        std::vector<int8_t> partner(s, PC::kNone);
        enumerate_pairings(partner, ends, [&] {
            int tags = 0;
            for (int8_t p : partner)
                if (p == PC::kExternal) ++tags;
            for (int k = tags; k <= 2; k += 2) {
                PC c;
                c.state = state;
                c.partner = partner;
                c.externals_used = k;
                if (!c.is_valid())
                    throw std::logic_error("path_dp: invalid catalog entry");
                out.push_back(std::move(c));
            }
        });
        // Odometer over state vectors, last slot least significant.
        int i = s - 1;
        while (i >= 0 && state[i] == PC::MID) state[i--] = 0;
        if (i < 0) break;
        ++state[i];
    }
    return out;
}

int32_t apply_forget(const PC& c, int slot, const SizeTables& smaller) {
    PC r = c;
    if (c.state[slot] == PC::END) {
        if (c.externals_used == 2) return -1;
        r.externals_used = c.externals_used + 1;
        int8_t p = c.partner[slot];
        // A live partner's far end is now forgotten; an External partner
        // means the fragment just closed with its second endpoint.
        if (p >= 0) r.partner[p] = PC::kExternal;
    }
    r.state.erase(r.state.begin() + slot);
    r.partner.erase(r.partner.begin() + slot);
    for (int8_t& p : r.partner)
        if (p > slot) --p;
    return require_ordinal(smaller, r);
}

int32_t apply_intro(const PC& c, int slot, const SizeTables& larger) {
    PC r = c;
    r.state.insert(r.state.begin() + slot, PC::OFF);
    r.partner.insert(r.partner.begin() + slot, PC::kNone);
    for (int8_t& p : r.partner)
        if (p >= slot && p >= 0) ++p;
    return require_ordinal(larger, r);
}

int32_t apply_add_edge(const PC& c, int i, int j, const SizeTables& same) {
    uint8_t si = c.state[i], sj = c.state[j];
    if (si == PC::MID || sj == PC::MID) return -1;
    PC r = c;
    if (si == PC::OFF && sj == PC::OFF) {
        r.state[i] = r.state[j] = PC::END;
        r.partner[i] = static_cast<int8_t>(j);
        r.partner[j] = static_cast<int8_t>(i);
    } else if (si == PC::OFF || sj == PC::OFF) {
        int off = si == PC::OFF ? i : j;
        int end = si == PC::OFF ? j : i;
        // The fragment ending at `end` now ends at `off` instead.
        int8_t p = c.partner[end];
        r.state[off] = PC::END;
        r.state[end] = PC::MID;
        r.partner[end] = PC::kNone;
        r.partner[off] = p;
        if (p >= 0) r.partner[p] = static_cast<int8_t>(off);
    } else {
        if (c.partner[i] == j) return -1; // both ends of one fragment: cycle
        int8_t pi = c.partner[i], pj = c.partner[j];
        r.state[i] = r.state[j] = PC::MID;
        r.partner[i] = r.partner[j] = PC::kNone;
        if (pi >= 0 && pj >= 0) {
            r.partner[pi] = pj;
            r.partner[pj] = pi;
        } else if (pi >= 0) {
            r.partner[pi] = PC::kExternal;
        } else if (pj >= 0) {
            r.partner[pj] = PC::kExternal;
        }
        // pi == pj == External: the merged fragment closed; both of its
        // endpoints were already counted in externals_used.
    }
    return require_ordinal(same, r);
}

int32_t apply_join(const PC& a, const PC& b, const SizeTables& same) {
    const int s = a.size();
    if (a.externals_used + b.externals_used > 2) return -1;
    std::vector<uint8_t> deg(s);
    for (int i = 0; i < s; ++i) {
        unsigned d = a.state[i] + b.state[i];
        if (d > 2) return -1;
        deg[i] = static_cast<uint8_t>(d);
    }
    // Fragments are edges of a multigraph on ports: bag slots are shared
    // between the two sides, External endpoints get fresh private ports.
    std::vector<std::array<int, 2>> frag;
    int ports = s;
    for (const PC* c : {&a, &b}) {
        for (int i = 0; i < s; ++i) {
            int8_t p = c->partner[i];
            if (c->state[i] != PC::END) continue;
            if (p == PC::kExternal)
                frag.push_back({i, ports++});
            else if (p > i)
                frag.push_back({i, p});
        }
    }
    std::vector<std::vector<int>> incident(ports);
    for (size_t f = 0; f < frag.size(); ++f) {
        incident[frag[f][0]].push_back(static_cast<int>(f));
        incident[frag[f][1]].push_back(static_cast<int>(f));
    }
    PC r;
    r.state = deg;
    r.partner.assign(s, PC::kNone);
    r.externals_used = a.externals_used + b.externals_used;
    std::vector<char> used(frag.size(), 0);
    size_t used_count = 0;
    for (int start = 0; start < ports; ++start) {
        if (incident[start].size() != 1) continue;
        if (used[incident[start][0]]) continue; // other end of a done chain
        int cur = start;
        while (true) {
            int next_edge = -1;
            for (int f : incident[cur])
                if (!used[f]) {
                    next_edge = f;
                    break;
                }
            if (next_edge < 0) break;
            used[next_edge] = 1;
            ++used_count;
            cur = frag[next_edge][0] == cur ? frag[next_edge][1]
                                            : frag[next_edge][0];
        }
        if (start < s && cur < s) {
            r.partner[start] = static_cast<int8_t>(cur);
            r.partner[cur] = static_cast<int8_t>(start);
        } else if (start < s) {
            r.partner[start] = PC::kExternal;
        } else if (cur < s) {
            r.partner[cur] = PC::kExternal;
        }
        // Both ports private: a fragment closed inside the join.
    }
    if (used_count != frag.size()) return -1; // leftover fragments form a cycle
    return require_ordinal(same, r);
}

SizeTables build_tables(int s, const SizeTables* smaller) {
    SizeTables t;
    t.size = s;
    t.configs = enumerate_catalog(s);
    for (int i = 0; i < t.count(); ++i)
        t.index.emplace(t.configs[i].encoded(), i);

    const int n = t.count();
    if (s >= 1) {
        t.forget.assign(static_cast<size_t>(s) * n, -1);
        t.intro.assign(static_cast<size_t>(s) * smaller->count(), -1);
        for (int slot = 0; slot < s; ++slot) {
            for (int c = 0; c < n; ++c)
                t.forget[static_cast<size_t>(slot) * n + c] =
                    apply_forget(t.configs[c], slot, *smaller);
            for (int c = 0; c < smaller->count(); ++c)
                t.intro[static_cast<size_t>(slot) * smaller->count() + c] =
                    apply_intro(smaller->configs[c], slot, t);
        }
    }
    t.add_edge.assign(static_cast<size_t>(s) * s * n, -1);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            for (int c = 0; c < n; ++c)
                t.add_edge[(static_cast<size_t>(i) * s + j) * n + c] =
                    apply_add_edge(t.configs[c], i, j, t);
    t.join.assign(static_cast<size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            t.join[static_cast<size_t>(x) * n + y] =
                apply_join(t.configs[x], t.configs[y], t);
    return t;
}

std::mutex registry_mutex;

const SizeTables& locked_size_tables(int size) {
    static std::map<int, std::unique_ptr<SizeTables>> registry;
    for (int s = 0; s <= size; ++s)
        if (!registry.count(s)) {
            const SizeTables* smaller = s > 0 ? registry.at(s - 1).get() : nullptr;
            registry.emplace(s, std::make_unique<SizeTables>(build_tables(s, smaller)));
        }
    return *registry.at(size);
}

int slot_of(const VertexSet& bag, int v) {
    const std::vector<int>& ids = bag.values();
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v)
        throw std::logic_error("path_dp: vertex not in bag");
    return static_cast<int>(it - ids.begin());
}

// Catalog pointers per bag size, plus the ordinals of the two empty-bag
// configurations (no externals / both externals spent).
struct RunContext {
    std::vector<const SizeTables*> tbl;
    int empty_start = -1; // size-0 catalog, externals_used = 0
    int empty_final = -1; // size-0 catalog, externals_used = 2
};

RunContext make_context(const NiceTreeDecomposition& ntd) {
    int max_bag = 0;
    for (const NiceNode& nd : ntd.nodes) max_bag = std::max(max_bag, nd.bag.size());
    RunContext ctx;
    ctx.tbl.resize(max_bag + 1);
    for (int s = 0; s <= max_bag; ++s) {
        ctx.tbl[s] = &size_tables(s);
        if (s <= 3 && ctx.tbl[s]->count() > 200)
            throw std::logic_error("path_dp: width-2 catalog exceeds 200 entries");
    }
    PC empty;
    ctx.empty_start = require_ordinal(*ctx.tbl[0], empty);
    empty.externals_used = 2;
    ctx.empty_final = require_ordinal(*ctx.tbl[0], empty);
    return ctx;
}

// Pair ids (slot-of-new-vertex, slot-of-neighbor) for a node's assigned
// edges, in assignment order; all of them touch the introduced vertex.
std::vector<int> edge_pair_ids(const NiceNode& nd, const std::vector<Edge>& edges) {
    const int s = nd.bag.size();
    int vslot = slot_of(nd.bag, nd.vertex);
    std::vector<int> pid;
    pid.reserve(edges.size());
    for (const Edge& e : edges) {
        int other = e.first == nd.vertex ? e.second : e.first;
        int oslot = slot_of(nd.bag, other);
        pid.push_back(std::min(vslot, oslot) * s + std::max(vslot, oslot));
    }
    return pid;
}

} // namespace

const SizeTables& size_tables(int size) {
    if (size < 0) throw std::invalid_argument("size_tables: negative size");
    std::lock_guard<std::mutex> lock(registry_mutex);
    return locked_size_tables(size);
}

DPTable run_forward_dp(const NiceTreeDecomposition& ntd, const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("run_forward_dp: graph is disconnected");
    if (!validate_nice(ntd, g))
        throw std::invalid_argument("run_forward_dp: invalid nice decomposition");

    RunContext ctx = make_context(ntd);
    const int N = static_cast<int>(ntd.nodes.size());
    DPTable dp;
    dp.ntd = &ntd;
    dp.g = &g;
    dp.assigned = assign_edges(ntd, g);
    dp.offset.resize(N);
    int64_t total = 0;
    for (int t = 0; t < N; ++t) {
        dp.offset[t] = total;
        total += ctx.tbl[ntd.nodes[t].bag.size()]->count();
    }
    dp.values.assign(total, -1);

    for (int t = 0; t < N; ++t) {
        const NiceNode& nd = ntd.nodes[t];
        const int s = nd.bag.size();
        const SizeTables& T = *ctx.tbl[s];
        int32_t* out = dp.values.data() + dp.offset[t];
        switch (nd.kind) {
        case NodeKind::Leaf:
            out[ctx.empty_start] = 0;
            break;
        case NodeKind::Introduce: {
            const SizeTables& Tc = *ctx.tbl[s - 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            int slot = slot_of(nd.bag, nd.vertex);
            std::vector<int> pid = edge_pair_ids(nd, dp.assigned[t]);
            const int e = static_cast<int>(pid.size());
            const int32_t* intro_row =
                T.intro.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count(); ++c) {
                int32_t vc = in[c];
                if (vc < 0) continue;
                int base = intro_row[c];
                for (int mask = 0; mask < (1 << e); ++mask) {
                    int cur = base;
                    for (int b = 0; b < e && cur >= 0; ++b)
                        if (mask >> b & 1)
                            cur = T.add_edge[static_cast<size_t>(pid[b]) * T.count() + cur];
                    if (cur < 0) continue;
                    int32_t val = vc + std::popcount(static_cast<unsigned>(mask));
                    if (val > out[cur]) out[cur] = val;
                }
            }
            break;
        }
        case NodeKind::Forget: {
            const SizeTables& Tc = *ctx.tbl[s + 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            int slot = slot_of(ntd.nodes[nd.child[0]].bag, nd.vertex);
            const int32_t* frow =
                Tc.forget.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count(); ++c) {
                int32_t vc = in[c];
                if (vc < 0) continue;
                int m = frow[c];
                if (m >= 0 && vc > out[m]) out[m] = vc;
            }
            break;
        }
        case NodeKind::Join: {
            const int32_t* inA = dp.values.data() + dp.offset[nd.child[0]];
            const int32_t* inB = dp.values.data() + dp.offset[nd.child[1]];
            for (int x = 0; x < T.count(); ++x) {
                int32_t va = inA[x];
                if (va < 0) continue;
                const int32_t* jrow = T.join.data() + static_cast<size_t>(x) * T.count();
                for (int y = 0; y < T.count(); ++y) {
                    int32_t vb = inB[y];
                    if (vb < 0) continue;
                    int m = jrow[y];
                    if (m >= 0 && va + vb > out[m]) out[m] = va + vb;
                }
            }
            break;
        }
        }
    }
    dp.root_final = dp.value_at(ntd.root, ctx.empty_final);
    return dp;
}

int longest_path_length(const DPTable& dp) {
    return std::max(0, dp.root_final);
}

ConfigMarking mark_contributing_configs(const DPTable& dp) {
    const NiceTreeDecomposition& ntd = *dp.ntd;
    ConfigMarking mk;
    mk.marked.assign(dp.values.size(), 0);
    if (dp.root_final < 1) return mk;

    RunContext ctx = make_context(ntd);
    mk.marked[dp.offset[ntd.root] + ctx.empty_final] = 1;

    for (int t = static_cast<int>(ntd.nodes.size()) - 1; t >= 0; --t) {
        const NiceNode& nd = ntd.nodes[t];
        if (nd.kind == NodeKind::Leaf) continue;
        const int s = nd.bag.size();
        const SizeTables& T = *ctx.tbl[s];
        const int32_t* out = dp.values.data() + dp.offset[t];
        const char* here = mk.marked.data() + dp.offset[t];
        switch (nd.kind) {
        case NodeKind::Introduce: {
            const SizeTables& Tc = *ctx.tbl[s - 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            char* below = mk.marked.data() + dp.offset[nd.child[0]];
            int slot = slot_of(nd.bag, nd.vertex);
            std::vector<int> pid = edge_pair_ids(nd, dp.assigned[t]);
            const int e = static_cast<int>(pid.size());
            const int32_t* intro_row =
                T.intro.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count(); ++c) {
                int32_t vc = in[c];
                if (vc < 0) continue;
                for (int mask = 0; mask < (1 << e); ++mask) {
                    int cur = intro_row[c];
                    for (int b = 0; b < e && cur >= 0; ++b)
                        if (mask >> b & 1)
                            cur = T.add_edge[static_cast<size_t>(pid[b]) * T.count() + cur];
                    if (cur < 0 || !here[cur]) continue;
                    if (out[cur] == vc + std::popcount(static_cast<unsigned>(mask))) {
                        below[c] = 1;
                        break; // one witness marks c; further masks redundant
                    }
                }
            }
            break;
        }
        case NodeKind::Forget: {
            const SizeTables& Tc = *ctx.tbl[s + 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            char* below = mk.marked.data() + dp.offset[nd.child[0]];
            int slot = slot_of(ntd.nodes[nd.child[0]].bag, nd.vertex);
            const int32_t* frow =
                Tc.forget.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count(); ++c) {
                int32_t vc = in[c];
                if (vc < 0) continue;
                int m = frow[c];
                if (m >= 0 && here[m] && out[m] == vc) below[c] = 1;
            }
            break;
        }
        case NodeKind::Join: {
            const int32_t* inA = dp.values.data() + dp.offset[nd.child[0]];
            const int32_t* inB = dp.values.data() + dp.offset[nd.child[1]];
            char* belowA = mk.marked.data() + dp.offset[nd.child[0]];
            char* belowB = mk.marked.data() + dp.offset[nd.child[1]];
            for (int x = 0; x < T.count(); ++x) {
                int32_t va = inA[x];
                if (va < 0) continue;
                const int32_t* jrow = T.join.data() + static_cast<size_t>(x) * T.count();
                for (int y = 0; y < T.count(); ++y) {
                    int32_t vb = inB[y];
                    if (vb < 0) continue;
                    int m = jrow[y];
                    if (m >= 0 && here[m] && out[m] == va + vb) {
                        belowA[x] = 1;
                        belowB[y] = 1;
                    }
                }
            }
            break;
        }
        case NodeKind::Leaf:
            break;
        }
    }
    return mk;
}

Path extract_longest_path(const DPTable& dp, const Graph& g) {
    const int L = longest_path_length(dp);
    if (L < 1)
        throw std::invalid_argument("extract_longest_path: no positive-length path");
    const NiceTreeDecomposition& ntd = *dp.ntd;
    RunContext ctx = make_context(ntd);

    std::vector<Edge> chosen;
    std::vector<std::pair<int, int>> stack{{ntd.root, ctx.empty_final}};
    while (!stack.empty()) {
        auto [t, m] = stack.back();
        stack.pop_back();
        const NiceNode& nd = ntd.nodes[t];
        const int s = nd.bag.size();
        const SizeTables& T = *ctx.tbl[s];
        const int32_t val = dp.value_at(t, m);
        bool found = false;
        switch (nd.kind) {
        case NodeKind::Leaf:
            found = (m == ctx.empty_start && val == 0);
            break;
        case NodeKind::Introduce: {
            const SizeTables& Tc = *ctx.tbl[s - 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            int slot = slot_of(nd.bag, nd.vertex);
            std::vector<int> pid = edge_pair_ids(nd, dp.assigned[t]);
            const int e = static_cast<int>(pid.size());
            const int32_t* intro_row =
                T.intro.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count() && !found; ++c) {
                int32_t vc = in[c];
                if (vc < 0) continue;
                for (int mask = 0; mask < (1 << e) && !found; ++mask) {
                    int cur = intro_row[c];
                    for (int b = 0; b < e && cur >= 0; ++b)
                        if (mask >> b & 1)
                            cur = T.add_edge[static_cast<size_t>(pid[b]) * T.count() + cur];
                    if (cur != m ||
                        val != vc + std::popcount(static_cast<unsigned>(mask)))
                        continue;
                    for (int b = 0; b < e; ++b)
                        if (mask >> b & 1) chosen.push_back(dp.assigned[t][b]);
                    stack.push_back({nd.child[0], c});
                    found = true;
                }
            }
            break;
        }
        case NodeKind::Forget: {
            const SizeTables& Tc = *ctx.tbl[s + 1];
            const int32_t* in = dp.values.data() + dp.offset[nd.child[0]];
            int slot = slot_of(ntd.nodes[nd.child[0]].bag, nd.vertex);
            const int32_t* frow =
                Tc.forget.data() + static_cast<size_t>(slot) * Tc.count();
            for (int c = 0; c < Tc.count() && !found; ++c) {
                if (in[c] == val && frow[c] == m) {
                    stack.push_back({nd.child[0], c});
                    found = true;
                }
            }
            break;
        }
        case NodeKind::Join: {
            const int32_t* inA = dp.values.data() + dp.offset[nd.child[0]];
            const int32_t* inB = dp.values.data() + dp.offset[nd.child[1]];
            for (int x = 0; x < T.count() && !found; ++x) {
                int32_t va = inA[x];
                if (va < 0 || va > val) continue;
                const int32_t* jrow = T.join.data() + static_cast<size_t>(x) * T.count();
                for (int y = 0; y < T.count() && !found; ++y) {
                    if (inB[y] < 0 || va + inB[y] != val || jrow[y] != m) continue;
                    stack.push_back({nd.child[0], x});
                    stack.push_back({nd.child[1], y});
                    found = true;
                }
            }
            break;
        }
        }
        if (!found)
            throw std::logic_error("extract_longest_path: missing predecessor");
    }

    if (static_cast<int>(chosen.size()) != L)
        throw std::logic_error("extract_longest_path: edge count mismatch");
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : chosen) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    int start = INT_MAX;
    for (const auto& [v, nbrs] : adj)
        if (nbrs.size() == 1) {
            start = v;
            break; // map iterates in ascending key order
        }
    if (start == INT_MAX)
        throw std::logic_error("extract_longest_path: no endpoint found");
    std::vector<int> seq{start};
    int prev = -1;
    for (int step = 0; step < L; ++step) {
        int cur = seq.back();
        int next = -1;
        for (int w : adj.at(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next < 0)
            throw std::logic_error("extract_longest_path: broken walk");
        prev = cur;
        seq.push_back(next);
    }
    Path p(std::move(seq));
    if (!p.is_valid_in(g) || p.length() != L)
        throw std::logic_error("extract_longest_path: invalid reconstruction");
    return p;
}

} // namespace splp
