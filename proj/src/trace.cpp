#include "splp/trace.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace splp {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

bool simple_sequence(const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::vector<int> s = vs;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void require_simple(const Path& p, const std::string& name) {
    require(simple_sequence(p.vertices), name + " is not a simple path");
}

int pos_of(const std::vector<int>& vs, int x) {
    auto it = std::find(vs.begin(), vs.end(), x);
    if (it == vs.end())
        throw std::logic_error("invariant breach: vertex not on path");
    return static_cast<int>(it - vs.begin());
}

// Inclusive slice of vs from index a to index b, walking either direction.
std::vector<int> segment(const std::vector<int>& vs, int a, int b) {
    std::vector<int> out;
    const int step = a <= b ? 1 : -1;
    for (int i = a;; i += step) {
        out.push_back(vs[i]);
        if (i == b) break;
    }
    return out;
}

void append_from(std::vector<int>& out, const std::vector<int>& seg,
                 int skip_front) {
    out.insert(out.end(), seg.begin() + skip_front, seg.end());
}

// True iff r, in either orientation, is a contiguous run of p.
bool is_subpath(const Path& p, const Path& r) {
    if (r.vertices.size() > p.vertices.size()) return false;
    auto run_at = [](const std::vector<int>& hay, const std::vector<int>& run) {
        auto it = std::find(hay.begin(), hay.end(), run.front());
        if (it == hay.end()) return false;
        if (static_cast<size_t>(hay.end() - it) < run.size()) return false;
        return std::equal(run.begin(), run.end(), it);
    };
    return run_at(p.vertices, r.vertices) ||
           run_at(p.vertices, r.reversed().vertices);
}

// Reorients p so that r occupies its suffix; nullopt when r is not a tail.
std::optional<Path> orient_with_tail_last(const Path& p, const Path& r) {
    if (r.vertices.size() > p.vertices.size()) return std::nullopt;
    auto suffix_is = [](const std::vector<int>& vs, const std::vector<int>& run) {
        return std::equal(run.begin(), run.end(), vs.end() - run.size());
    };
    for (const Path& q : {p, p.reversed()}) {
        if (suffix_is(q.vertices, r.vertices) ||
            suffix_is(q.vertices, r.reversed().vertices))
            return q;
    }
    return std::nullopt;
}

struct Splice {
    int x = -1, y = -1;   // x on the first side, y on the second
    int xi = -1, yi = -1; // positions in the connecting path
};

// First adjacent pair of opposite-side hits along conn.  Between adjacent
// hits conn touches neither side, so the spliced stretch has a clean
// interior.  The sides must be disjoint.
std::optional<Splice> find_splice(const Path& conn, const VertexSet& side1,
                                  const VertexSet& side2) {
    int last = -1, last_side = 0;
    for (int i = 0; i < static_cast<int>(conn.vertices.size()); ++i) {
        const int v = conn.vertices[i];
        const int side = side1.contains(v) ? 1 : side2.contains(v) ? 2 : 0;
        if (side == 0) continue;
        if (last_side != 0 && last_side != side) {
            Splice s;
            if (side == 2) {
                s.x = conn.vertices[last], s.xi = last;
                s.y = v, s.yi = i;
            } else {
                s.x = v, s.xi = i;
                s.y = conn.vertices[last], s.yi = last;
            }
            return s;
        }
        last = i, last_side = side;
    }
    return std::nullopt;
}

std::string vertex_list(const std::vector<int>& vs) {
    std::ostringstream os;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ' ';
        os << vs[i];
    }
    return os.str();
}

std::string tri_str(const std::array<int, 3>& t) {
    return "{" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
           std::to_string(t[2]) + "}";
}

std::string edge_str(const Edge& e) {
    return "{" + std::to_string(e.first) + ", " + std::to_string(e.second) + "}";
}

std::vector<std::vector<char>> membership(const LongestPathSet& lps, int n) {
    std::vector<std::vector<char>> has(lps.paths.size(),
                                       std::vector<char>(n, 0));
    for (size_t i = 0; i < lps.paths.size(); ++i)
        for (int v : lps.paths[i].vertices) has[i][v] = 1;
    return has;
}

// Crossing-pair check against a component interior over precomputed
// per-path membership rows.
bool pair_check(const std::vector<std::vector<char>>& has, int u, int v,
                const VertexSet& interior, int* checked) {
    std::vector<int> only_u, only_v, both;
    for (int i = 0; i < static_cast<int>(has.size()); ++i) {
        const bool hu = has[i][u], hv = has[i][v];
        if (hu && hv)
            both.push_back(i);
        else if (hu)
            only_u.push_back(i);
        else if (hv)
            only_v.push_back(i);
    }
    int pairs = 0;
    auto meet = [&](int p, int q) {
        for (int w : interior)
            if (has[p][w] && has[q][w]) return true;
        return false;
    };
    auto all_pairs = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        for (int p : xs)
            for (int q : ys) {
                ++pairs;
                if (!meet(p, q)) return false;
            }
        return true;
    };
    const bool ok = all_pairs(only_u, only_v) && all_pairs(only_u, both) &&
                    all_pairs(only_v, both);
    if (checked) *checked = pairs;
    return ok;
}

void require_fresh(const Graph& g, const LongestPathSet& lps) {
    require(!lps.paths.empty(), "stale longest-path set: empty");
    for (const Path& p : lps.paths)
        require(p.is_valid_in(g) && p.length() == lps.length,
                "stale longest-path set: entry invalid for this graph");
}

std::array<Edge, 3> triangle_edges(const std::array<int, 3>& tri) {
    return {make_edge(tri[0], tri[1]), make_edge(tri[0], tri[2]),
            make_edge(tri[1], tri[2])};
}

// Shared search of select_gallai_edge and iterate_component: triangle edges
// in lexicographic order, components ascending by direction skipping the
// third triangle vertex, optionally restricted to strict subsets of a bound.
std::optional<EdgeSelection> edge_component_search(
    const std::vector<std::vector<char>>& has, const TwoTreeEmbedding& emb,
    const std::array<int, 3>& tri, const VertexSet* strictly_inside) {
    for (const Edge& f : triangle_edges(tri)) {
        bool gallai_edge = true;
        for (const auto& h : has)
            if (!h[f.first] && !h[f.second]) {
                gallai_edge = false;
                break;
            }
        if (!gallai_edge) continue;
        const int third = tri[0] + tri[1] + tri[2] - f.first - f.second;
        for (const Component& c : components_of_virtual_edge(emb, f.first, f.second)) {
            if (c.direction == third) continue;
            if (strictly_inside && !c.vertices.is_strict_subset_of(*strictly_inside))
                continue;
            int pairs = 0;
            if (pair_check(has, f.first, f.second, c.interior, &pairs)) {
                EdgeSelection sel;
                sel.edge = f;
                sel.component = c;
                sel.pair_checks = pairs;
                return sel;
            }
        }
    }
    return std::nullopt;
}

} // namespace

const char* to_string(SurgeryKind k) {
    switch (k) {
        case SurgeryKind::two_tails: return "two_tails";
        case SurgeryKind::shared_vertex: return "shared_vertex";
        case SurgeryKind::corollary_dispatch: return "corollary_dispatch";
    }
    return "?";
}

const char* to_string(TraceStepKind k) {
    switch (k) {
        case TraceStepKind::triangle_found: return "triangle_found";
        case TraceStepKind::edge_selected: return "edge_selected";
        case TraceStepKind::component_iterated: return "component_iterated";
        case TraceStepKind::vertex_found: return "vertex_found";
    }
    return "?";
}

std::pair<Path, Path> surgery_two_tails(const Path& p1, const Path& r1,
                                        const Path& p2, const Path& r2,
                                        const Path& conn,
                                        SurgeryWitness* witness) {
    require_simple(p1, "p1");
    require_simple(r1, "r1");
    require_simple(p2, "p2");
    require_simple(r2, "r2");
    require_simple(conn, "conn");

    const auto o1 = orient_with_tail_last(p1, r1);
    require(o1.has_value(), "r1 is not a tail of p1");
    const auto o2 = orient_with_tail_last(p2, r2);
    require(o2.has_value(), "r2 is not a tail of p2");

    const VertexSet s1 = r1.vertex_set(), s2 = r2.vertex_set();
    const VertexSet sp1 = p1.vertex_set(), sp2 = p2.vertex_set();
    require(s1.intersect(sp2).empty(), "r1 intersects p2");
    require(s2.intersect(sp1).empty(), "r2 intersects p1");

    bool hits1 = false, hits2 = false;
    for (int v : conn.vertices) {
        if (sp1.contains(v)) {
            require(s1.contains(v), "conn meets p1 outside r1");
            hits1 = true;
        }
        if (sp2.contains(v)) {
            require(s2.contains(v), "conn meets p2 outside r2");
            hits2 = true;
        }
    }
    require(hits1, "conn misses p1");
    require(hits2, "conn misses p2");

    const auto splice = find_splice(conn, s1, s2);
    if (!splice)
        throw std::logic_error("invariant breach: no clean splice pair");

    const std::vector<int>& v1 = o1->vertices;
    const std::vector<int>& v2 = o2->vertices;
    const int px = pos_of(v1, splice->x);
    const int py = pos_of(v2, splice->y);

    std::vector<int> q1v = segment(v1, 0, px);
    append_from(q1v, segment(conn.vertices, splice->xi, splice->yi), 1);
    append_from(q1v, segment(v2, py, static_cast<int>(v2.size()) - 1), 1);

    std::vector<int> q2v = segment(v2, 0, py);
    append_from(q2v, segment(conn.vertices, splice->yi, splice->xi), 1);
    append_from(q2v, segment(v1, px, static_cast<int>(v1.size()) - 1), 1);

    const Path q1{q1v}, q2{q2v};
    if (!simple_sequence(q1v) || !simple_sequence(q2v))
        throw std::logic_error("invariant breach: constructed path not simple");
    if (q1.length() + q2.length() <= p1.length() + p2.length())
        throw std::logic_error("invariant breach: length gain missing");

    if (witness) {
        witness->kind = SurgeryKind::two_tails;
        witness->inputs = {p1, r1, p2, r2, conn};
        witness->outputs = {q1, q2};
        witness->x = splice->x;
        witness->y = splice->y;
        witness->z = -1;
    }
    return {q1, q2};
}

Path surgery_shared_vertex(const Path& p1, const Path& p2, int z,
                           const Path& r1, const Path& r2, const Path& conn,
                           SurgeryWitness* witness) {
    require_simple(p1, "p1");
    require_simple(p2, "p2");
    require_simple(r1, "r1");
    require_simple(r2, "r2");
    require_simple(conn, "conn");
    require(p1.contains(z), "z is not on p1");
    require(p2.contains(z), "z is not on p2");

    Path a1 = r1; // arm oriented to start at z
    if (a1.back() == z) a1 = a1.reversed();
    require(a1.front() == z, "r1 does not end at z");
    require(is_subpath(p1, a1), "r1 is not a subpath of p1");
    Path a2 = r2;
    if (a2.back() == z) a2 = a2.reversed();
    require(a2.front() == z, "r2 does not end at z");
    require(is_subpath(p2, a2), "r2 is not a subpath of p2");

    const VertexSet s1 = a1.vertex_set(), s2 = a2.vertex_set();
    const VertexSet sp1 = p1.vertex_set(), sp2 = p2.vertex_set();
    require(s1.intersect(sp2) == VertexSet{z}, "r1 meets p2 beyond z");
    require(s2.intersect(sp1) == VertexSet{z}, "r2 meets p1 beyond z");

    require(!conn.contains(z), "z lies on conn");
    bool hits1 = false, hits2 = false;
    for (int v : conn.vertices) {
        if (sp1.contains(v)) {
            require(s1.contains(v), "conn meets p1 outside r1");
            hits1 = true;
        }
        if (sp2.contains(v)) {
            require(s2.contains(v), "conn meets p2 outside r2");
            hits2 = true;
        }
    }
    require(hits1, "conn misses p1");
    require(hits2, "conn misses p2");

    const auto splice = find_splice(conn, s1, s2);
    if (!splice)
        throw std::logic_error("invariant breach: no clean splice pair");

    const std::vector<int>& w1 = p1.vertices;
    const std::vector<int>& w2 = p2.vertices;
    const int z1 = pos_of(w1, z), z2 = pos_of(w2, z);
    // Arm lengths from z to the splice vertices.
    const int dx = pos_of(a1.vertices, splice->x);
    const int dy = pos_of(a2.vertices, splice->y);
    // Directions the arms take inside their carrier paths (the conn checks
    // above guarantee both arms reach beyond z, so they have >= 2 vertices).
    auto arm_dir = [](const std::vector<int>& w, int zi, const Path& a) {
        if (zi + 1 < static_cast<int>(w.size()) && w[zi + 1] == a.vertices[1])
            return 1;
        if (zi - 1 >= 0 && w[zi - 1] == a.vertices[1]) return -1;
        throw std::logic_error("invariant breach: arm direction lost");
    };
    const int dir1 = arm_dir(w1, z1, a1);
    const int dir2 = arm_dir(w2, z2, a2);

    std::vector<int> qv;
    const Path* longer_than = nullptr;
    if (dx >= dy) {
        // Far side of p2 up to z, the long arm out to x, the spliced
        // stretch, then p2 beyond y away from z.
        const int far2 = dir2 == 1 ? 0 : static_cast<int>(w2.size()) - 1;
        qv = segment(w2, far2, z2);
        append_from(qv, segment(a1.vertices, 0, dx), 1);
        append_from(qv, segment(conn.vertices, splice->xi, splice->yi), 1);
        const int y2 = pos_of(w2, splice->y);
        const int end2 = dir2 == 1 ? static_cast<int>(w2.size()) - 1 : 0;
        if (y2 != end2) append_from(qv, segment(w2, y2 + dir2, end2), 0);
        longer_than = &p2;
    } else {
        const int far1 = dir1 == 1 ? 0 : static_cast<int>(w1.size()) - 1;
        qv = segment(w1, far1, z1);
        append_from(qv, segment(a2.vertices, 0, dy), 1);
        append_from(qv, segment(conn.vertices, splice->yi, splice->xi), 1);
        const int x1 = pos_of(w1, splice->x);
        const int end1 = dir1 == 1 ? static_cast<int>(w1.size()) - 1 : 0;
        if (x1 != end1) append_from(qv, segment(w1, x1 + dir1, end1), 0);
        longer_than = &p1;
    }

    const Path q{qv};
    if (!simple_sequence(qv))
        throw std::logic_error("invariant breach: constructed path not simple");
    if (q.length() <= longer_than->length())
        throw std::logic_error("invariant breach: length gain missing");

    if (witness) {
        witness->kind = SurgeryKind::shared_vertex;
        witness->inputs = {p1, p2, r1, r2, conn};
        witness->outputs = {q};
        witness->x = splice->x;
        witness->y = splice->y;
        witness->z = z;
    }
    return q;
}

CorollaryResult surgery_corollary(const Path& p1, const Path& p2, int z,
                                  const Path& r1,
                                  const std::vector<Path>& r2_pieces,
                                  const Path& conn, SurgeryWitness* witness) {
    require_simple(p1, "p1");
    require_simple(p2, "p2");
    require_simple(r1, "r1");
    require_simple(conn, "conn");
    require(!r2_pieces.empty(), "no r2 pieces given");
    for (size_t i = 0; i < r2_pieces.size(); ++i)
        require_simple(r2_pieces[i], "r2 piece " + std::to_string(i));

    require(p1.contains(z), "z is not on p1");
    require(p2.contains(z), "z is not on p2");

    Path a1 = r1;
    if (a1.back() == z) a1 = a1.reversed();
    require(a1.front() == z, "r1 does not end at z");
    require(orient_with_tail_last(p1, a1).has_value(), "r1 is not a tail of p1");

    const VertexSet sp1 = p1.vertex_set(), sp2 = p2.vertex_set();
    const VertexSet s1 = a1.vertex_set();
    require(s1.intersect(sp2) == VertexSet{z}, "r1 meets p2 beyond z");

    VertexSet r2all;
    for (size_t i = 0; i < r2_pieces.size(); ++i) {
        const Path& pc = r2_pieces[i];
        require(is_subpath(p2, pc),
                "r2 piece " + std::to_string(i) + " is not a subpath of p2");
        require(pc.front() == z || pc.back() == z || pc.contains(p2.front()) ||
                    pc.contains(p2.back()),
                "r2 piece " + std::to_string(i) +
                    " is anchored neither at z nor at an end of p2");
        r2all = r2all.unite(pc.vertex_set());
    }
    for (size_t i = 0; i < r2_pieces.size(); ++i)
        for (size_t j = i + 1; j < r2_pieces.size(); ++j) {
            const VertexSet inter =
                r2_pieces[i].vertex_set().intersect(r2_pieces[j].vertex_set());
            for (int v : inter) {
                const bool end_i =
                    r2_pieces[i].front() == v || r2_pieces[i].back() == v;
                const bool end_j =
                    r2_pieces[j].front() == v || r2_pieces[j].back() == v;
                require(end_i && end_j, "r2 pieces " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " overlap internally");
            }
        }
    const VertexSet r2p1 = r2all.intersect(sp1);
    require(r2p1.empty() || r2p1 == VertexSet{z}, "r2 meets p1 beyond z");

    require(!conn.contains(z), "z lies on conn");
    bool hits1 = false, hits2 = false;
    for (int v : conn.vertices) {
        if (sp1.contains(v)) {
            require(s1.contains(v), "conn meets p1 outside r1");
            hits1 = true;
        }
        if (sp2.contains(v)) {
            require(r2all.contains(v), "conn meets p2 outside r2");
            hits2 = true;
        }
    }
    require(hits1, "conn misses p1");
    require(hits2, "conn misses p2");

    const auto splice = find_splice(conn, s1, r2all);
    if (!splice)
        throw std::logic_error("invariant breach: no clean splice pair");

    // The clean stretch of conn between the splice vertices.
    const Path conn_xy{segment(conn.vertices, splice->xi, splice->yi)};

    // Piece holding y; the lowest index wins when y is a shared endpoint.
    int pick = -1;
    for (size_t i = 0; i < r2_pieces.size() && pick < 0; ++i)
        if (r2_pieces[i].contains(splice->y)) pick = static_cast<int>(i);
    if (pick < 0)
        throw std::logic_error("invariant breach: splice vertex outside all pieces");
    const Path& piece = r2_pieces[pick];

    SurgeryWitness inner;
    CorollaryResult result;
    if (piece.contains(z)) {
        // Trim the piece to its z-to-y stretch so z sits at its end.
        const int pz = pos_of(piece.vertices, z);
        const int py = pos_of(piece.vertices, splice->y);
        const Path trimmed{segment(piece.vertices, pz, py)};
        result.branch = SurgeryKind::shared_vertex;
        result.single = surgery_shared_vertex(p1, p2, z, a1, trimmed, conn_xy,
                                              witness ? &inner : nullptr);
    } else {
        // The piece avoids z, so it is anchored at an end of p2 and serves
        // as a tail; r1 sheds z to clear p2 entirely.
        const Path r1_trim{
            std::vector<int>(a1.vertices.begin() + 1, a1.vertices.end())};
        result.branch = SurgeryKind::two_tails;
        result.pair = surgery_two_tails(p1, r1_trim, p2, piece, conn_xy,
                                        witness ? &inner : nullptr);
    }

    if (witness) {
        witness->kind = SurgeryKind::corollary_dispatch;
        witness->inputs = {p1, p2, r1};
        witness->inputs.insert(witness->inputs.end(), r2_pieces.begin(),
                               r2_pieces.end());
        witness->inputs.push_back(conn);
        witness->outputs = inner.outputs;
        witness->x = splice->x;
        witness->y = splice->y;
        witness->z = z;
    }
    return result;
}

TriangleTailsReport validate_triangle_tails(
    const TwoTreeEmbedding& emb, const Graph& g,
    const std::array<int, 3>& triangle, const Path& r1, const Path& r2,
    const Path& r3, const std::optional<Sp2Sides>& sides) {
    require(triangle[0] != triangle[1] && triangle[0] != triangle[2] &&
                triangle[1] != triangle[2],
            "triangle vertices are not distinct");
    require(emb.host.has_edge(triangle[0], triangle[1]) &&
                emb.host.has_edge(triangle[0], triangle[2]) &&
                emb.host.has_edge(triangle[1], triangle[2]),
            "triangle is not a virtual triangle of the host");

    const VertexSet tri{triangle[0], triangle[1], triangle[2]};
    const std::array<const Path*, 3> tails{&r1, &r2, &r3};
    for (int i = 0; i < 3; ++i) {
        const std::string name = "tail " + std::to_string(i + 1);
        require(tails[i]->is_valid_in(g), name + " is not a path of g");
        require(tails[i]->front() == triangle[i] ||
                    tails[i]->back() == triangle[i],
                name + " does not start at its triangle vertex");
        require(tails[i]->vertex_set().intersect(tri) == VertexSet{triangle[i]},
                name + " meets the triangle beyond its own vertex");
    }

    TriangleTailsReport rep;
    const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    const std::array<VertexSet, 3> sets{r1.vertex_set(), r2.vertex_set(),
                                        r3.vertex_set()};
    for (int k = 0; k < 3; ++k) {
        const auto [i, j] = pairs[k];
        rep.pair_intersects[k] = !sets[i].intersect(sets[j]).empty();
        if (rep.pair_intersects[k]) ++rep.intersecting_pairs;
    }

    std::ostringstream dump;
    if (rep.intersecting_pairs > 1) {
        rep.ok = false;
        dump << "violation: " << rep.intersecting_pairs
             << " tail pairs intersect\n";
    } else if (rep.intersecting_pairs == 1) {
        const int k = rep.pair_intersects[0] ? 0 : rep.pair_intersects[1] ? 1 : 2;
        const auto [i, j] = pairs[k];
        const int other = 3 - i - j;
        const VertexSet uni = sets[i].unite(sets[j]);
        for (const Component& c :
             components_of_virtual_edge(emb, triangle[i], triangle[j])) {
            if (c.direction == triangle[other]) continue;
            if (uni.is_subset_of(c.vertices)) {
                rep.container = c;
                break;
            }
        }
        if (!rep.container) {
            rep.ok = false;
            dump << "violation: intersecting tails " << i + 1 << " and " << j + 1
                 << " fit no single component of their edge\n";
        }
    }

    if (sides) {
        const Path& s1 = sides->s1;
        const Path& s2 = sides->s2;
        require(s1.is_valid_in(g), "side s1 is not a path of g");
        require(s2.is_valid_in(g), "side s2 is not a path of g");
        require(tri.contains(s1.front()) && tri.contains(s1.back()) &&
                    s1.front() != s1.back(),
                "side s1 does not run between two triangle vertices");
        require(tri.contains(s2.front()) && tri.contains(s2.back()) &&
                    s2.front() != s2.back(),
                "side s2 does not run between two triangle vertices");
        int vj = -1;
        for (int e1 : {s1.front(), s1.back()})
            for (int e2 : {s2.front(), s2.back()})
                if (e1 == e2) vj = e1;
        require(vj >= 0, "side paths do not share an endpoint");
        const int vi = s1.front() == vj ? s1.back() : s1.front();
        const int vk = s2.front() == vj ? s2.back() : s2.front();
        require(vi != vk, "side paths cover only two triangle vertices");
        require(s1.vertex_set().intersect(tri) == VertexSet({vi, vj}),
                "side s1 meets the triangle beyond its endpoints");
        require(s2.vertex_set().intersect(tri) == VertexSet({vj, vk}),
                "side s2 meets the triangle beyond its endpoints");
        const int idx = vi == triangle[0] ? 0 : vi == triangle[1] ? 1 : 2;

        rep.sp2_checked = true;
        if (!sets[idx].intersect(s2.vertex_set()).empty()) {
            rep.sp2_ok = false;
            rep.ok = false;
            dump << "violation: the tail at " << vi << " meets s2\n";
        }
        if (!(s1.vertex_set().intersect(s2.vertex_set()) == VertexSet{vj})) {
            rep.sp2_ok = false;
            rep.ok = false;
            dump << "violation: s1 meets s2 beyond their shared endpoint\n";
        }
    }

    if (!rep.ok) {
        dump << "triangle: " << triangle[0] << " " << triangle[1] << " "
             << triangle[2] << "\n";
        for (int i = 0; i < 3; ++i)
            dump << "tail " << i + 1 << ": " << vertex_list(tails[i]->vertices)
                 << "\n";
        if (sides) {
            dump << "s1: " << vertex_list(sides->s1.vertices) << "\n";
            dump << "s2: " << vertex_list(sides->s2.vertices) << "\n";
        }
        dump << "graph:\n" << serialize_edge_list(g);
        rep.violation = dump.str();
    }
    return rep;
}

std::array<int, 3> root_triangle(const TwoTreeEmbedding& emb) {
    require(!emb.elimination_order.empty(),
            "graph is trivial: no virtual triangles");
    const int v = emb.elimination_order.back();
    const auto anchors = emb.anchors_of(v);
    std::array<int, 3> tri{v, anchors[0], anchors[1]};
    std::sort(tri.begin(), tri.end());
    return tri;
}

bool crossing_pairs_meet_interior(const LongestPathSet& lps, int u, int v,
                                  const Component& c, int* pairs_checked) {
    int n = std::max(u, v) + 1;
    for (const Path& p : lps.paths)
        for (int w : p.vertices) n = std::max(n, w + 1);
    for (int w : c.vertices) n = std::max(n, w + 1);
    const auto has = membership(lps, n);
    return pair_check(has, u, v, c.interior, pairs_checked);
}

GallaiTriangleResult find_gallai_triangle(const Graph& g,
                                          const TwoTreeEmbedding& emb,
                                          const LongestPathSet& lps) {
    require_fresh(g, lps);
    GallaiTriangleResult out;
    out.triangle = root_triangle(emb);

    const int n = g.vertex_count();
    const auto has = membership(lps, n);
    auto meets = [&](int pi, const std::array<int, 3>& tri) {
        return has[pi][tri[0]] || has[pi][tri[1]] || has[pi][tri[2]];
    };

    std::optional<VertexSet> region;
    for (;;) {
        int avoid = -1;
        for (int pi = 0; pi < static_cast<int>(has.size()) && avoid < 0; ++pi)
            if (!meets(pi, out.triangle)) avoid = pi;
        if (avoid < 0) break;

        const VertexSet pset = lps.paths[avoid].vertex_set();
        std::optional<Component> found;
        Edge via;
        for (const Edge& e : triangle_edges(out.triangle)) {
            const int third = out.triangle[0] + out.triangle[1] +
                              out.triangle[2] - e.first - e.second;
            for (const Component& c :
                 components_of_virtual_edge(emb, e.first, e.second)) {
                if (c.direction == third) continue;
                if (pset.is_subset_of(c.vertices)) {
                    found = c;
                    via = e;
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw std::logic_error(
                "invariant breach: avoiding path fits no component");
        if (region && !found->vertices.is_strict_subset_of(*region))
            throw std::logic_error("invariant breach: component failed to shrink");
        region = found->vertices;

        std::array<int, 3> next{via.first, via.second, found->direction};
        std::sort(next.begin(), next.end());

        TraceStep step;
        step.kind = TraceStepKind::component_iterated;
        step.triangle = next;
        step.edge = via;
        step.component = *found;
        step.justification =
            "longest path #" + std::to_string(avoid) + " avoids triangle " +
            tri_str(out.triangle) + "; it lies in the piece of edge " +
            edge_str(via) + " toward " + std::to_string(found->direction) +
            " (" + std::to_string(found->vertices.size()) + " vertices)";
        out.steps.push_back(std::move(step));
        out.triangle = next;
    }
    return out;
}

EdgeSelection select_gallai_edge(const Graph& g, const TwoTreeEmbedding& emb,
                                 const std::array<int, 3>& triangle,
                                 const LongestPathSet& lps) {
    require_fresh(g, lps);
    std::array<int, 3> tri = triangle;
    std::sort(tri.begin(), tri.end());
    const auto has = membership(lps, g.vertex_count());

    for (const auto& h : has)
        require(h[tri[0]] || h[tri[1]] || h[tri[2]],
                "triangle is not a Gallai set for the given longest paths");

    for (int v : tri) {
        bool everywhere = true;
        for (const auto& h : has)
            if (!h[v]) {
                everywhere = false;
                break;
            }
        if (everywhere) {
            EdgeSelection sel;
            sel.vertex = v;
            return sel;
        }
    }

    if (auto sel = edge_component_search(has, emb, tri, nullptr)) return *sel;
    throw std::logic_error(
        "invariant breach: no edge-component certificate found");
}

EdgeSelection iterate_component(const Graph& g, const TwoTreeEmbedding& emb,
                                const Edge& edge, const Component& c,
                                const LongestPathSet& lps) {
    require_fresh(g, lps);
    const Edge e = make_edge(edge.first, edge.second);
    require(c.anchor == e, "stale inputs: component anchored elsewhere");
    require(emb.host.has_edge(e.first, c.direction) &&
                emb.host.has_edge(e.second, c.direction),
            "stale inputs: direction is not a common host neighbor");

    std::array<int, 3> tri{e.first, e.second, c.direction};
    std::sort(tri.begin(), tri.end());
    const auto has = membership(lps, g.vertex_count());

    for (int v : tri) {
        bool everywhere = true;
        for (const auto& h : has)
            if (!h[v]) {
                everywhere = false;
                break;
            }
        if (everywhere) {
            EdgeSelection sel;
            sel.vertex = v;
            return sel;
        }
    }

    if (auto sel = edge_component_search(has, emb, tri, &c.vertices)) return *sel;
    throw std::logic_error("invariant breach: no shrinking certificate found");
}

ProofTrace run_trace(const Graph& g, int cap) {
    require(is_connected(g), "graph is not connected");
    ProofTrace trace;
    if (g.vertex_count() <= 2) {
        TraceStep step;
        step.kind = TraceStepKind::vertex_found;
        step.vertex = 0;
        step.justification =
            "vertex 0 lies on every longest path of a graph with at most one edge";
        trace.steps.push_back(std::move(step));
        trace.final_vertex = 0;
        return trace;
    }

    const TwoTreeEmbedding emb = complete_to_two_tree(g);
    const LongestPathSet lps = enumerate_longest_paths(g, cap);
    const std::string total = std::to_string(lps.paths.size());

    GallaiTriangleResult walk = find_gallai_triangle(g, emb, lps);
    trace.steps = std::move(walk.steps);

    TraceStep found;
    found.kind = TraceStepKind::triangle_found;
    found.triangle = walk.triangle;
    found.justification = "all " + total + " longest paths meet triangle " +
                          tri_str(walk.triangle);
    trace.steps.push_back(std::move(found));

    std::array<int, 3> tri = walk.triangle;
    EdgeSelection sel = select_gallai_edge(g, emb, tri, lps);
    while (!sel.vertex) {
        TraceStep step;
        step.kind = TraceStepKind::edge_selected;
        step.triangle = tri;
        step.edge = sel.edge;
        step.component = sel.component;
        step.justification =
            "edge " + edge_str(*sel.edge) + " meets all " + total +
            " longest paths; " + std::to_string(sel.pair_checks) +
            " crossing pairs share a vertex inside the piece toward " +
            std::to_string(sel.component->direction) + " (" +
            std::to_string(sel.component->vertices.size()) + " vertices)";
        trace.steps.push_back(std::move(step));
        tri = {sel.edge->first, sel.edge->second, sel.component->direction};
        std::sort(tri.begin(), tri.end());
        sel = iterate_component(g, emb, *sel.edge, *sel.component, lps);
    }

    TraceStep last;
    last.kind = TraceStepKind::vertex_found;
    last.vertex = *sel.vertex;
    last.justification = "vertex " + std::to_string(*sel.vertex) +
                         " lies on all " + total + " longest paths";
    trace.steps.push_back(std::move(last));
    trace.final_vertex = *sel.vertex;
    return trace;
}

void verify_trace(const Graph& g, const ProofTrace& trace, int cap) {
    auto fail = [](size_t idx, const std::string& why) {
        throw std::runtime_error("trace step " + std::to_string(idx) + ": " + why);
    };
    auto fail_all = [](const std::string& why) {
        throw std::runtime_error("trace: " + why);
    };
    if (!is_connected(g)) fail_all("graph is not connected");
    if (trace.steps.empty()) fail_all("no steps");

    const int n = g.vertex_count();
    const LongestPathSet lps = enumerate_longest_paths(g, cap);
    const auto has = membership(lps, n);
    auto on_all = [&](int v) {
        for (const auto& h : has)
            if (!h[v]) return false;
        return true;
    };
    const auto& steps = trace.steps;

    if (n <= 2) {
        if (steps.size() != 1 || steps[0].kind != TraceStepKind::vertex_found)
            fail_all("tiny graph must carry a single vertex_found step");
        if (!steps[0].vertex) fail(0, "vertex_found step carries no vertex");
        if (*steps[0].vertex != trace.final_vertex) fail(0, "final vertex mismatch");
        if (*steps[0].vertex < 0 || *steps[0].vertex >= n)
            fail(0, "final vertex out of range");
        if (!on_all(*steps[0].vertex)) fail(0, "final vertex misses a longest path");
        return;
    }

    const TwoTreeEmbedding emb = complete_to_two_tree(g);
    std::array<int, 3> cur = root_triangle(emb);
    std::optional<VertexSet> region;

    auto meets_tri = [&](int pi, const std::array<int, 3>& t) {
        return has[pi][t[0]] || has[pi][t[1]] || has[pi][t[2]];
    };
    auto on_triangle = [](const Edge& e, const std::array<int, 3>& t) {
        auto in = [&](int v) { return v == t[0] || v == t[1] || v == t[2]; };
        return in(e.first) && in(e.second);
    };
    auto component_matches = [&](const Component& c) {
        for (const Component& real :
             components_of_virtual_edge(emb, c.anchor.first, c.anchor.second))
            if (real.direction == c.direction)
                return real.vertices == c.vertices && real.interior == c.interior;
        return false;
    };
    auto check_shrink = [&](size_t idx, const Component& c) {
        if (region) {
            if (!c.vertices.is_strict_subset_of(*region))
                fail(idx, "component failed to shrink");
        } else if (c.vertices.size() >= n) {
            fail(idx, "component does not shrink the whole graph");
        }
        region = c.vertices;
    };

    size_t i = 0;
    for (; i < steps.size() && steps[i].kind == TraceStepKind::component_iterated;
         ++i) {
        const TraceStep& s = steps[i];
        if (!s.edge || !s.component || !s.triangle)
            fail(i, "component_iterated step missing fields");
        if (!on_triangle(*s.edge, cur))
            fail(i, "edge is not an edge of the walk triangle");
        if (s.component->anchor != *s.edge)
            fail(i, "component not anchored at the step edge");
        if (!component_matches(*s.component))
            fail(i, "component does not match the embedding");
        std::array<int, 3> next{s.edge->first, s.edge->second,
                                s.component->direction};
        std::sort(next.begin(), next.end());
        if (next != *s.triangle)
            fail(i, "triangle does not extend the edge by the component direction");
        bool witnessed = false;
        for (int pi = 0; pi < static_cast<int>(has.size()) && !witnessed; ++pi)
            if (!meets_tri(pi, cur) &&
                lps.paths[pi].vertex_set().is_subset_of(s.component->vertices))
                witnessed = true;
        if (!witnessed) fail(i, "no avoiding longest path lies inside the component");
        check_shrink(i, *s.component);
        cur = next;
    }

    if (i >= steps.size() || steps[i].kind != TraceStepKind::triangle_found)
        fail_all("expected a triangle_found step at position " + std::to_string(i));
    {
        const TraceStep& s = steps[i];
        if (!s.triangle) fail(i, "triangle_found step missing its triangle");
        if (*s.triangle != cur) fail(i, "found triangle differs from the walk triangle");
        for (int pi = 0; pi < static_cast<int>(has.size()); ++pi)
            if (!meets_tri(pi, cur)) fail(i, "a longest path avoids the final triangle");
        ++i;
    }

    for (; i < steps.size() && steps[i].kind == TraceStepKind::edge_selected; ++i) {
        const TraceStep& s = steps[i];
        if (!s.edge || !s.component || !s.triangle)
            fail(i, "edge_selected step missing fields");
        if (*s.triangle != cur)
            fail(i, "edge_selected triangle differs from the current triangle");
        if (!on_triangle(*s.edge, cur))
            fail(i, "edge is not an edge of the current triangle");
        for (const auto& h : has)
            if (!h[s.edge->first] && !h[s.edge->second])
                fail(i, "a longest path avoids the selected edge");
        if (s.component->anchor != *s.edge)
            fail(i, "component not anchored at the selected edge");
        if (!component_matches(*s.component))
            fail(i, "component does not match the embedding");
        if (!pair_check(has, s.edge->first, s.edge->second, s.component->interior,
                        nullptr))
            fail(i, "a crossing pair misses the component interior");
        check_shrink(i, *s.component);
        cur = {s.edge->first, s.edge->second, s.component->direction};
        std::sort(cur.begin(), cur.end());
    }

    if (i + 1 != steps.size() || steps[i].kind != TraceStepKind::vertex_found)
        fail_all("expected a final vertex_found step");
    const TraceStep& s = steps[i];
    if (!s.vertex) fail(i, "vertex_found step carries no vertex");
    if (*s.vertex != trace.final_vertex) fail(i, "final vertex mismatch");
    if (!on_all(*s.vertex)) fail(i, "final vertex misses a longest path");
}

} // namespace splp
