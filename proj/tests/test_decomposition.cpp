#include <doctest.h>

#include <algorithm>
#include <set>

#include "splp/corpus.hpp"
#include "splp/decomposition.hpp"
#include "splp/two_tree.hpp"

using namespace splp;

namespace {

Graph gen_sp(int n, uint64_t seed, double density = 0.3) {
    GenSpec spec;
    spec.family = Family::series_parallel;
    spec.n = n;
    spec.seed = seed;
    spec.density = density;
    return generate(spec);
}

} // namespace

TEST_CASE("triangle bags satisfy the decomposition axioms") {
    for (uint64_t seed = 0; seed < 100; ++seed) {
        const Graph g = gen_sp(2 + int(seed % 11), seed);
        const TwoTreeEmbedding emb = complete_to_two_tree(g);
        const TreeDecomposition td = decomposition_from_embedding(emb);
        REQUIRE_MESSAGE(validate_tree_decomposition(td, g), "seed ", seed);
        CHECK(td.width() <= 2);
        // Parent/children arrays must describe the same tree.
        REQUIRE(td.parent.size() == td.bags.size());
        CHECK(td.parent[td.root] == -1);
        for (size_t i = 0; i < td.bags.size(); ++i) {
            if (int(i) == td.root) continue;
            const int p = td.parent[i];
            REQUIRE(p >= 0);
            const auto& sib = td.children[p];
            CHECK(std::find(sib.begin(), sib.end(), int(i)) != sib.end());
        }
    }
}

TEST_CASE("decomposition of an edge") {
    const Graph g = Graph::from_edges(2, {{0, 1}});
    const TwoTreeEmbedding emb = complete_to_two_tree(g);
    const TreeDecomposition td = decomposition_from_embedding(emb);
    REQUIRE(validate_tree_decomposition(td, g));
    REQUIRE(td.bags.size() == 1);
    CHECK(td.bags[0] == VertexSet{0, 1});
    CHECK(td.width() == 1);
}

TEST_CASE("root is the lexicographically smallest bag") {
    const Graph g = gen_sp(9, 41);
    const TreeDecomposition td =
        decomposition_from_embedding(complete_to_two_tree(g));
    for (const VertexSet& b : td.bags) CHECK(!(b < td.bags[td.root]));
}

TEST_CASE("nice refinement is valid and well shaped") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gen_sp(2 + int(seed % 11), seed * 7 + 1);
        const TreeDecomposition td =
            decomposition_from_embedding(complete_to_two_tree(g));
        const NiceTreeDecomposition ntd = make_nice(td);
        REQUIRE_MESSAGE(validate_nice(ntd, g), "seed ", seed);
        CHECK(ntd.width() <= 2);
        REQUIRE(ntd.root == int(ntd.nodes.size()) - 1);
        CHECK(ntd.nodes[ntd.root].bag.empty());
        CHECK(ntd.nodes[ntd.root].kind == NodeKind::Forget);
        for (size_t i = 0; i < ntd.nodes.size(); ++i) {
            const NiceNode& nd = ntd.nodes[i];
            for (int c : nd.child) {
                if (c < 0) continue;
                CHECK(c < int(i)); // children precede parents
                CHECK(ntd.nodes[c].parent == int(i));
            }
            switch (nd.kind) {
            case NodeKind::Leaf:
                CHECK(nd.child[0] == -1);
                CHECK(nd.bag.empty());
                break;
            case NodeKind::Introduce:
                REQUIRE(nd.child[0] >= 0);
                CHECK(nd.child[1] == -1);
                CHECK(nd.bag.contains(nd.vertex));
                CHECK(ntd.nodes[nd.child[0]].bag ==
                      nd.bag.minus(VertexSet{nd.vertex}));
                break;
            case NodeKind::Forget:
                REQUIRE(nd.child[0] >= 0);
                CHECK(nd.child[1] == -1);
                CHECK(!nd.bag.contains(nd.vertex));
                CHECK(ntd.nodes[nd.child[0]].bag ==
                      nd.bag.unite(VertexSet{nd.vertex}));
                break;
            case NodeKind::Join:
                REQUIRE(nd.child[0] >= 0);
                REQUIRE(nd.child[1] >= 0);
                CHECK(ntd.nodes[nd.child[0]].bag == nd.bag);
                CHECK(ntd.nodes[nd.child[1]].bag == nd.bag);
                break;
            }
        }
    }
}

TEST_CASE("every vertex is forgotten exactly once") {
    const Graph g = gen_sp(11, 13);
    const NiceTreeDecomposition ntd =
        make_nice(decomposition_from_embedding(complete_to_two_tree(g)));
    const std::vector<int> fn = forget_nodes(ntd, g.vertex_count());
    REQUIRE(int(fn.size()) == g.vertex_count());
    std::set<int> distinct;
    for (int v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(fn[v] >= 0);
        CHECK(ntd.nodes[fn[v]].kind == NodeKind::Forget);
        CHECK(ntd.nodes[fn[v]].vertex == v);
        distinct.insert(fn[v]);
    }
    CHECK(int(distinct.size()) == g.vertex_count());
}

TEST_CASE("edge assignment covers each edge without rootward repeats") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = gen_sp(3 + int(seed % 10), seed * 3 + 2);
        const NiceTreeDecomposition ntd =
            make_nice(decomposition_from_embedding(complete_to_two_tree(g)));
        const auto assigned = assign_edges(ntd, g);
        REQUIRE(assigned.size() == ntd.nodes.size());
        std::set<Edge> seen;
        for (size_t i = 0; i < assigned.size(); ++i) {
            if (assigned[i].empty()) continue;
            REQUIRE(ntd.nodes[i].kind == NodeKind::Introduce);
            for (const Edge& e : assigned[i]) {
                CHECK(g.has_edge(e.first, e.second));
                CHECK(ntd.nodes[i].bag.contains(e.first));
                CHECK(ntd.nodes[i].bag.contains(e.second));
                const int v = ntd.nodes[i].vertex;
                CHECK((e.first == v || e.second == v));
                seen.insert(e);
            }
        }
        CHECK(int(seen.size()) == g.edge_count());
        // Walking rootward from any node, an edge may be assigned once.
        for (const Edge& e : g.edges()) {
            for (size_t i = 0; i < assigned.size(); ++i) {
                int hits = 0;
                for (int at = int(i); at != -1; at = ntd.nodes[at].parent) {
                    const auto& lst = assigned[at];
                    hits += int(std::count(lst.begin(), lst.end(), e));
                }
                CHECK(hits <= 1);
            }
        }
    }
}

TEST_CASE("validators reject broken structures") {
    const Graph g = gen_sp(7, 2);
    TreeDecomposition td =
        decomposition_from_embedding(complete_to_two_tree(g));
    REQUIRE(validate_tree_decomposition(td, g));
    TreeDecomposition missing = td;
    for (VertexSet& b : missing.bags) b.erase(0); // vertex 0 uncovered
    CHECK(!validate_tree_decomposition(missing, g));

    NiceTreeDecomposition ntd = make_nice(td);
    REQUIRE(validate_nice(ntd, g));
    NiceTreeDecomposition wrong = ntd;
    wrong.nodes[wrong.root].kind = NodeKind::Leaf;
    CHECK(!validate_nice(wrong, g));
}
