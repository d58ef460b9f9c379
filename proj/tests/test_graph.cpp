#include <doctest.h>

#include "splp/graph.hpp"

using namespace splp;

TEST_CASE("edge normalization and basic accessors") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {3, 1}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 3));
    CHECK(g.degree(1) == 3);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2, 3});
}

TEST_CASE("vertex set algebra") {
    VertexSet a{3, 1, 2};
    const VertexSet b{2, 3, 5};
    CHECK(a.size() == 3);
    CHECK(a.contains(1));
    CHECK(!a.contains(5));
    CHECK(a.intersect(b) == VertexSet({2, 3}));
    CHECK(a.unite(b) == VertexSet({1, 2, 3, 5}));
    CHECK(a.minus(b) == VertexSet{1});
    CHECK(VertexSet({2, 3}).is_subset_of(a));
    CHECK(VertexSet({2, 3}).is_strict_subset_of(a));
    CHECK(!a.is_strict_subset_of(a));
    a.insert(7);
    a.erase(1);
    CHECK(a == VertexSet({2, 3, 7}));
}

TEST_CASE("path primitives") {
    const Path p{{4, 2, 0, 1}};
    CHECK(p.length() == 3);
    CHECK(p.front() == 4);
    CHECK(p.back() == 1);
    CHECK(p.contains(0));
    CHECK(!p.contains(3));
    CHECK(p.reversed().vertices == std::vector<int>{1, 0, 2, 4});
    CHECK(p.canonical() == p.reversed().canonical());
    const Graph g = Graph::from_edges(5, {{4, 2}, {2, 0}, {0, 1}, {1, 3}});
    CHECK(p.is_valid_in(g));
    CHECK(!Path{{4, 0}}.is_valid_in(g));
    CHECK(!Path{{4, 2, 4}}.is_valid_in(g));
}

TEST_CASE("parse and serialize round-trip") {
    const std::string text = "4 3\n# comment line\n0 1\n\n2 1\n3 0\n";
    const Graph g = parse_edge_list(text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    const std::string out = serialize_edge_list(g);
    CHECK(parse_edge_list(out) == g);
    CHECK(out == "4 3\n0 1\n0 3\n1 2\n");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("0 0\n") == 1);            // zero vertices
    CHECK(line_of("3 1\n0 9\n") == 2);       // id out of range
    CHECK(line_of("3 1\n1 1\n") == 2);       // self-loop
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);  // duplicate
    CHECK(line_of("3 2\n0 1\n") == 1);       // count mismatch -> header
    CHECK(line_of("3 1\n0 x\n") == 2);       // malformed token
    CHECK(line_of("") == 1);                 // missing header
}

TEST_CASE("connectivity, deletion, components") {
    const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(!is_connected(g));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4});

    const VertexDeletion del = delete_vertex(g, 1);
    CHECK(del.graph.vertex_count() == 4);
    CHECK(del.graph.edge_count() == 1);
    CHECK(del.old_to_new[1] == -1);
    CHECK(del.new_to_old[del.old_to_new[3]] == 3);

    const InducedSubgraph sub = induced_subgraph(g, {1, 2, 0});
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.new_to_old == std::vector<int>{0, 1, 2});
}

TEST_CASE("path splitting around cut vertices") {
    const Path p{{0, 1, 2, 3, 4, 5}};
    const auto pieces = split_path_at(p, VertexSet({2, 4, 9}));
    REQUIRE(pieces.size() == 3);
    CHECK(pieces[0].vertices == std::vector<int>{0, 1, 2});
    CHECK(pieces[1].vertices == std::vector<int>{2, 3, 4});
    CHECK(pieces[2].vertices == std::vector<int>{4, 5});

    // Cuts at the endpoints contribute degenerate one-vertex pieces, so the
    // share-a-cut-vertex/concatenation contract holds uniformly.
    const auto ends = split_path_at(p, VertexSet({0, 5}));
    REQUIRE(ends.size() == 3);
    CHECK(ends[0].vertices == std::vector<int>{0});
    CHECK(ends[1].vertices == p.vertices);
    CHECK(ends[2].vertices == std::vector<int>{5});
}

TEST_CASE("bridge path walks to the first shared vertex") {
    const Path p{{7, 6, 2, 3}};
    const Path q{{2, 1, 0}};
    const Path b = bridge_path(p, q, 7);
    CHECK(b.vertices == std::vector<int>{7, 6, 2});
}

TEST_CASE("induced subpaths are maximal runs") {
    const Path p{{0, 1, 2, 3, 4, 5, 6}};
    const auto runs = induced_subpaths(p, VertexSet({0, 1, 3, 5, 6}));
    REQUIRE(runs.size() == 3);
    CHECK(runs[0].vertices == std::vector<int>{0, 1});
    CHECK(runs[1].vertices == std::vector<int>{3});
    CHECK(runs[2].vertices == std::vector<int>{5, 6});
}
