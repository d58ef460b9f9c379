#include <doctest.h>

#include <algorithm>

#include "splp/corpus.hpp"
#include "splp/decomposition.hpp"
#include "splp/gallai.hpp"
#include "splp/oracle.hpp"
#include "splp/path_dp.hpp"
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

TEST_CASE("configuration catalog sizes") {
    // The empty bag has two states: nothing seen yet, and the finished path
    // (both externals consumed).  Each added slot multiplies the choices.
    CHECK(size_tables(0).count() == 2);
    CHECK(size_tables(1).count() == 5);
    CHECK(size_tables(2).count() == 15);
    CHECK(size_tables(3).count() == 49);
    CHECK(size_tables(4).count() == 172);
    // Width-2 decompositions use sizes 0..3 only; all stay under the cap.
    for (int s = 0; s <= 3; ++s) CHECK(size_tables(s).count() <= 200);
}

TEST_CASE("catalog entries are valid and uniquely indexed") {
    const SizeTables& t = size_tables(3);
    for (int i = 0; i < t.count(); ++i) {
        const PathConfiguration& c = t.configs[i];
        CHECK(c.is_valid());
        CHECK(c.size() == 3);
        CHECK(t.ordinal_of(c) == i);
    }
    PathConfiguration broken;
    broken.state = {PathConfiguration::END};
    broken.partner = {PathConfiguration::kNone};
    CHECK(!broken.is_valid()); // END slot with no partner and no tag
}

TEST_CASE("transition tables stay within the catalog") {
    const SizeTables& t2 = size_tables(2);
    const SizeTables& t3 = size_tables(3);
    for (int32_t v : t3.forget) CHECK(v < t2.count());
    for (int32_t v : t3.intro) CHECK(v < t3.count());
    for (int32_t v : t3.add_edge) CHECK(v < t3.count());
    for (int32_t v : t3.join) CHECK(v < t3.count());
    // The all-OFF configuration can introduce anywhere and join with itself.
    PathConfiguration off;
    off.state.assign(3, PathConfiguration::OFF);
    off.partner.assign(3, PathConfiguration::kNone);
    const int o = t3.ordinal_of(off);
    REQUIRE(o >= 0);
    CHECK(t3.join[size_t(o) * t3.count() + o] == o);
}

TEST_CASE("dp lengths on knowns") {
    CHECK(sp_longest_path_length(Graph::from_edges(2, {{0, 1}})) == 1);
    CHECK(sp_longest_path_length(named_graph("path_5")) == 4);
    CHECK(sp_longest_path_length(named_graph("triangle")) == 2);
    CHECK(sp_longest_path_length(named_graph("star_4")) == 2);
}

TEST_CASE("dp length matches the oracle on random inputs") {
    int checked = 0;
    for (uint64_t seed = 0; seed < 200; ++seed) {
        const Family fam = seed % 3 == 0   ? Family::series_parallel
                           : seed % 3 == 1 ? Family::two_tree
                                           : Family::outerplanar;
        GenSpec spec;
        spec.family = fam;
        spec.n = 2 + int(seed % 11);
        spec.seed = seed;
        const Graph g = generate(spec);
        const int want = enumerate_longest_paths(g).length;
        REQUIRE_MESSAGE(sp_longest_path_length(g) == want, "seed ", seed);
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("extracted path is a real longest path") {
    for (uint64_t seed = 0; seed < 80; ++seed) {
        const Graph g = gen_sp(2 + int(seed % 11), seed + 500);
        const SpPipeline pipe = sp_pipeline(g);
        const int len = longest_path_length(pipe.dp);
        if (len < 1) continue;
        const Path p = extract_longest_path(pipe.dp, g);
        REQUIRE_MESSAGE(p.is_valid_in(g), "seed ", seed);
        CHECK(p.length() == len);
        const LongestPathSet lps = enumerate_longest_paths(g);
        CHECK(std::find(lps.paths.begin(), lps.paths.end(), p.canonical()) !=
              lps.paths.end());
    }
}

TEST_CASE("marking matches configuration membership in longest paths") {
    // A configuration at a Forget child with the vertex OFF survives marking
    // exactly when some longest path avoids the vertex; cross-check the
    // derived set against the oracle on small graphs.
    for (uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = gen_sp(2 + int(seed % 9), seed * 11 + 3);
        const SpPipeline pipe = sp_pipeline(g);
        const ConfigMarking marking = mark_contributing_configs(pipe.dp);
        const std::vector<int> fn =
            forget_nodes(pipe.nice, g.vertex_count());
        const VertexSet want = gallai_set_bruteforce(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int child = pipe.nice.nodes[fn[v]].child[0];
            const VertexSet& bag = pipe.nice.nodes[child].bag;
            const auto& vals = bag.values();
            const int slot = int(std::lower_bound(vals.begin(), vals.end(),
                                                  v) -
                                 vals.begin());
            const SizeTables& tabs = size_tables(bag.size());
            bool avoidable = false;
            for (int c = 0; c < tabs.count(); ++c)
                if (marking.is_marked(pipe.dp, child, c) &&
                    tabs.configs[c].state[slot] == PathConfiguration::OFF)
                    avoidable = true;
            CHECK_MESSAGE(avoidable == !want.contains(v), "seed ", seed,
                          " vertex ", v);
        }
    }
}

TEST_CASE("forward dp rejects invalid inputs") {
    const Graph discon = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(sp_pipeline(discon), std::invalid_argument);
    CHECK_THROWS_AS(sp_pipeline(named_graph("k4")), std::invalid_argument);
}
