#include "purepairs/graph.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/io.hpp"
#include "purepairs/rng.hpp"

#include <doctest.h>

#include <sstream>

using namespace purepairs;

TEST_CASE("build_graph basics") {
    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);
    Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.adjacent(0, 1));
    CHECK(!c5.adjacent(0, 2));
    Graph p5 = path_graph(5);
    CHECK(p5.edge_count() == 4);

    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidInput);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), InvalidInput);
    // duplicates collapse
    Graph dup = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("induced subgraphs") {
    Graph c5 = cycle_graph(5);
    auto sub = induced(c5, VertexSet::of({0, 1, 2}));
    CHECK(sub.graph.size() == 3);
    CHECK(sub.graph.edge_count() == 2);  // P3
    auto none = induced(complete_graph(4), VertexSet());
    CHECK(none.graph.size() == 0);
    auto pairsub = induced(c5, VertexSet::of({0, 2}));
    CHECK(pairsub.graph.edge_count() == 0);
    // identity relabelling
    auto full = induced(c5, c5.vertices());
    CHECK(full.graph == c5);
    for (int i = 0; i < 5; ++i) CHECK(full.to_parent[size_t(i)] == i);
    CHECK_THROWS_AS(induced(c5, VertexSet::of({6})), InvalidInput);
}

TEST_CASE("components") {
    Graph c5 = cycle_graph(5);
    CHECK(components(c5, c5.vertices()).size() == 1);
    auto two = components(c5, VertexSet::of({0, 2}));
    CHECK(two.size() == 2);
    Graph kk = disjoint_union(complete_graph(3), complete_graph(3));
    auto comps = components(kk, kk.vertices());
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 3);
    CHECK(comps[1].count() == 3);
}

TEST_CASE("components partition and are connected") {
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng.below(8));
        Graph g = gnp(n, 0.4, rng.next());
        VertexSet s(rng.next() & g.vertices().bits());
        auto comps = components(g, s);
        VertexSet all;
        for (const auto& c : comps) {
            CHECK(!c.intersects(all));
            CHECK(is_connected(g, c));
            all = all | c;
        }
        CHECK(all == s);
        for (size_t i = 0; i < comps.size(); ++i)
            for (size_t j = i + 1; j < comps.size(); ++j)
                CHECK(is_anticomplete_between(g, comps[i], comps[j]));
    }
}

TEST_CASE("pair_status") {
    Graph c5 = cycle_graph(5);
    Graph k4 = complete_graph(4);
    CHECK(pair_status(c5, VertexSet::of({0}), VertexSet::of({2, 3})).kind ==
          PairKind::Anticomplete);
    CHECK(pair_status(k4, VertexSet::of({0}), VertexSet::of({1, 2, 3})).kind ==
          PairKind::Complete);
    auto st = pair_status(c5, VertexSet::of({0}), VertexSet::of({1, 2}));
    CHECK(st.kind == PairKind::Mixed);
    CHECK(st.edge == std::pair<int, int>{0, 1});
    CHECK(st.non_edge == std::pair<int, int>{0, 2});
    CHECK_THROWS_AS(pair_status(c5, VertexSet::of({0}), VertexSet::of({0, 1})), InvalidInput);
    CHECK_THROWS_AS(pair_status(c5, VertexSet(), VertexSet::of({1})), InvalidInput);
}

TEST_CASE("pair status complement duality") {
    Rng rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + int(rng.below(9));
        Graph g = gnp(n, 0.5, rng.next());
        Graph co = complement(g);
        std::uint64_t am = rng.next() & g.vertices().bits();
        std::uint64_t bm = rng.next() & g.vertices().bits() & ~am;
        VertexSet a(am), b(bm);
        if (a.empty() || b.empty()) continue;
        bool anti = pair_status(g, a, b).kind == PairKind::Anticomplete;
        bool comp = pair_status(co, a, b).kind == PairKind::Complete;
        CHECK(anti == comp);
    }
}

TEST_CASE("is_mixed_on") {
    Graph c5 = cycle_graph(5);
    Graph k4 = complete_graph(4);
    CHECK(is_mixed_on(c5, 0, VertexSet::of({1, 2})));
    CHECK(!is_mixed_on(k4, 0, VertexSet::of({1, 2})));
    CHECK(!is_mixed_on(c5, 0, VertexSet::of({2, 3})));
    CHECK_THROWS_AS(is_mixed_on(c5, 0, VertexSet::of({0, 1})), InvalidInput);
}

TEST_CASE("edge list round trip") {
    Graph g = gnp(9, 0.4, 4242);
    std::stringstream ss;
    write_edge_list(ss, g);
    Graph back = read_edge_list(ss);
    CHECK(back == g);
}

TEST_CASE("graph6 known values and round trip") {
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(edgeless_graph(3)) == "B?");
    CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
    Rng rng(5050);
    for (int trial = 0; trial < 100; ++trial) {
        int n = int(rng.below(13));
        Graph g = gnp(n, 0.5, rng.next());
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph auto-detect") {
    std::stringstream ss("5 2\n0 1\n3 4\n");
    Graph g = read_graph_auto(ss);
    CHECK(g.size() == 5);
    CHECK(g.edge_count() == 2);
    std::stringstream s6("Dhc\n");
    CHECK(read_graph_auto(s6) == cycle_graph(5));
}
