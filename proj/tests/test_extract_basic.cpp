#include "purepairs/extract_basic.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/rng.hpp"
#include "purepairs/validate.hpp"

#include <doctest.h>

using namespace purepairs;

TEST_CASE("gyarfas_vertex on the named graphs") {
    Graph c5 = cycle_graph(5);
    int v = gyarfas_vertex(c5, 5);
    CHECK(3 * chromatic_number(c5, c5.neighbours(v)) >= 3);

    Graph k4 = complete_graph(4);
    v = gyarfas_vertex(k4, 5);
    CHECK(3 * chromatic_number(k4, k4.neighbours(v)) >= 4);

    Graph jj = join(cycle_graph(5), cycle_graph(5));
    v = gyarfas_vertex(jj, 5);
    CHECK(chromatic_number(jj, jj.neighbours(v)) == 4);
    CHECK(3 * 4 >= chromatic_number(jj));

    CHECK_THROWS_AS(gyarfas_vertex(path_graph(5), 5), NotHFree);
    CHECK_THROWS_AS(gyarfas_vertex(edgeless_graph(3), 5), InvalidInput);
}

TEST_CASE("gyarfas_vertex across a P5-free corpus") {
    Rng rng(606);
    int done = 0;
    for (int trial = 0; done < 40 && trial < 200; ++trial) {
        Graph g;
        try {
            g = random_h_free(4 + int(rng.below(8)), 0.5, path_graph(5), rng.next());
        } catch (const RepairExhausted&) {
            continue;
        }
        if (chromatic_number(g) < 2) continue;
        int v = gyarfas_vertex(g, 5);
        CHECK(validate_gyarfas_vertex(g, 5, v).pass);
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("gyarfas colour bound") {
    auto [col, cert] = gyarfas_colour_bound(cycle_graph(5), 5);
    CHECK(col.count <= 3);
    CHECK(col.proper(cycle_graph(5)));
    CHECK(cert.bound == 3);

    auto [col2, cert2] = gyarfas_colour_bound(edgeless_graph(6), 5);
    CHECK(col2.count == 1);

    Graph jj = join(cycle_graph(5), cycle_graph(5));
    auto [col3, cert3] = gyarfas_colour_bound(jj, 5);
    CHECK(col3.count == 6);  // exact after compaction
    CHECK(cert3.bound == 27);
    CHECK(col3.proper(jj));
}

TEST_CASE("min_degree_core") {
    Graph c5 = cycle_graph(5);
    CHECK(min_degree_core(c5, 2).core == c5.vertices());

    Graph star = double_star_graph(4, 1);
    CHECK(min_degree_core(star, 1).core == star.vertices());

    // C5 with a pendant vertex
    Graph pend = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    MinDegreeCore core = min_degree_core(pend, 2);
    CHECK(core.core == VertexSet::of({0, 1, 2, 3, 4}));
    CHECK(validate_min_degree_core(pend, 2, core).pass);
    CHECK(chromatic_number(pend, core.core) >= chromatic_number(pend) - 2);

    CHECK_THROWS_AS(min_degree_core(c5, 3), InvalidInput);
}

TEST_CASE("controlled_subgraph") {
    Graph c5 = cycle_graph(5);
    ControlledSubgraph cs = controlled_subgraph(c5, 2);
    CHECK(cs.subgraph == c5.vertices());
    CHECK(validate_controlled_subgraph(c5, 2, cs).pass);

    Graph k4 = complete_graph(4);
    cs = controlled_subgraph(k4, 4);
    CHECK(cs.subgraph == k4.vertices());
    CHECK(4 * 4 * 3 < (4 * 4 - 1) * 4);  // 3 < (15/16) * 4

    CHECK_THROWS_AS(controlled_subgraph(Graph(), 2), InvalidInput);

    Rng rng(707);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = gnp(4 + int(rng.below(8)), 0.5, rng.next());
        int q = std::max(2, clique_number(g));
        CHECK(validate_controlled_subgraph(g, q, controlled_subgraph(g, q)).pass);
    }
}

TEST_CASE("vivid_clique") {
    Graph tri = complete_multipartite_graph({2, 2, 2});
    Blockade blockade;
    blockade.blocks = {VertexSet::of({0, 1}), VertexSet::of({2, 3}), VertexSet::of({4, 5})};
    auto res = vivid_clique(tri, blockade, Rat(1, 3));
    REQUIRE(std::holds_alternative<TransversalClique>(res));
    auto& tc = std::get<TransversalClique>(res);
    CHECK(tc.clique.size() == 3);
    CHECK(is_clique(tri, VertexSet::from(tc.clique)));
    CHECK(validate_vivid(tri, blockade, Rat(1, 3), res).pass);

    Blockade single;
    single.blocks = {VertexSet::of({0})};
    auto res1 = vivid_clique(tri, single, Rat(1, 3));
    REQUIRE(std::holds_alternative<TransversalClique>(res1));
    CHECK(std::get<TransversalClique>(res1).clique.size() == 1);

    Graph c5 = cycle_graph(5);
    Blockade nv;
    nv.blocks = {VertexSet::of({0}), VertexSet::of({2})};
    auto res2 = vivid_clique(c5, nv, Rat(1, 2));
    REQUIRE(std::holds_alternative<NotVivid>(res2));
    CHECK(std::get<NotVivid>(res2).i == 0);
    CHECK(std::get<NotVivid>(res2).j == 1);
    CHECK(std::get<NotVivid>(res2).v == 2);
}

TEST_CASE("eh_step base cases") {
    Graph k2 = complete_graph(2);
    Graph c5 = cycle_graph(5);
    const Submeasure card = Submeasure::cardinality();

    // cross edge present: a copy
    auto res = eh_step(c5, k2, Rat(1, 2), card, {VertexSet::of({0}), VertexSet::of({1, 2})});
    REQUIRE(std::holds_alternative<InducedCopyOutcome>(res));

    // anticomplete anchors: sparse near-pure pair with zero margin
    auto res2 = eh_step(c5, k2, Rat(1, 2), card, {VertexSet::of({0}), VertexSet::of({2, 3})});
    REQUIRE(std::holds_alternative<NearPurePairOutcome>(res2));
    auto& np = std::get<NearPurePairOutcome>(res2);
    CHECK(np.direction == PureDirection::Sparse);
    CHECK(np.a == VertexSet::of({2, 3}));
    CHECK(np.b == VertexSet::of({0}));
}

TEST_CASE("eh_step on a triangle in C5") {
    Graph c5 = cycle_graph(5);
    Graph k3 = complete_graph(3);
    const Submeasure card = Submeasure::cardinality();
    auto res = eh_step(c5, k3, Rat(1, 2), card,
                       {VertexSet::of({0}), VertexSet::of({1}), VertexSet::of({3})});
    // C5 is triangle-free, so the anchored copy cannot exist
    REQUIRE(std::holds_alternative<NearPurePairOutcome>(res));
    auto& np = std::get<NearPurePairOutcome>(res);
    CHECK(np.depth <= 3);
    Rat factor = rpow(Rat(1, 2), 1);
    CHECK(Rat(np.a.count()) >= factor * 1);
    CHECK(Rat(np.b.count()) >= factor * 1);
}

TEST_CASE("near_pure_pair trivial branch") {
    Graph c5 = cycle_graph(5);
    auto out = near_pure_pair(c5, complete_graph(3), Rat(1, 2), Submeasure::cardinality());
    CHECK(out.degenerate);  // mu(G) = 5 < 12
    CHECK(out.a.count() == 1);
    CHECK(out.b.count() == 1);
    CHECK(validate_near_pure(c5, complete_graph(3), Rat(1, 2), Submeasure::cardinality(), out)
              .pass);
}

TEST_CASE("near_pure_pair on the stress family") {
    Graph g = c5_join_power(2);
    Graph k5 = complete_graph(5);
    auto out = near_pure_pair(g, k5, Rat(1, 2), Submeasure::chromatic());
    CHECK(validate_near_pure(g, k5, Rat(1, 2), Submeasure::chromatic(), out).pass);
}

TEST_CASE("near_pure_pair literal size bound at n = 14") {
    Graph g;
    Rng rng(321);
    for (int trial = 0;; ++trial) {
        REQUIRE(trial < 50);
        try {
            g = random_h_free(14, 0.5, path_graph(5), rng.next());
            break;
        } catch (const RepairExhausted&) {
        }
    }
    auto out = near_pure_pair(g, path_graph(5), Rat(1, 2), Submeasure::cardinality());
    // |A|, |B| >= 14 / (2*5*2^3) which rounds up to 1
    CHECK(out.a.count() >= 1);
    CHECK(out.b.count() >= 1);
    CHECK(validate_near_pure(g, path_graph(5), Rat(1, 2), Submeasure::cardinality(), out).pass);
    CHECK(out.depth <= 5);
}

TEST_CASE("near_pure_pair rejects H-containing input") {
    CHECK_THROWS_AS(
        near_pure_pair(path_graph(5), path_graph(5), Rat(1, 2), Submeasure::cardinality()),
        NotHFree);
}

TEST_CASE("quasi_pure edgeless") {
    Graph e6 = edgeless_graph(6);
    auto res = quasi_pure(e6, complete_graph(3), Rat(1, 2), Submeasure::cardinality());
    REQUIRE(std::holds_alternative<StableSetOutcome>(res));
    CHECK(std::get<StableSetOutcome>(res).set == e6.vertices());
}

TEST_CASE("quasi_pure on complete multipartite") {
    Graph g = complete_multipartite_graph({3, 3, 3});
    Graph k5 = complete_graph(5);
    auto res = quasi_pure(g, k5, Rat(1, 3), Submeasure::cardinality());
    auto v = validate_quasi(g, k5, Rat(1, 3), Submeasure::cardinality(), res);
    CHECK(v.pass);
    if (auto* ss = std::get_if<StableSetOutcome>(&res)) CHECK(ss->set.count() == 3);
}

TEST_CASE("quasi_pure on C5 with the chromatic submeasure") {
    Graph c5 = cycle_graph(5);
    auto res = quasi_pure(c5, complete_graph(4), Rat(1, 2), Submeasure::chromatic());
    CHECK(validate_quasi(c5, complete_graph(4), Rat(1, 2), Submeasure::chromatic(), res).pass);
}

TEST_CASE("quasi_pure eps range") {
    Graph k4 = complete_graph(4);
    CHECK_THROWS_AS(quasi_pure(k4, complete_graph(5), Rat(1, 2), Submeasure::cardinality()),
                    InvalidInput);  // eps > 1/omega
}

TEST_CASE("quasi and near-pure across random H-free corpora") {
    Rng rng(515);
    std::vector<Graph> patterns{complete_graph(3), path_graph(4), path_graph(5)};
    for (const Graph& h : patterns) {
        int done = 0;
        for (int trial = 0; done < 12 && trial < 120; ++trial) {
            Graph g;
            try {
                g = random_h_free(4 + int(rng.below(7)), 0.45, h, rng.next());
            } catch (const RepairExhausted&) {
                continue;
            }
            if (g.size() < 2) continue;
            for (const Submeasure& mu : {Submeasure::chromatic(), Submeasure::cardinality()}) {
                auto out = near_pure_pair(g, h, Rat(1, 2), mu);
                CHECK(validate_near_pure(g, h, Rat(1, 2), mu, out).pass);
                if (clique_number(g) >= 1) {
                    Rat eps(1, std::max(2, clique_number(g)));
                    auto qres = quasi_pure(g, h, eps, mu);
                    CHECK(validate_quasi(g, h, eps, mu, qres).pass);
                }
            }
            ++done;
        }
        CHECK(done == 12);
    }
}
