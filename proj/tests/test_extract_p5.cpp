#include "purepairs/extract_p5.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/rng.hpp"
#include "purepairs/validate.hpp"

#include <doctest.h>

using namespace purepairs;

TEST_CASE("assert_unmixed") {
    Graph c5 = cycle_graph(5);
    CHECK(!assert_unmixed(c5, VertexSet::of({0}), VertexSet::of({2})).has_value());

    CHECK_THROWS_AS(assert_unmixed(path_graph(5), VertexSet::of({0, 1}), VertexSet::of({2, 3})),
                    InvalidInput);  // not anticomplete

    // two edges plus a centre joined to one end of each force the P5
    Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {4, 0}, {4, 2}});
    auto witness = assert_unmixed(g, VertexSet::of({0, 1}), VertexSet::of({2, 3}));
    REQUIRE(witness.has_value());
    CHECK(witness->v == 4);
    CHECK(witness->p5 == std::vector<int>{1, 0, 4, 2, 3});
    // and the witness really is an induced P5
    auto sub = induced(g, VertexSet::from(witness->p5));
    CHECK(find_induced_copy(path_graph(5), sub.graph).has_value());

    // inside the P5 path itself, the ends are anticomplete and the middle
    // vertex is mixed across both edges
    auto w2 = assert_unmixed(path_graph(5), VertexSet::of({0, 1}), VertexSet::of({3, 4}));
    REQUIRE(w2.has_value());
    CHECK(w2->v == 2);
}

TEST_CASE("assert_unmixed exhaustive on a P5-free corpus") {
    Rng rng(4004);
    int done = 0;
    for (int trial = 0; done < 10 && trial < 60; ++trial) {
        Graph g;
        try {
            g = random_h_free(8, 0.5, path_graph(5), rng.next());
        } catch (const RepairExhausted&) {
            continue;
        }
        int n = g.size();
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= 3;
        for (long long code = 0; code < total; ++code) {
            long long c = code;
            VertexSet a, b;
            for (int v = 0; v < n; ++v) {
                int dig = int(c % 3);
                c /= 3;
                if (dig == 1) a.add(v);
                if (dig == 2) b.add(v);
            }
            if (a.empty() || b.empty()) continue;
            if (!is_anticomplete_between(g, a, b)) continue;
            CHECK(!assert_unmixed(g, a, b).has_value());
        }
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("terminal partition base") {
    Graph c5 = cycle_graph(5);
    TerminalPartition tp = terminal_partition(c5, Rat(0));
    CHECK(tp.a.empty());
    CHECK(tp.b.empty());
    CHECK(tp.d == c5.vertices());
    CHECK(validate_terminal_partition(c5, c5.vertices(), tp).pass);

    Graph two = disjoint_union(cycle_graph(5), complete_graph(3));
    CHECK_THROWS_AS(terminal_partition(two, Rat(0)), InvalidInput);  // disconnected
    CHECK_THROWS_AS(terminal_partition(path_graph(5), Rat(0)), NotHFree);
}

TEST_CASE("terminal partition on the stress family core") {
    Graph g = c5_join_power(2);
    ControlledSubgraph cs = controlled_subgraph(g, clique_number(g));
    TerminalPartition tp = terminal_partition(g, cs.subgraph, Rat(1));
    CHECK(validate_terminal_partition(g, cs.subgraph, tp).pass);
}

TEST_CASE("terminal_complete_pair with a fixed supplier") {
    Graph c5 = cycle_graph(5);
    AntiSupplier supplier = [](VertexSet) -> std::variant<std::pair<VertexSet, VertexSet>,
                                                          SupplierEscape, std::monostate> {
        return std::pair<VertexSet, VertexSet>{VertexSet::of({0}), VertexSet::of({2})};
    };
    TerminalPairResult res = terminal_complete_pair(c5, Rat(1), supplier);
    REQUIRE(std::holds_alternative<CompletePairOutcome>(res));
    const auto& cp = std::get<CompletePairOutcome>(res);
    CHECK(is_complete_between(c5, cp.a, cp.b));
    CHECK(chromatic_number(c5, cp.b) >= 1);
    CHECK(validate_complete_pair_bounds(c5, cp, Rat(3, 16), Rat(1)).pass);
}

TEST_CASE("terminal_complete_pair with a covering-based supplier") {
    Graph g = join(cycle_graph(5), cycle_graph(5));
    AntiSupplier supplier = [&](VertexSet c) -> std::variant<std::pair<VertexSet, VertexSet>,
                                                             SupplierEscape, std::monostate> {
        InducedGraph sub = induced(g, c);
        if (is_clique(g, c) || clique_number(sub.graph) < 2) return std::monostate{};
        CoveringResult res = covering_blockade(sub.graph, 1);
        VertexSet pa, pb;
        if (auto* pr = std::get_if<AnticompletePairOutcome>(&res)) {
            pa = pr->a;
            pb = pr->b;
        } else {
            const auto& cb = std::get<CoveringBlockadeOutcome>(res);
            pa = cb.d.back();
            pb = cb.e;
        }
        VertexSet oa, ob;
        pa.for_each([&](int v) { oa.add(sub.to_parent[size_t(v)]); });
        pb.for_each([&](int v) { ob.add(sub.to_parent[size_t(v)]); });
        return std::pair<VertexSet, VertexSet>{oa, ob};
    };
    TerminalPairResult res = terminal_complete_pair(g, Rat(1), supplier);
    REQUIRE(std::holds_alternative<CompletePairOutcome>(res));
    const auto& cp = std::get<CompletePairOutcome>(res);
    Rat need_a = Rat(chromatic_number(g)) / Rat(ipow(Int(clique_number(g)), 4));
    CHECK(validate_complete_pair_bounds(g, cp, need_a, Rat(1)).pass);
}

TEST_CASE("terminal_complete_pair supplier failure surfaces") {
    Graph k4 = complete_graph(4);
    AntiSupplier supplier = [](VertexSet) -> std::variant<std::pair<VertexSet, VertexSet>,
                                                          SupplierEscape, std::monostate> {
        return std::monostate{};
    };
    CHECK_THROWS_AS(terminal_complete_pair(k4, Rat(1), supplier), SupplierFailure);
}

TEST_CASE("nonneighbour_cover degenerate and error paths") {
    Graph g = join(edgeless_graph(2), edgeless_graph(3));  // K_{2,3}
    P5Params params;
    // P complete to Q: T empty
    VertexSet p = VertexSet::of({0, 1});
    VertexSet q = VertexSet::of({2, 3, 4});
    auto nc = nonneighbour_cover(g, p, q, params);
    CHECK(nc.t.empty());
    CHECK(nc.bound_holds);

    // precondition violation carries the witness vertex
    Graph c5 = cycle_graph(5);
    CHECK_THROWS_WITH_AS(
        nonneighbour_cover(c5, VertexSet::of({1}), VertexSet::of({3, 4}), params),
        doctest::Contains("precondition fails"), InvalidInput);
}

TEST_CASE("nonneighbour_cover core machinery with an explicit threshold") {
    // K_{3,3} plus a pendant on the Q side: every P vertex misses exactly one
    // Q vertex after the tweak
    Graph g = Graph::from_edges(7, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                    {2, 3}, {2, 4}, {2, 5}, {5, 6}});
    P5Params params;
    VertexSet p = VertexSet::of({0, 1, 2});
    VertexSet q = VertexSet::of({3, 4, 5, 6});
    // chi(Q \ N(u)) = 1 for u in P (only vertex 6 is missed); threshold 1/2 of chi(Q)
    auto nc = nonneighbour_cover_core(g, p, q, Rat(chromatic_number(g, q), 2), params);
    CHECK(nc.t == VertexSet::of({6}));
    CHECK(nc.cover.count() == 1);
    CHECK(nc.alpha_cover <= clique_number(g));
    CHECK(nc.z.size() == 1);
    CHECK(nc.z[0] == 6);
}

TEST_CASE("colourful_check") {
    CHECK(!colourful_check(complete_graph(4), Rat(1, 100)).has_value());
    auto bad = colourful_check(cycle_graph(5), Rat(1, 2));
    REQUIRE(bad.has_value());
    CHECK(*bad == 0);
    CHECK(colourful_check(edgeless_graph(3), Rat(1)).has_value());
}

TEST_CASE("colourful_complete_pair") {
    Graph k4 = complete_graph(4);
    CompletePairOutcome out = colourful_complete_pair(k4, Rat(1, 2));
    CHECK(validate_colourful_pair(k4, Rat(1, 2), out).pass);

    CHECK_THROWS_AS(colourful_complete_pair(cycle_graph(5), Rat(1, 2)), InvalidInput);

    Graph jj = join(cycle_graph(5), cycle_graph(5));
    REQUIRE(!colourful_check(jj, Rat(3, 4)).has_value());
    CompletePairOutcome out2 = colourful_complete_pair(jj, Rat(3, 4));
    CHECK(validate_colourful_pair(jj, Rat(3, 4), out2).pass);
    // the pipeline finds a genuinely non-trivial pair here
    CHECK(2 * chromatic_number(jj, out2.b) >= 2);
}

TEST_CASE("linanti on complete and small graphs") {
    P5Params params;
    Graph k4 = complete_graph(4);
    LinantiResult res = linanti(k4, Rat(1, 4), params);
    REQUIRE(std::holds_alternative<ColourfulSubgraphOutcome>(res.outcome));
    CHECK(std::get<ColourfulSubgraphOutcome>(res.outcome).j == k4.vertices());
    CHECK(validate_linanti(k4, Rat(1, 4), params, res).pass);

    Graph c5 = cycle_graph(5);
    LinantiResult res2 = linanti(c5, Rat(1, 4), params);
    CHECK(validate_linanti(c5, Rat(1, 4), params, res2).pass);

    CHECK_THROWS_AS(linanti(path_graph(5), Rat(1, 4), params), NotHFree);
    CHECK_THROWS_AS(linanti(k4, Rat(1, 2), params), InvalidInput);  // eps open interval
}

TEST_CASE("linanti across a P5-free corpus") {
    P5Params params;
    Rng rng(31415);
    int done = 0;
    for (int trial = 0; done < 20 && trial < 120; ++trial) {
        Graph g;
        try {
            g = random_h_free(5 + int(rng.below(9)), 0.5, path_graph(5), rng.next());
        } catch (const RepairExhausted&) {
            continue;
        }
        if (clique_number(g) < 2) continue;
        for (Rat eps : {Rat(1, 4), Rat(2, 5)}) {
            LinantiResult res = linanti(g, eps, params);
            CHECK(validate_linanti(g, eps, params, res).pass);
        }
        ++done;
    }
    CHECK(done == 20);
}

TEST_CASE("locdense") {
    P5Params params;
    Graph k5 = complete_graph(5);
    LocdenseResult res = locdense(k5, Rat(1, 4), params);
    REQUIRE(std::holds_alternative<ColourfulSubgraphOutcome>(res.outcome));
    CHECK(std::get<ColourfulSubgraphOutcome>(res.outcome).j == k5.vertices());

    Graph jj = join(cycle_graph(5), cycle_graph(5));
    LocdenseResult res2 = locdense(jj, Rat(1, 3), params);
    CHECK(validate_locdense(jj, Rat(1, 3), params, res2).pass);

    Graph g = c5_join_power(2);
    LocdenseResult res3 = locdense(g, Rat(1, 3), params);
    CHECK(validate_locdense(g, Rat(1, 3), params, res3).pass);
}

TEST_CASE("p5_complete_pair") {
    P5Params params;
    Graph c5 = cycle_graph(5);
    CompletePairOutcome out = p5_complete_pair(c5, params);
    CHECK(validate_p5_pair(c5, params, out).pass);
    CHECK(out.degenerate);  // chi = 3 < w^40

    Graph jj = join(cycle_graph(5), cycle_graph(5));
    CompletePairOutcome out2 = p5_complete_pair(jj, params);
    CHECK(validate_p5_pair(jj, params, out2).pass);

    CHECK_THROWS_AS(p5_complete_pair(edgeless_graph(4), params), InvalidInput);
}

TEST_CASE("p5_chi_bound") {
    P5Params params;
    CHECK_THROWS_AS(p5_chi_bound(cycle_graph(5), params), InvalidInput);  // omega = 2

    Graph g = join(cycle_graph(5), join(cycle_graph(5), cycle_graph(5)));
    ChiBoundResult res = p5_chi_bound(g, params);
    CHECK(res.branch == "gyarfas-small-omega");
    CHECK(res.colouring.count == 9);
    CHECK(res.small_branch_bound == ipow(Int(3), 6));
    CHECK(validate_p5_chi(g, params, res).pass);

    Graph g3 = c5_join_power(3);
    ChiBoundResult res3 = p5_chi_bound(g3, params);
    CHECK(res3.colouring.count == 9);
    CHECK(validate_p5_chi(g3, params, res3).pass);

    // the large-omega branch: a clique on 17 vertices, and a non-complete
    // variant with a pendant vertex
    Graph k17 = complete_graph(17);
    ChiBoundResult res17 = p5_chi_bound(k17, params);
    CHECK(res17.colouring.count == 17);
    CHECK(res17.branch.rfind("blockade-descent", 0) == 0);
    CHECK(validate_p5_chi(k17, params, res17).pass);

    auto es = complete_graph(17).edges();
    es.emplace_back(0, 17);
    Graph k17p = Graph::from_edges(18, es);
    ChiBoundResult resp = p5_chi_bound(k17p, params);
    CHECK(resp.colouring.count == 17);
    CHECK(validate_p5_chi(k17p, params, resp).pass);
}

TEST_CASE("p5 params derivation") {
    P5Params p;
    CHECK(p.mid_d() == 6);
    CHECK(p.linanti_b() == 12);
    CHECK(p.locdense_a() == 14);
    CHECK(p.main_b() == 40);
    CHECK(p.chi_d() == 80);
    P5Params bad;
    bad.eh_a = 3;
    CHECK_THROWS_AS(bad.check(), InvalidInput);
}
