#include "purepairs/oracles.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/rng.hpp"

#include "naive_oracles.hpp"

#include <doctest.h>

using namespace purepairs;

TEST_CASE("chromatic number on the named graphs") {
    // the subset DP is the pre-build oracle; cross-check it first
    Graph pet = petersen_graph();
    auto dp = chi_all_subsets(pet);
    CHECK(int(dp[(1u << 10) - 1]) == 3);
    CHECK(chromatic_number(pet) == 3);

    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(edgeless_graph(6)) == 1);
    CHECK(chromatic_number(Graph()) == 0);

    Colouring col = chromatic_colouring(pet);
    CHECK(col.proper(pet));
    CHECK(col.count == 3);
    CHECK(col.colours_used() == 3);
}

TEST_CASE("branch and bound agrees with the subset DP") {
    Rng rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + int(rng.below(11));
        Graph g = gnp(n, 0.2 + 0.6 * (trial % 3) / 2.0, rng.next());
        auto dp = chi_all_subsets(g);
        CHECK(chromatic_number(g) == int(dp[(size_t(1) << n) - 1]));
        // spot-check a few subsets
        for (int s = 0; s < 4; ++s) {
            std::uint64_t mask = rng.next() & g.vertices().bits();
            CHECK(chromatic_number(g, VertexSet(mask)) == int(dp[mask]));
        }
    }
}

TEST_CASE("failed (chi-1)-colouring obstruction") {
    Graph pet = petersen_graph();
    CHECK(colourable_with(pet, pet.vertices(), 3));
    CHECK(!colourable_with(pet, pet.vertices(), 2));
}

TEST_CASE("clique and stability") {
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(complete_graph(4)) == 4);
    CHECK(clique_number(join(cycle_graph(5), cycle_graph(5))) == 4);
    CHECK(stability_number(cycle_graph(5), cycle_graph(5).vertices()) == 2);
    CHECK(stability_number(complete_graph(4), complete_graph(4).vertices()) == 1);
    CHECK(stability_number(edgeless_graph(7), edgeless_graph(7).vertices()) == 7);

    Graph c5 = cycle_graph(5);
    VertexSet mc = max_clique(c5);
    CHECK(mc.count() == 2);
    CHECK(is_clique(c5, mc));
    CHECK(mc == VertexSet::of({0, 1}));  // lexicographically least
    auto st = stable_set_of_size(c5, c5.vertices(), 2);
    REQUIRE(st.has_value());
    CHECK(is_stable_set(c5, *st));
    CHECK(*st == VertexSet::of({0, 2}));
    CHECK(!stable_set_of_size(c5, c5.vertices(), 3).has_value());
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(path_graph(6)).degeneracy == 1);
    CHECK(degeneracy(cycle_graph(5)).degeneracy == 2);
    CHECK(degeneracy(complete_graph(4)).degeneracy == 3);
    Graph star = double_star_graph(3, 1);  // tree
    CHECK(degeneracy(star).degeneracy == 1);
    // chi <= degeneracy + 1
    Rng rng(88);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = gnp(9, 0.5, rng.next());
        CHECK(chromatic_number(g) <= degeneracy(g).degeneracy + 1);
    }
}

TEST_CASE("find_induced_copy on the named cases") {
    Graph p5 = path_graph(5), c5 = cycle_graph(5), c6 = cycle_graph(6);
    CHECK(!find_induced_copy(p5, c5).has_value());
    CHECK(testing::naive_all_copies(p5, c5).empty());
    auto phi = find_induced_copy(p5, c6);
    REQUIRE(phi.has_value());
    // exactly 6 copies up to the path's reversal symmetry = 12 embeddings
    CHECK(testing::naive_all_copies(p5, c6).size() == 12);
    Graph k3 = complete_graph(3);
    auto id = find_induced_copy(k3, k3);
    REQUIRE(id.has_value());
    CHECK(is_clique(k3, VertexSet::from(*id)));
}

TEST_CASE("find_induced_copy with anchors") {
    Graph k2 = complete_graph(2);
    Graph c5 = cycle_graph(5);
    std::vector<VertexSet> anchors{VertexSet::of({0}), VertexSet::of({1, 2})};
    auto phi = find_induced_copy(k2, c5, anchors);
    REQUIRE(phi.has_value());
    CHECK((*phi)[0] == 0);
    CHECK((*phi)[1] == 1);
    std::vector<VertexSet> overlap{VertexSet::of({0, 1}), VertexSet::of({1, 2})};
    CHECK_THROWS_AS(find_induced_copy(k2, c5, overlap), InvalidInput);
}

TEST_CASE("is_h_free cases") {
    CHECK(is_h_free(cycle_graph(5), path_graph(5)));
    CHECK(is_h_free(complete_multipartite_graph({3, 3}), path_graph(4)));
    CHECK(!is_h_free(path_graph(5), path_graph(5)));
}

TEST_CASE("copy search agrees with the naive oracle") {
    Rng rng(31337);
    std::vector<Graph> patterns{path_graph(4), path_graph(5), complete_graph(3),
                                cycle_graph(4), broom_graph(3, 2)};
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = gnp(3 + int(rng.below(7)), 0.5, rng.next());
        for (const Graph& h : patterns) {
            CHECK(find_induced_copy(h, g).has_value() == testing::naive_has_copy(h, g));
        }
    }
}

TEST_CASE("ramsey table") {
    CHECK(ramsey(2, 7) == 7);
    CHECK(ramsey(7, 2) == 7);
    CHECK(ramsey(1, 5) == 1);
    CHECK(ramsey(3, 3) == 6);
    CHECK(ramsey(3, 4) == 9);
    CHECK(ramsey(4, 4) == 18);
    CHECK(ramsey(4, 5) == 25);
    CHECK(ramsey_is_exact(3, 5));
    CHECK(!ramsey_is_exact(5, 5));
    // fallback respects the w^t bound
    for (int t = 2; t <= 5; ++t)
        for (int w = 2; w <= 6; ++w) CHECK(Int(ramsey(t, w)) <= ipow(Int(w), unsigned(t)));
}

TEST_CASE("ramsey fallback dominates the table where both are defined") {
    auto fallback = [](int t, int w) {
        Int binom = 1;
        for (int i = 1; i <= t - 1; ++i) {
            binom *= (t + w - 2) - (t - 1) + i;
            binom /= i;
        }
        return std::min(binom, ipow(Int(w), unsigned(t)));
    };
    for (auto [t, w] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{3, 5}, std::pair{3, 6},
                        std::pair{3, 7}, std::pair{4, 4}, std::pair{4, 5}}) {
        CHECK(ramsey_is_exact(t, w));
        CHECK(fallback(t, w) >= Int(ramsey(t, w)));
    }
}

TEST_CASE("rational log bounds") {
    for (int x : {2, 3, 5, 16, 17, 40}) {
        Log2Bounds b = log2_bounds(Rat(x));
        CHECK(b.lo <= b.hi);
        // 2^lo <= x <= 2^hi, checked through integer powers of the bounds
        Int num = numerator(b.lo), den = denominator(b.lo);
        CHECK(ipow(Int(2), unsigned(num.convert_to<long>())) <=
              ipow(Int(x), unsigned(den.convert_to<long>())));
    }
}

TEST_CASE("ramsey exhaustive verification for small values") {
    // R(t,w) = v iff some (v-1)-vertex graph avoids both, no v-vertex graph does
    auto verify = [](int t, int w, long long v) {
        CHECK(exists_ramsey_avoiding_graph(int(v) - 1, t, w));
        CHECK(!exists_ramsey_avoiding_graph(int(v), t, w));
    };
    verify(3, 3, 6);
    verify(3, 4, 9);
    for (int w = 2; w <= 8; ++w) verify(2, w, w);
    for (int t = 2; t <= 8; ++t) verify(t, 2, t);
}

TEST_CASE("chi omega alpha consistency") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + int(rng.below(12));
        Graph g = gnp(n, 0.15 + 0.7 * (trial % 4) / 3.0, rng.next());
        int chi = chromatic_number(g), om = clique_number(g),
            al = stability_number(g, g.vertices());
        CHECK(chi >= om);
        CHECK(chi * al >= n);
        CHECK(chi <= degeneracy(g).degeneracy + 1);
    }
}

TEST_CASE("submeasure axioms") {
    Graph c5 = cycle_graph(5);
    CHECK(submeasure_axiom_check(Submeasure::chromatic(), c5, 200, 7).passed);
    Graph g = gnp(8, 0.5, 99);
    CHECK(submeasure_axiom_check(Submeasure::cardinality(), g, 200, 7).passed);
    Submeasure broken{"negcard", [](const Graph&, VertexSet s) { return Rat(-s.count()); }};
    auto rep = submeasure_axiom_check(broken, c5, 50, 7);
    CHECK(!rep.passed);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().axiom == "mu(singleton)=1");
}

TEST_CASE("chromatic submeasure really is one on random graphs") {
    Rng rng(404);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = gnp(8, 0.5, rng.next());
        CHECK(submeasure_axiom_check(Submeasure::chromatic(), g, 100, trial).passed);
    }
}
