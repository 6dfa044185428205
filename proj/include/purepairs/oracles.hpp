#pragma once

#include "purepairs/graph.hpp"
#include "purepairs/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace purepairs {

// Proper colouring of a vertex subset: colour[v] in 0..count-1 inside the
// domain, -1 outside.
struct Colouring {
    std::vector<int> colour;
    int count = 0;
    VertexSet domain;

    bool proper(const Graph& g) const;
    int colours_used() const;
};

int clique_number(const Graph& g, VertexSet s);
inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }
// Lexicographically least maximum clique.
VertexSet max_clique(const Graph& g, VertexSet s);
inline VertexSet max_clique(const Graph& g) { return max_clique(g, g.vertices()); }

int stability_number(const Graph& g, VertexSet s);
inline int stability_number(const Graph& g) { return stability_number(g, g.vertices()); }
VertexSet max_stable_set(const Graph& g, VertexSet s);
// Lexicographically least stable set of the given size, or nullopt.
std::optional<VertexSet> stable_set_of_size(const Graph& g, VertexSet s, int size);

// Exact chromatic number of g[s] (branch and bound, memoised per graph).
int chromatic_number(const Graph& g, VertexSet s);
inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }
Colouring chromatic_colouring(const Graph& g, VertexSet s);
inline Colouring chromatic_colouring(const Graph& g) {
    return chromatic_colouring(g, g.vertices());
}
// Decision procedure: is g[s] properly colourable with at most k colours?
// Used as the failed-(chi-1)-search obstruction check.
bool colourable_with(const Graph& g, VertexSet s, int k);

// chi of every subset of V(g) by subset DP; independent of the branch-and-bound
// path. Requires |G| <= 15.
std::vector<std::uint8_t> chi_all_subsets(const Graph& g);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<int> order;  // each vertex has <= degeneracy neighbours later in the order
};
DegeneracyResult degeneracy(const Graph& g, VertexSet s);
inline DegeneracyResult degeneracy(const Graph& g) { return degeneracy(g, g.vertices()); }

// Injective induced-subgraph embedding phi : V(H) -> V(G); phi[i] constrained
// to anchors[i] when anchors are given (empty mask = unconstrained).
std::optional<std::vector<int>> find_induced_copy(const Graph& h, const Graph& g,
                                                  const std::vector<VertexSet>& anchors = {});
// Copy confined to g[domain] (no anchor-disjointness requirement).
std::optional<std::vector<int>> find_induced_copy_in(const Graph& h, const Graph& g,
                                                     VertexSet domain);
bool is_h_free(const Graph& g, const Graph& h);
bool is_h_free_in(const Graph& g, VertexSet domain, const Graph& h);

// Least n such that every n-vertex graph has a stable set of size t or a
// clique of size w; exact from the classical table where tabulated, else
// min(binom(t+w-2, t-1), w^t).
long long ramsey(int t, int w);
bool ramsey_is_exact(int t, int w);
// Search for an n-vertex graph with no stable set of size t and no clique of
// size w (exhaustive over labelled graphs, heavily pruned). Used by tests to
// verify the table.
bool exists_ramsey_avoiding_graph(int n, int t, int w);

// Monotone subadditive set function with mu(empty)=0 and mu({v})=1.
struct Submeasure {
    std::string name;
    std::function<Rat(const Graph&, VertexSet)> eval;

    Rat operator()(const Graph& g, VertexSet s) const { return eval(g, s); }

    static Submeasure chromatic();
    static Submeasure cardinality();
};

struct AxiomViolation {
    std::string axiom;
    VertexSet x, y;
    Rat value_x, value_y;
};

struct SubmeasureReport {
    bool passed = true;
    long long checks = 0;
    std::vector<AxiomViolation> violations;  // capped
};

SubmeasureReport submeasure_axiom_check(const Submeasure& mu, const Graph& g, int samples,
                                        std::uint64_t seed);

// Max-chi component of g[s] (ties: component containing the lowest vertex).
VertexSet max_chi_component(const Graph& g, VertexSet s);

}  // namespace purepairs
