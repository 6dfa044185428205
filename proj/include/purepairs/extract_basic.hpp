#pragma once

#include "purepairs/outcomes.hpp"

#include <optional>

namespace purepairs {

// --- Gyarfas path argument -------------------------------------------------

// Vertex v of a P_k-free graph with (k-2) * chi(N(v)) >= chi(G).
// Requires chi(G) >= 2 and k >= 4; P_k-freeness is oracle-verified first
// (NotHFree carries the path witness otherwise).
int gyarfas_vertex(const Graph& g, int k);
int gyarfas_vertex(const Graph& g, VertexSet domain, int k);

// Diagnostic path-growing procedure. Either finds a vertex with
// a (k-2)^{-1}-fraction neighbourhood or grows an induced P_k; used when the
// direct scan unexpectedly fails.
std::variant<int, std::vector<int>> gyarfas_grow_path(const Graph& g, VertexSet domain, int k);

struct GyarfasBoundCertificate {
    std::vector<int> chain;        // descent vertices v_1, v_2, ...
    std::vector<int> chain_chi;    // chi of the successive neighbourhood sets
    Int bound;                     // (k-2)^(omega-1)
};

// Proper colouring with at most (k-2)^(w-1) colours; the certificate chain
// witnesses the bound by the recursion on omega through high-chi
// neighbourhoods, the colouring itself is exact.
std::pair<Colouring, GyarfasBoundCertificate> gyarfas_colour_bound(const Graph& g, int k);

// --- Degeneracy core (chi drops by at most p) -------------------------------

struct MinDegreeCore {
    VertexSet core;               // induced subgraph F with min degree >= p
    std::vector<int> removed;     // deletion order (each had < p neighbours left)
};

MinDegreeCore min_degree_core(const Graph& g, int p);
MinDegreeCore min_degree_core(const Graph& g, VertexSet domain, int p);

// --- Controlled subgraph -----------------------------------------------------

struct ControlledSubgraph {
    VertexSet subgraph;           // connected J with chi(N_J(v)) < (1-q^-2) chi(J)
    std::vector<int> clique_trace;  // the descent clique S
};

ControlledSubgraph controlled_subgraph(const Graph& g, int q);
ControlledSubgraph controlled_subgraph(const Graph& g, VertexSet domain, int q);

bool is_q_controlled(const Graph& g, VertexSet s, int q);

// --- Vivid blockades ---------------------------------------------------------

struct NotVivid {
    int i, j, v;  // chi(B_i \ N(v)) >= eps * chi(B_i) for this v in B_j
};
struct TransversalClique {
    std::vector<int> clique;  // one vertex per block, back to front
    VividCertificate certificate;
};
struct GreedyStuck {
    std::vector<int> partial;
    int block;  // can only occur when eps > 1/omega(G)
};

using VividResult = std::variant<TransversalClique, NotVivid, GreedyStuck>;

VividResult vivid_clique(const Graph& g, const Blockade& blockade, const Rat& eps);

// Pure vividity test; first violating (i, j, v) in lexicographic order.
std::optional<NotVivid> vivid_violation(const Graph& g, const Blockade& blockade, const Rat& eps);

// --- Erdos-Hajnal submeasure recursion ---------------------------------------

using EhResult = std::variant<InducedCopyOutcome, NearPurePairOutcome>;

// Lemma-style recursion on |H|: anchored copy, or indices i<j with subsets
// (D_i, D_j) of (A_i, A_j), mu(D) >= eps^(h-2) mu(A), one side eps-sparse or
// (1-eps)-dense to the other. The returned NearPurePairOutcome has
// a = the measured set D_j and b = the quantified set D_i.
EhResult eh_step(const Graph& g, const Graph& h, const Rat& eps, const Submeasure& mu,
                 const std::vector<VertexSet>& anchors);

NearPurePairOutcome near_pure_pair(const Graph& g, const Graph& h, const Rat& eps,
                                   const Submeasure& mu);
NearPurePairOutcome near_pure_pair(const Graph& g, VertexSet domain, const Graph& h,
                                   const Rat& eps, const Submeasure& mu);

using QuasiResult = std::variant<StableSetOutcome, NearPurePairOutcome>;

// Doubling iteration with clique-number budget w; stable set or sparse-direction
// near-pure pair, both with mu >= eps^(2|H| m) mu(G) for the achieved level m
// (m <= floor(log2 w), so the certificate implies the eps^(2|H| log w) bound).
QuasiResult quasi_pure(const Graph& g, const Graph& h, const Rat& eps, const Submeasure& mu);

}  // namespace purepairs
