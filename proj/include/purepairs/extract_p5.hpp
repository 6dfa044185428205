#pragma once

#include "purepairs/extract_basic.hpp"
#include "purepairs/outcomes.hpp"

#include <functional>

namespace purepairs {

// Exponent bookkeeping for the P5 pipeline. eh_a is the Erdos-Hajnal exponent
// (a runtime parameter, >= 4); the remaining exponents are derived.
struct P5Params {
    int eh_a = 4;

    int mid_d() const { return eh_a + 2; }            // nonneighbour cover
    int linanti_b() const { return mid_d() + 6; }     // three-way dichotomy
    int locdense_a() const { return linanti_b() + 2; }  // colourful-or-complete
    int main_b() const { return std::max(locdense_a(), 40); }  // complete-pair theorem
    int chi_d() const { return 2 * main_b(); }        // chi bound recursion

    void check() const {
        if (eh_a < 4) throw InvalidInput("P5Params: eh_a >= 4 required");
    }
};

// --- mixed-vertex lemma ---------------------------------------------------------

struct MixedWitness {
    int v;
    std::array<int, 2> a_edge;  // edge of G[A], first endpoint adjacent to v
    std::array<int, 2> b_edge;  // edge of G[B], first endpoint adjacent to v
    std::vector<int> p5;        // the induced path a2-a1-v-b1-b2
};

// For an anticomplete nonempty pair (A,B): confirms no vertex is mixed across
// an edge of both sides, or returns the witnessing induced P5.
std::optional<MixedWitness> assert_unmixed(const Graph& g, VertexSet a, VertexSet b);

// --- terminal partitions ----------------------------------------------------------

struct TerminalPartition {
    std::vector<VertexSet> a;   // A_1..A_k
    VertexSet b, d;
    Rat p;
    int w = 0;
    std::vector<VertexSet> b_i;  // B-vertices with a neighbour in A_i
};

// Validates the five defining bullets exactly (throws ClaimViolation).
void check_terminal_partition(const Graph& g, VertexSet domain, const TerminalPartition& tp);
// The concentration certificate: unique component of G[D] with
// chi >= (1 - w^-2) chi(G) and chi(D) >= (1 - w^-3) chi(G).
VertexSet terminal_concentration(const Graph& g, VertexSet domain, const TerminalPartition& tp);

// Base p-terminal partition (k = 0) of a connected, controlled, P5-free graph;
// the extension steps live inside terminal_complete_pair and linanti.
// w_bound is the clique bound the thresholds are measured against (defaults
// to max(omega(domain), 2), the exact clique number).
TerminalPartition terminal_partition(const Graph& g, const Rat& p);
TerminalPartition terminal_partition(const Graph& g, VertexSet domain, const Rat& p,
                                     int w_bound = -1);

// Callback supplying an anticomplete pair with chi >= p on both sides inside
// any induced F with chi(F) >= (1 - w^-3) chi(G); may fail (nullopt) or
// escape with a finished outcome of the calling lemma.
struct SupplierEscape {
    ExtractionOutcome outcome;
};
using AntiSupplier = std::function<std::variant<std::pair<VertexSet, VertexSet>, SupplierEscape,
                                                std::monostate>(VertexSet)>;

using TerminalPairResult = std::variant<CompletePairOutcome, SupplierEscape>;

// Complete pair with w^4 chi(A) >= chi(G) and chi(B) >= p, by extending a
// p-terminal partition until one of the complete-pair exits fires.
TerminalPairResult terminal_complete_pair(const Graph& g, const Rat& p,
                                          const AntiSupplier& supplier);
TerminalPairResult terminal_complete_pair(const Graph& g, VertexSet domain, const Rat& p,
                                          const AntiSupplier& supplier, int w_bound = -1);

// --- Erdos-Hajnal-powered nonneighbour cover ---------------------------------------

struct NonneighbourCover {
    VertexSet t;          // vertices of Q with a nonneighbour in P
    VertexSet cover;      // minimal S <= P with T = union of T_u
    std::vector<int> z;   // per cover vertex: private witness in its T_u
    int alpha_cover = 0;
    bool bound_holds = false;   // chi(T) <= w^-2 chi(Q)
    bool eh_violation = false;  // |S| > w^eh_a
};

NonneighbourCover nonneighbour_cover(const Graph& g, VertexSet p, VertexSet q,
                                     const P5Params& params);
// Core with an explicit threshold in place of w^-d chi(Q) (exposed for tests).
NonneighbourCover nonneighbour_cover_core(const Graph& g, VertexSet p, VertexSet q,
                                          const Rat& threshold, const P5Params& params);

// --- colourful subgraphs -------------------------------------------------------------

// ok (nullopt) iff chi(G \ N[v]) < eps chi(G) for every vertex; else the first
// violating vertex.
std::optional<int> colourful_check(const Graph& g, const Rat& eps);
std::optional<int> colourful_check(const Graph& g, VertexSet domain, const Rat& eps);

// Complete pair with w^32 chi(A) >= chi(G) and 2 chi(B) >= (1-eps) chi(G) in an
// eps-colourful P5-free graph.
CompletePairOutcome colourful_complete_pair(const Graph& g, const Rat& eps);

// --- the three-way and two-way dichotomies -------------------------------------------

struct LinantiResult {
    std::variant<ColourfulSubgraphOutcome, AnticompletePairOutcome, CompletePairOutcome> outcome;
    Trace trace;
};

LinantiResult linanti(const Graph& g, const Rat& eps, const P5Params& params);
LinantiResult linanti(const Graph& g, VertexSet domain, const Rat& eps, const P5Params& params);

struct LocdenseResult {
    std::variant<ColourfulSubgraphOutcome, CompletePairOutcome> outcome;
    Trace trace;
};

LocdenseResult locdense(const Graph& g, const Rat& eps, const P5Params& params);

// Complete pair with w^b chi(A) >= chi(G) and 2^b chi(B) >= chi(G).
CompletePairOutcome p5_complete_pair(const Graph& g, const P5Params& params);

// Proper colouring plus the w^(d log w / log log w) certificate (rational
// envelope; never floating logs). Requires omega >= 3.
struct ChiBoundResult {
    Colouring colouring;
    Int certificate;
    std::string branch;
    Int small_branch_bound;  // 3^w when the small-omega branch ran, else 0
};

ChiBoundResult p5_chi_bound(const Graph& g, const P5Params& params);

}  // namespace purepairs
