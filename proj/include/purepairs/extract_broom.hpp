#pragma once

#include "purepairs/extract_basic.hpp"
#include "purepairs/outcomes.hpp"

namespace purepairs {

// --- t-broom decomposition and colouring -------------------------------------

struct TbroomDecomposition {
    VertexSet s, p;
    long long ramsey_tw = 0;            // R(t, omega(G))
    std::vector<int> degeneracy_in_s;   // degeneracy of G[P \ N(u)] per u in S (ascending u)
    std::vector<int> chi_p_minus_n;     // chi(P \ N(u)) per u in S (ascending u)
    bool complete_case = false;
};

// Nonempty disjoint S, P with chi(G) <= chi(S) + chi(P), omega * chi(P) >= chi(G),
// and chi(P \ N(u)) <= 2 R(t,omega) - 1 for every u in S; the certificate also
// carries the degeneracy bound 2(R(t,omega)-1) per u.
TbroomDecomposition tbroom_decompose(const Graph& g, int t);

// Proper colouring with at most 2 omega^2 R(t, omega) colours.
ColouringOutcome tbroom_colour(const Graph& g, int t);

// --- star lemma ---------------------------------------------------------------

struct StarPairXY {
    VertexSet x, y;
    int omega_x = 0, omega_y = 0;
};
struct StarAnticompleteStable {
    VertexSet p;  // stable, |p| = t, inside A
    VertexSet q;  // subset of B anticomplete to p
};
using StarResult = std::variant<StarPairXY, StarAnticompleteStable>;

// Within g[f]: either (X,Y) with omega(X)+omega(Y) <= omega(F), |A\X| < w^(t+2),
// chi(B\Y) < q, or an anticomplete (P,Q) with P stable of size t and
// chi(Q) >= w^(-t(t+2)) q.
StarResult star_step(const Graph& g, VertexSet f, VertexSet a, VertexSet b, int t, const Rat& q,
                     int w);

// --- covering blockades --------------------------------------------------------

struct CoveringBlockadeOutcome {
    std::vector<VertexSet> d;  // D_1 .. D_k
    VertexSet e;
    int w = 0;                 // clique number used at construction
    bool degenerate = false;
    // downstream covering-property queries answered on this blockade
    struct Query {
        VertexSet y;
        int chi_bad = 0;
        int chi_dk = 0;
    };
    std::vector<Query> queries;
};

using CoveringResult = std::variant<AnticompletePairOutcome, CoveringBlockadeOutcome>;

// Anticomplete pair with chi >= w^(-8k) chi(G) on both sides, or a k-covering
// blockade with chi(D_k), chi(E) >= w^(-6k) chi(G) (degenerate thresholds
// flagged). Complete input is rejected.
CoveringResult covering_blockade(const Graph& g, int k);

// The covering property queried at X = D_k: the set of u in D_k with
// chi(Y \ N(u)) < w^-1 chi(Y) has chi < (1 - w^-2) chi(D_k). Records the query.
// Requires chi(Y) >= w^-3 chi(E).
bool covering_query_holds(const Graph& g, CoveringBlockadeOutcome& cb, VertexSet y);

// Definitional helpers shared with the validator.
VertexSet covering_bad_set(const Graph& g, VertexSet d, VertexSet y, int w);
bool covering_q_form_holds(const Graph& g, VertexSet d, VertexSet y, int w);
// Deterministic sampled Ys (chi(Y) >= w^-3 chi(E)); seed derived from the
// graph signature so construction-time and validation-time checks coincide.
std::vector<VertexSet> covering_sample_ys(const Graph& g, VertexSet e, int w, int count);

// Structural validation of the blockade bullets; sampled covering-property
// checks happen in validate.cpp.
void check_covering_structure(const Graph& g, const CoveringBlockadeOutcome& cb);

// --- anticomplete pairs vs (k,t)-brooms ----------------------------------------

using BroomResult = std::variant<AnticompletePairOutcome, BroomPairOutcome>;

// Top-level dichotomy with exponent d = 6k + t(t+2) + 9.
BroomResult broom_or_anticomplete(const Graph& g, int k, int t);

inline int broom_exponent(int k, int t) { return 6 * k + t * (t + 2) + 9; }

}  // namespace purepairs
