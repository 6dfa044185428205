#pragma once

#include "purepairs/graph.hpp"
#include "purepairs/oracles.hpp"
#include "purepairs/rational.hpp"

#include <string>
#include <variant>
#include <vector>

namespace purepairs {

// Ordered sequence of pairwise-disjoint blocks.
struct Blockade {
    std::vector<VertexSet> blocks;

    void check(const Graph& g) const {
        std::uint64_t seen = 0;
        for (const auto& b : blocks) {
            if (!b.subset_of(g.vertices())) throw InvalidInput("blockade: block outside V(G)");
            if (b.bits() & seen) throw InvalidInput("blockade: blocks overlap");
            seen |= b.bits();
        }
    }
};

// One recorded margin of an eps-vivid blockade: chi(B_i \ N(v)) vs eps*chi(B_i).
struct VividMargin {
    int i, j, v;
    int chi_nonneighbours;
    Rat threshold;
};

struct VividCertificate {
    Blockade blockade;
    Rat eps;
    std::vector<VividMargin> margins;  // all pairs (i < j, v in B_j)
};

struct CompletePairOutcome {
    VertexSet a, b;
    bool degenerate = false;
};

struct AnticompletePairOutcome {
    VertexSet a, b;
    bool degenerate = false;
};

struct InducedCopyOutcome {
    std::vector<int> map;  // H-vertex i -> G-vertex
};

struct StableSetOutcome {
    VertexSet set;
    Rat bound;          // certified lower bound on mu(set)
    int exponent = 0;   // integer exponent actually achieved (eps^exponent factor)
};

enum class PureDirection { Sparse, Dense };

struct NearPurePairOutcome {
    VertexSet a, b;  // for every v in b, mu(a cap N(v)) (sparse) resp.
                     // mu(a minus N(v)) (dense) is < eps * mu(a)
    PureDirection direction = PureDirection::Sparse;
    Rat bound;       // certified lower bound on mu(a), mu(b)
    int exponent = 0;
    int depth = 0;   // recursion depth used
    int anchor_i = -1, anchor_j = -1;  // originating anchor indices (eh_step)
    bool degenerate = false;
};

struct ColourfulSubgraphOutcome {
    VertexSet j;
    Rat eps;
    bool degenerate = false;
};

struct ColouringOutcome {
    Colouring colouring;
    Int bound;  // certified upper bound on the colour count
    std::string branch;
};

struct BroomPairOutcome {
    VertexSet broom;   // induces a (k,t)-broom
    VertexSet q;
    std::vector<int> handle;  // the path part, in order
    VertexSet fan;            // the independent end
    bool degenerate = false;
};

struct DecompositionSPOutcome {
    VertexSet s, p;
    long long ramsey_bound = 0;  // R(t,w) used in the certificates
    bool degenerate = false;
};

struct CoveringBlockadeOutcome;  // defined in extract_broom.hpp

using ExtractionOutcome =
    std::variant<CompletePairOutcome, AnticompletePairOutcome, InducedCopyOutcome,
                 StableSetOutcome, NearPurePairOutcome, ColourfulSubgraphOutcome,
                 ColouringOutcome, BroomPairOutcome, DecompositionSPOutcome>;

// A recorded claim-chain entry: inequality text, exact values, satisfied flag.
struct TraceEntry {
    std::string claim;
    std::string detail;
    bool satisfied = true;
};

using Trace = std::vector<TraceEntry>;

// Raised when a scale-free structural fact fails (would imply the input is
// not in the promised class, or an implementation fault); carries the trace.
struct ClaimViolation : std::runtime_error {
    Trace trace;
    explicit ClaimViolation(const std::string& what, Trace tr = {})
        : std::runtime_error(what), trace(std::move(tr)) {}
};

struct NotHFree : std::runtime_error {
    std::vector<int> copy;
    NotHFree(const std::string& what, std::vector<int> c)
        : std::runtime_error(what), copy(std::move(c)) {}
};

struct SupplierFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace purepairs
