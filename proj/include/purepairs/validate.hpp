#pragma once

#include "purepairs/extract_basic.hpp"
#include "purepairs/extract_broom.hpp"
#include "purepairs/extract_p5.hpp"

#include <string>
#include <vector>

namespace purepairs {

// Oracle-side re-verification of extraction certificates. Everything here is
// computed from graph_core plus the exact oracles; extractor state is never
// consulted.
struct ValidationResult {
    bool pass = true;
    bool degenerate = false;
    std::vector<std::string> failures;
    std::vector<std::pair<std::string, Rat>> margins;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    void margin(const std::string& name, const Rat& value) { margins.emplace_back(name, value); }
};

ValidationResult validate_gyarfas_vertex(const Graph& g, int k, int v);
ValidationResult validate_gyarfas_bound(const Graph& g, int k, const Colouring& col,
                                        const GyarfasBoundCertificate& cert);
ValidationResult validate_min_degree_core(const Graph& g, int p, const MinDegreeCore& core);
ValidationResult validate_controlled_subgraph(const Graph& g, int q,
                                              const ControlledSubgraph& cs);
ValidationResult validate_vivid(const Graph& g, const Blockade& blockade, const Rat& eps,
                                const VividResult& res);
ValidationResult validate_near_pure(const Graph& g, const Graph& h, const Rat& eps,
                                    const Submeasure& mu, const NearPurePairOutcome& out);
ValidationResult validate_quasi(const Graph& g, const Graph& h, const Rat& eps,
                                const Submeasure& mu, const QuasiResult& res);
ValidationResult validate_tbroom_decompose(const Graph& g, int t,
                                           const TbroomDecomposition& dec);
ValidationResult validate_tbroom_colour(const Graph& g, int t, const ColouringOutcome& out);
ValidationResult validate_star(const Graph& g, VertexSet f, VertexSet a, VertexSet b, int t,
                               const Rat& q, int w, const StarResult& res);
ValidationResult validate_covering(const Graph& g, int k, const CoveringResult& res);
ValidationResult validate_broom_anti(const Graph& g, int k, int t, const BroomResult& res);
ValidationResult validate_terminal_partition(const Graph& g, VertexSet domain,
                                             const TerminalPartition& tp);
ValidationResult validate_complete_pair_bounds(const Graph& g, const CompletePairOutcome& out,
                                               const Rat& need_a, const Rat& need_b);
ValidationResult validate_linanti(const Graph& g, const Rat& eps, const P5Params& params,
                                  const LinantiResult& res);
ValidationResult validate_locdense(const Graph& g, const Rat& eps, const P5Params& params,
                                   const LocdenseResult& res);
ValidationResult validate_p5_pair(const Graph& g, const P5Params& params,
                                  const CompletePairOutcome& out);
ValidationResult validate_p5_chi(const Graph& g, const P5Params& params,
                                 const ChiBoundResult& res);
ValidationResult validate_colourful_pair(const Graph& g, const Rat& eps,
                                         const CompletePairOutcome& out);

}  // namespace purepairs
