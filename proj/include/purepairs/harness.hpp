#pragma once

#include "purepairs/extract_p5.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/validate.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace purepairs {

using Json = nlohmann::json;

struct CampaignConfig {
    std::string lemma;
    std::vector<GeneratorSpec> generators;
    int samples_per_spec = 100;
    std::uint64_t seed = 1;
    int max_n = 12;
    int t = 1;
    int k = 1;
    Rat eps = Rat(1, 3);
    std::string h = "P5";  // excluded subgraph for the submeasure lemmas
    P5Params params;
    int workers = 1;
    std::string out_path;
};

struct SampleRecord {
    int index = 0;
    std::uint64_t seed = 0;
    std::string graph6;
    std::string outcome_tag;
    std::string outcome;          // serialized outcome fields (deterministic)
    bool pass = false;
    bool degenerate = false;
    bool skipped = false;
    std::string fail_reason;
    std::vector<std::string> margins;  // "name=p/q"
};

struct CampaignReport {
    int version = 1;
    CampaignConfig config;
    std::vector<SampleRecord> records;
    long long pass = 0, fail = 0, skipped = 0;
    double wall_ms = 0;
};

// Known lemma ids for `verify`.
std::vector<std::string> campaign_lemmas();

CampaignReport run_campaign(const CampaignConfig& config);

// Re-runs one sample with the recorded (seed, generator); the determinism
// contract makes the outcome fields byte-identical.
SampleRecord replay(const CampaignConfig& config, const SampleRecord& record);

Json report_to_json(const CampaignReport& report);
CampaignReport report_from_json(const Json& j);

// Conjecture counterexample search: per candidate graph, the best achievable
// delta over all induced subgraphs (exhaustive, n <= 11).
struct SearchFinding {
    std::string graph6;
    Rat best_delta;
    VertexSet best_f;
};

struct SearchReport {
    std::string target;  // clful | modp5
    Rat eps;             // used by clful only
    std::vector<SearchFinding> findings;  // sorted: worst (smallest delta) first
    bool exhausted = false;
};

SearchReport search_counterexample(const std::string& target, const Rat& eps,
                                   const std::vector<Graph>& corpus);

Json search_to_json(const SearchReport& report);

// Worker-count resolution: explicit > PUREPAIRS_WORKERS env > 1.
int resolve_workers(int requested);

}  // namespace purepairs
