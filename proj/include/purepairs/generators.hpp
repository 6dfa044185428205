#pragma once

#include "purepairs/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace purepairs {

Graph gnp(int n, double p, std::uint64_t seed);

struct RepairExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// H-free instance supply: sample G(n,p), then repeatedly locate an induced
// copy of H and toggle a uniformly chosen pair of it until no copy remains.
// The result is re-verified by is_h_free before return; RepairExhausted
// signals that max_rounds ran out (caller may retry with a fresh seed).
Graph random_h_free(int n, double p, const Graph& h, std::uint64_t seed, int max_rounds = 600);

// Named small graphs and parametric families.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph petersen_graph();
// P_{k+1} with one end-leaf blown up to t independent vertices.
Graph broom_graph(int k, int t);
inline Graph t_broom_graph(int t) { return broom_graph(3, t); }
// P4 with both leaves blown up to independent sets of sizes a and b.
Graph double_star_graph(int a, int b);
Graph complete_multipartite_graph(const std::vector<int>& parts);
// Join of m copies of C5: P5-free, chi = 3m, omega = 2m.
Graph c5_join_power(int m);

Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

// Family tag + parameters, as used by the CLI and campaign configs.
struct GeneratorSpec {
    std::string family;  // gnp | h_free | broom | path | double_star |
                         // c5_join_power | complete_multipartite | named
    int n = 0;
    double p = 0.5;
    int k = 3, t = 1;
    int a = 1, b = 1;
    int m = 1;
    std::vector<int> parts;
    std::string h_name;  // for h_free: named graph to exclude
    std::string name;    // for named
};

Graph named_graph(const std::string& name);
Graph build_family(const GeneratorSpec& spec, std::uint64_t seed);

}  // namespace purepairs
