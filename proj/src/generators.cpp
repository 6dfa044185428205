#include "purepairs/generators.hpp"

#include "purepairs/oracles.hpp"
#include "purepairs/rng.hpp"

#include <algorithm>

namespace purepairs {

Graph gnp(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw InvalidInput("gnp: p outside [0,1]");
    Rng rng(Rng::derive(seed, 0x6e70));
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

namespace {

Graph toggle_pair(const Graph& g, int u, int v) {
    auto es = g.edges();
    if (g.adjacent(u, v)) {
        std::erase_if(es, [&](auto e) {
            return (e.first == u && e.second == v) || (e.first == v && e.second == u);
        });
    } else {
        es.emplace_back(u, v);
    }
    return Graph::from_edges(g.size(), es);
}

}  // namespace

Graph random_h_free(int n, double p, const Graph& h, std::uint64_t seed, int max_rounds) {
    if (h.size() == 0) throw InvalidInput("random_h_free: H must be nonempty");
    Rng rng(Rng::derive(seed, 0x68f2));
    Graph g = gnp(n, p, rng.next());
    for (int round = 0; round < max_rounds; ++round) {
        auto phi = find_induced_copy(h, g);
        if (!phi) {
            if (!is_h_free(g, h)) throw std::logic_error("random_h_free: verification mismatch");
            return g;
        }
        // break this copy by toggling one of its pairs, chosen uniformly
        int hn = h.size();
        int pairs = hn * (hn - 1) / 2;
        int pick = int(rng.below(std::uint64_t(pairs)));
        int u = -1, v = -1, idx = 0;
        for (int i = 0; i < hn && u < 0; ++i)
            for (int j = i + 1; j < hn; ++j)
                if (idx++ == pick) {
                    u = (*phi)[size_t(i)];
                    v = (*phi)[size_t(j)];
                    break;
                }
        g = toggle_pair(g, u, v);
    }
    throw RepairExhausted("random_h_free: repair rounds exhausted");
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph edgeless_graph(int n) { return Graph::from_edges(n, {}); }

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, es);
}

Graph broom_graph(int k, int t) {
    if (k < 1 || t < 1) throw InvalidInput("broom: k,t >= 1 required");
    // path p_0 .. p_{k-1}, then t independent vertices joined to p_{k-1}
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    for (int j = 0; j < t; ++j) es.emplace_back(k - 1, k + j);
    return Graph::from_edges(k + t, es);
}

Graph double_star_graph(int a, int b) {
    if (a < 1 || b < 1) throw InvalidInput("double_star: a,b >= 1 required");
    // centres 0,1 adjacent; a leaves on 0, b leaves on 1
    std::vector<std::pair<int, int>> es{{0, 1}};
    for (int i = 0; i < a; ++i) es.emplace_back(0, 2 + i);
    for (int j = 0; j < b; ++j) es.emplace_back(1, 2 + a + j);
    return Graph::from_edges(2 + a + b, es);
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw InvalidInput("complete_multipartite: part sizes >= 1");
        n += p;
    }
    std::vector<std::pair<int, int>> es;
    int off_i = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        int off_j = off_i + parts[i];
        for (size_t j = i + 1; j < parts.size(); ++j) {
            for (int u = 0; u < parts[i]; ++u)
                for (int v = 0; v < parts[j]; ++v) es.emplace_back(off_i + u, off_j + v);
            off_j += parts[j];
        }
        off_i += parts[i];
    }
    return Graph::from_edges(n, es);
}

Graph join(const Graph& a, const Graph& b) {
    int n = a.size() + b.size();
    if (n > kStructureCap) throw CapExceeded("join: combined size above structural cap");
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.size(), v + a.size());
    for (int u = 0; u < a.size(); ++u)
        for (int v = 0; v < b.size(); ++v) es.emplace_back(u, a.size() + v);
    return Graph::from_edges(n, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.size() + b.size();
    if (n > kStructureCap) throw CapExceeded("disjoint_union: combined size above structural cap");
    auto es = a.edges();
    for (auto [u, v] : b.edges()) es.emplace_back(u + a.size(), v + a.size());
    return Graph::from_edges(n, es);
}

Graph c5_join_power(int m) {
    if (m < 1) throw InvalidInput("c5_join_power: m >= 1 required");
    Graph g = cycle_graph(5);
    for (int i = 1; i < m; ++i) g = join(g, cycle_graph(5));
    if (m <= 3) {
        // the advertised stress profile, re-verified at build
        if (!is_h_free(g, path_graph(5))) throw std::logic_error("c5_join_power: not P5-free");
        if (clique_number(g) != 2 * m) throw std::logic_error("c5_join_power: omega mismatch");
        if (g.size() <= kChiCap && chromatic_number(g) != 3 * m)
            throw std::logic_error("c5_join_power: chi mismatch");
    }
    return g;
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    if (name.rfind("broom_", 0) == 0) {
        auto rest = name.substr(6);
        auto us = rest.find('_');
        if (us == std::string::npos) throw InvalidInput("broom name needs broom_k_t");
        return broom_graph(std::stoi(rest.substr(0, us)), std::stoi(rest.substr(us + 1)));
    }
    if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P' || name[0] == 'E')) {
        int n = std::stoi(name.substr(1));
        switch (name[0]) {
            case 'K': return complete_graph(n);
            case 'C': return cycle_graph(n);
            case 'P': return path_graph(n);
            case 'E': return edgeless_graph(n);
        }
    }
    throw InvalidInput("unknown named graph: " + name);
}

Graph build_family(const GeneratorSpec& spec, std::uint64_t seed) {
    if (spec.family == "gnp") return gnp(spec.n, spec.p, seed);
    if (spec.family == "h_free") return random_h_free(spec.n, spec.p, named_graph(spec.h_name), seed);
    if (spec.family == "broom") return broom_graph(spec.k, spec.t);
    if (spec.family == "path") return path_graph(spec.n);
    if (spec.family == "double_star") return double_star_graph(spec.a, spec.b);
    if (spec.family == "c5_join_power") return c5_join_power(spec.m);
    if (spec.family == "complete_multipartite") return complete_multipartite_graph(spec.parts);
    if (spec.family == "named") return named_graph(spec.name);
    throw InvalidInput("unknown generator family: " + spec.family);
}

}  // namespace purepairs
