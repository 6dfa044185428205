#include "purepairs/graph.hpp"

namespace purepairs {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0 || n > kMaxVertices)
        throw CapExceeded("vertex count " + std::to_string(n) + " outside [0, 64]");
    Graph g;
    g.n_ = n;
    g.adj_.assign(size_t(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
        if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
        g.adj_[size_t(u)] |= 1ULL << v;
        g.adj_[size_t(v)] |= 1ULL << u;
    }
    g.compute_signature();
    return g;
}

void Graph::compute_signature() {
    std::uint64_t a = 0xcbf29ce484222325ULL ^ std::uint64_t(n_);
    std::uint64_t b = 0x9e3779b97f4a7c15ULL + std::uint64_t(n_);
    for (std::uint64_t w : adj_) {
        a = (a ^ w) * 0x100000001b3ULL;
        b = (b + w) * 0xff51afd7ed558ccdULL;
        b ^= b >> 33;
    }
    sig0_ = a;
    sig1_ = b;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (std::uint64_t w : adj_) twice += std::popcount(w);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (std::uint64_t m = adj_[size_t(u)] >> u >> 1; m; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    return out;
}

Graph complement(const Graph& g) {
    int n = g.size();
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return Graph::from_edges(n, es);
}

InducedGraph induced(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw InvalidInput("induced: set not a subset of V(G)");
    std::vector<int> map = s.to_vector();
    std::vector<std::pair<int, int>> es;
    for (size_t i = 0; i < map.size(); ++i)
        for (size_t j = i + 1; j < map.size(); ++j)
            if (g.adjacent(map[i], map[j])) es.emplace_back(int(i), int(j));
    return {Graph::from_edges(int(map.size()), es), std::move(map)};
}

VertexSet component_of(const Graph& g, VertexSet s, int v) {
    std::uint64_t comp = 1ULL << v;
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
            next |= g.neighbours_bits(std::countr_zero(m));
        next &= s.bits() & ~comp;
        comp |= next;
        frontier = next;
    }
    return VertexSet(comp);
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
    if (!s.subset_of(g.vertices())) throw InvalidInput("components: set not a subset of V(G)");
    std::vector<VertexSet> out;
    std::uint64_t rest = s.bits();
    while (rest) {
        VertexSet c = component_of(g, VertexSet(rest), std::countr_zero(rest));
        out.push_back(c);
        rest &= ~c.bits();
    }
    return out;
}

bool is_connected(const Graph& g, VertexSet s) {
    if (s.empty()) return false;
    return component_of(g, s, s.lowest()) == s;
}

PairStatus pair_status(const Graph& g, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw InvalidInput("pair_status: empty side");
    if (a.intersects(b)) throw InvalidInput("pair_status: sides overlap");
    std::pair<int, int> edge{-1, -1}, non{-1, -1};
    a.for_each([&](int u) {
        std::uint64_t nb = g.neighbours_bits(u) & b.bits();
        if (nb && edge.first < 0) edge = {u, std::countr_zero(nb)};
        std::uint64_t miss = b.bits() & ~g.neighbours_bits(u);
        if (miss && non.first < 0) non = {u, std::countr_zero(miss)};
    });
    if (edge.first < 0) return {PairKind::Anticomplete};
    if (non.first < 0) return {PairKind::Complete};
    return {PairKind::Mixed, edge, non};
}

bool is_complete_between(const Graph& g, VertexSet a, VertexSet b) {
    for (std::uint64_t m = a.bits(); m; m &= m - 1)
        if (b.bits() & ~g.neighbours_bits(std::countr_zero(m))) return false;
    return true;
}

bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b) {
    for (std::uint64_t m = a.bits(); m; m &= m - 1)
        if (b.bits() & g.neighbours_bits(std::countr_zero(m))) return false;
    return true;
}

bool is_mixed_on(const Graph& g, int v, VertexSet s) {
    if (s.contains(v)) throw InvalidInput("is_mixed_on: v lies in S");
    std::uint64_t nb = g.neighbours_bits(v) & s.bits();
    return nb != 0 && nb != s.bits();
}

VertexSet neighbourhood_of_set(const Graph& g, VertexSet s) {
    std::uint64_t nb = 0;
    for (std::uint64_t m = s.bits(); m; m &= m - 1)
        nb |= g.neighbours_bits(std::countr_zero(m));
    return VertexSet(nb);
}

bool is_clique(const Graph& g, VertexSet s) {
    for (std::uint64_t m = s.bits(); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if ((s.bits() & ~(1ULL << v)) & ~g.neighbours_bits(v)) return false;
    }
    return true;
}

bool is_stable_set(const Graph& g, VertexSet s) {
    for (std::uint64_t m = s.bits(); m; m &= m - 1)
        if (g.neighbours_bits(std::countr_zero(m)) & s.bits()) return false;
    return true;
}

}  // namespace purepairs
