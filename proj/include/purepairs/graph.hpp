#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace purepairs {

// Hard representation limit (one adjacency word per vertex).
inline constexpr int kMaxVertices = 64;
// Default cap for structural operations.
inline constexpr int kStructureCap = 40;
// Default cap for exact chromatic number (subset-exponential cost).
inline constexpr int kChiCap = 20;

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subset of the vertices 0..n-1 of some graph, as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() : bits_(0) {}
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }
    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }
    static VertexSet of(std::initializer_list<int> vs) {
        std::uint64_t b = 0;
        for (int v : vs) b |= 1ULL << v;
        return VertexSet(b);
    }
    static VertexSet from(const std::vector<int>& vs) {
        std::uint64_t b = 0;
        for (int v : vs) b |= 1ULL << v;
        return VertexSet(b);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1ULL; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    void add(int v) { bits_ |= 1ULL << v; }
    void remove(int v) { bits_ &= ~(1ULL << v); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (1ULL << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(1ULL << v)); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const VertexSet&) const = default;

    // Lowest-index vertex; -1 when empty.
    constexpr int lowest() const {
        return bits_ ? std::countr_zero(bits_) : -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(size_t(count()));
        for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m));
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t m = bits_; m; m &= m - 1) f(std::countr_zero(m));
    }

private:
    std::uint64_t bits_;
};

// Immutable simple graph on vertices 0..n-1, adjacency stored as one
// bitmask word per vertex.
class Graph {
public:
    Graph() : n_(0) {}

    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
    }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    bool adjacent(int u, int v) const { return (adj_[size_t(u)] >> v) & 1ULL; }
    std::uint64_t neighbours_bits(int v) const { return adj_[size_t(v)]; }
    VertexSet neighbours(int v) const { return VertexSet(adj_[size_t(v)]); }
    VertexSet neighbours_in(int v, VertexSet s) const {
        return VertexSet(adj_[size_t(v)] & s.bits());
    }
    VertexSet closed_neighbourhood(int v) const {
        return VertexSet(adj_[size_t(v)] | (1ULL << v));
    }
    int degree(int v) const { return std::popcount(adj_[size_t(v)]); }
    int degree_in(int v, VertexSet s) const {
        return std::popcount(adj_[size_t(v)] & s.bits());
    }
    bool has_neighbour_in(int v, VertexSet s) const {
        return (adj_[size_t(v)] & s.bits()) != 0;
    }

    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    // 128-bit content signature, used as a cache key.
    std::pair<std::uint64_t, std::uint64_t> signature() const { return {sig0_, sig1_}; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void compute_signature();

    int n_;
    std::vector<std::uint64_t> adj_;
    std::uint64_t sig0_ = 0, sig1_ = 0;
};

struct InducedGraph {
    Graph graph;
    std::vector<int> to_parent;  // vertex i of graph -> vertex of the original
};

enum class PairKind { Complete, Anticomplete, Mixed };

struct PairStatus {
    PairKind kind;
    // For Mixed: one witnessing cross edge and one witnessing cross non-edge.
    std::pair<int, int> edge{-1, -1};
    std::pair<int, int> non_edge{-1, -1};
};

Graph complement(const Graph& g);
InducedGraph induced(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g, VertexSet s);
// Component of g[s] containing v (v must lie in s).
VertexSet component_of(const Graph& g, VertexSet s, int v);
// Max-chi component needs the oracle; lives in oracles.hpp.
bool is_connected(const Graph& g, VertexSet s);

PairStatus pair_status(const Graph& g, VertexSet a, VertexSet b);
bool is_complete_between(const Graph& g, VertexSet a, VertexSet b);
bool is_anticomplete_between(const Graph& g, VertexSet a, VertexSet b);
bool is_mixed_on(const Graph& g, int v, VertexSet s);
// Union of open neighbourhoods of s.
VertexSet neighbourhood_of_set(const Graph& g, VertexSet s);

bool is_clique(const Graph& g, VertexSet s);
bool is_stable_set(const Graph& g, VertexSet s);

}  // namespace purepairs
