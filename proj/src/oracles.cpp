#include "purepairs/oracles.hpp"

#include "purepairs/rng.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

namespace purepairs {

bool Colouring::proper(const Graph& g) const {
    bool ok = true;
    domain.for_each([&](int v) {
        if (colour[size_t(v)] < 0) ok = false;
        domain.for_each([&](int u) {
            if (u < v && g.adjacent(u, v) && colour[size_t(u)] == colour[size_t(v)]) ok = false;
        });
    });
    return ok;
}

int Colouring::colours_used() const {
    std::uint64_t seen = 0;
    domain.for_each([&](int v) { seen |= 1ULL << colour[size_t(v)]; });
    return std::popcount(seen);
}

namespace {

// Tomita-style max clique with greedy-colouring bound.
void mc_expand(const Graph& g, std::uint64_t p, int rsize, std::uint64_t rset, int& best,
               std::uint64_t& best_set) {
    if (!p) {
        if (rsize > best) {
            best = rsize;
            best_set = rset;
        }
        return;
    }
    if (rsize + std::popcount(p) <= best) return;
    std::array<int, 64> verts{}, col{};
    int cnt = 0;
    std::uint64_t un = p;
    int colour = 0;
    while (un) {
        ++colour;
        std::uint64_t avail = un;
        while (avail) {
            int v = std::countr_zero(avail);
            verts[size_t(cnt)] = v;
            col[size_t(cnt)] = colour;
            ++cnt;
            un &= ~(1ULL << v);
            avail &= ~(1ULL << v);
            avail &= ~g.neighbours_bits(v);
        }
    }
    std::uint64_t cur = p;
    for (int i = cnt - 1; i >= 0; --i) {
        if (rsize + col[size_t(i)] <= best) return;
        int v = verts[size_t(i)];
        mc_expand(g, cur & g.neighbours_bits(v), rsize + 1, rset | (1ULL << v), best, best_set);
        cur &= ~(1ULL << v);
    }
}

int clique_number_raw(const Graph& g, std::uint64_t mask) {
    int best = 0;
    std::uint64_t bs = 0;
    mc_expand(g, mask, 0, 0, best, bs);
    return best;
}

struct ChiKey {
    std::uint64_t s0, s1, mask;
    bool operator==(const ChiKey&) const = default;
};
struct ChiKeyHash {
    size_t operator()(const ChiKey& k) const {
        std::uint64_t h = k.s0 ^ (k.s1 * 0x9e3779b97f4a7c15ULL) ^ Rng::mix(k.mask);
        return size_t(h);
    }
};

thread_local std::unordered_map<ChiKey, int, ChiKeyHash> g_chi_cache;

// DSATUR-style decision search: can `domain` be coloured with <= k classes?
bool colour_rec(const Graph& g, std::vector<std::uint64_t>& cls, int k, std::uint64_t rest) {
    if (!rest) return true;
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (std::uint64_t m = rest; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int sat = 0;
        for (std::uint64_t c : cls)
            if (c & g.neighbours_bits(v)) ++sat;
        int deg = std::popcount(g.neighbours_bits(v) & rest);
        if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
            pick = v;
            pick_sat = sat;
            pick_deg = deg;
        }
    }
    if (pick_sat >= k) return false;
    std::uint64_t bit = 1ULL << pick;
    int used = int(cls.size());
    for (int i = 0; i < used; ++i) {
        if (cls[size_t(i)] & g.neighbours_bits(pick)) continue;
        cls[size_t(i)] |= bit;
        if (colour_rec(g, cls, k, rest & ~bit)) return true;
        cls[size_t(i)] &= ~bit;
    }
    if (used < k) {
        cls.push_back(bit);
        if (colour_rec(g, cls, k, rest & ~bit)) return true;
        cls.pop_back();
    }
    return false;
}

bool try_colour(const Graph& g, VertexSet s, int k, std::vector<std::uint64_t>* out) {
    if (s.empty()) {
        if (out) out->clear();
        return true;
    }
    if (k <= 0) return false;
    VertexSet kq = max_clique(g, s);
    if (kq.count() > k) return false;
    std::vector<std::uint64_t> cls;
    kq.for_each([&](int v) { cls.push_back(1ULL << v); });
    std::uint64_t rest = s.bits() & ~kq.bits();
    if (!colour_rec(g, cls, k, rest)) return false;
    if (out) *out = cls;
    return true;
}

int greedy_colours(const Graph& g, VertexSet s) {
    std::vector<int> order = s.to_vector();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree_in(a, s), db = g.degree_in(b, s);
        return da != db ? da > db : a < b;
    });
    std::vector<std::uint64_t> cls;
    for (int v : order) {
        bool placed = false;
        for (auto& c : cls)
            if (!(c & g.neighbours_bits(v))) {
                c |= 1ULL << v;
                placed = true;
                break;
            }
        if (!placed) cls.push_back(1ULL << v);
    }
    return int(cls.size());
}

void check_chi_cap(VertexSet s) {
    if (s.count() > kChiCap)
        throw CapExceeded("exact chromatic number limited to " + std::to_string(kChiCap) +
                          " vertices, got " + std::to_string(s.count()));
}

}  // namespace

int clique_number(const Graph& g, VertexSet s) { return clique_number_raw(g, s.bits()); }

VertexSet max_clique(const Graph& g, VertexSet s) {
    int need = clique_number(g, s);
    std::uint64_t chosen = 0, allowed = s.bits();
    while (need > 0) {
        std::uint64_t m = allowed;
        bool advanced = false;
        while (m) {
            int v = std::countr_zero(m);
            std::uint64_t cand = allowed & g.neighbours_bits(v);
            if (1 + clique_number_raw(g, cand) >= need) {
                chosen |= 1ULL << v;
                allowed = cand;
                --need;
                advanced = true;
                break;
            }
            allowed &= ~(1ULL << v);
            m &= m - 1;
        }
        if (!advanced) throw std::logic_error("max_clique: greedy extension failed");
    }
    return VertexSet(chosen);
}

int stability_number(const Graph& g, VertexSet s) {
    return clique_number(complement(g), s);
}

VertexSet max_stable_set(const Graph& g, VertexSet s) {
    return max_clique(complement(g), s);
}

std::optional<VertexSet> stable_set_of_size(const Graph& g, VertexSet s, int size) {
    Graph co = complement(g);
    if (clique_number(co, s) < size) return std::nullopt;
    std::uint64_t chosen = 0, allowed = s.bits();
    int need = size;
    while (need > 0) {
        std::uint64_t m = allowed;
        bool advanced = false;
        while (m) {
            int v = std::countr_zero(m);
            std::uint64_t cand = allowed & co.neighbours_bits(v);
            if (1 + clique_number_raw(co, cand) >= need) {
                chosen |= 1ULL << v;
                allowed = cand;
                --need;
                advanced = true;
                break;
            }
            allowed &= ~(1ULL << v);
            m &= m - 1;
        }
        if (!advanced) return std::nullopt;
    }
    return VertexSet(chosen);
}

int chromatic_number(const Graph& g, VertexSet s) {
    if (s.empty()) return 0;
    check_chi_cap(s);
    auto [s0, s1] = g.signature();
    ChiKey key{s0, s1, s.bits()};
    if (auto it = g_chi_cache.find(key); it != g_chi_cache.end()) return it->second;
    int lb = clique_number(g, s);
    int ub = greedy_colours(g, s);
    int chi = ub;
    for (int k = lb; k < ub; ++k) {
        if (try_colour(g, s, k, nullptr)) {
            chi = k;
            break;
        }
    }
    if (g_chi_cache.size() > (1u << 22)) g_chi_cache.clear();
    g_chi_cache.emplace(key, chi);
    return chi;
}

Colouring chromatic_colouring(const Graph& g, VertexSet s) {
    Colouring c;
    c.colour.assign(size_t(g.size()), -1);
    c.domain = s;
    if (s.empty()) return c;
    check_chi_cap(s);
    int chi = chromatic_number(g, s);
    std::vector<std::uint64_t> cls;
    if (!try_colour(g, s, chi, &cls)) throw std::logic_error("chromatic_colouring: inconsistent chi");
    for (size_t i = 0; i < cls.size(); ++i)
        VertexSet(cls[i]).for_each([&](int v) { c.colour[size_t(v)] = int(i); });
    c.count = int(cls.size());
    return c;
}

bool colourable_with(const Graph& g, VertexSet s, int k) {
    if (s.count() > kChiCap) check_chi_cap(s);
    return try_colour(g, s, k, nullptr);
}

std::vector<std::uint8_t> chi_all_subsets(const Graph& g) {
    int n = g.size();
    if (n > 15) throw CapExceeded("chi_all_subsets limited to 15 vertices");
    size_t total = size_t(1) << n;
    std::vector<std::uint8_t> chi(total, 0);
    std::vector<std::uint8_t> indep(total, 0);
    indep[0] = 1;
    for (size_t m = 1; m < total; ++m) {
        int lo = std::countr_zero(m);
        size_t rest = m & (m - 1);
        indep[m] = indep[rest] && !(g.neighbours_bits(lo) & rest);
    }
    for (size_t m = 1; m < total; ++m) {
        size_t lo = m & (~m + 1);
        std::uint8_t best = 255;
        for (size_t sub = m; sub; sub = (sub - 1) & m) {
            if ((sub & lo) && indep[sub]) {
                std::uint8_t c = std::uint8_t(1 + chi[m ^ sub]);
                if (c < best) best = c;
            }
        }
        chi[m] = best;
    }
    return chi;
}

DegeneracyResult degeneracy(const Graph& g, VertexSet s) {
    DegeneracyResult r;
    std::uint64_t rest = s.bits();
    while (rest) {
        int pick = -1, pick_deg = 65;
        for (std::uint64_t m = rest; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int d = std::popcount(g.neighbours_bits(v) & rest);
            if (d < pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        r.degeneracy = std::max(r.degeneracy, pick_deg);
        r.order.push_back(pick);
        rest &= ~(1ULL << pick);
    }
    return r;
}

namespace {

bool copy_rec(const Graph& h, const Graph& g, const std::vector<int>& order,
              const std::vector<std::uint64_t>& cand, size_t pos, std::uint64_t used,
              std::vector<int>& phi) {
    if (pos == order.size()) return true;
    int hv = order[pos];
    std::uint64_t avail = cand[size_t(hv)] & ~used;
    while (avail) {
        int gv = std::countr_zero(avail);
        avail &= avail - 1;
        bool ok = true;
        for (size_t q = 0; q < pos; ++q) {
            int hu = order[q];
            if (h.adjacent(hu, hv) != g.adjacent(phi[size_t(hu)], gv)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        phi[size_t(hv)] = gv;
        if (copy_rec(h, g, order, cand, pos + 1, used | (1ULL << gv), phi)) return true;
        phi[size_t(hv)] = -1;
    }
    return false;
}

}  // namespace

namespace {

std::optional<std::vector<int>> find_copy_impl(const Graph& h, const Graph& g,
                                               const std::vector<VertexSet>& anchors,
                                               VertexSet fallback) {
    int hn = h.size();
    if (hn == 0) return std::vector<int>{};
    if (hn > fallback.count() && anchors.empty()) return std::nullopt;
    std::vector<std::uint64_t> cand(static_cast<size_t>(hn), 0);
    for (int i = 0; i < hn; ++i) {
        std::uint64_t c = (!anchors.empty() && !anchors[size_t(i)].empty())
                              ? anchors[size_t(i)].bits()
                              : fallback.bits();
        // induced copies preserve at least the in-copy degree
        std::uint64_t filtered = 0;
        for (std::uint64_t m = c; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (g.degree(v) >= h.degree(i)) filtered |= 1ULL << v;
        }
        cand[size_t(i)] = filtered;
        if (!filtered) return std::nullopt;
    }
    std::vector<int> order(static_cast<size_t>(hn), 0);
    for (int i = 0; i < hn; ++i) order[size_t(i)] = i;
    auto anchored = [&](int i) {
        return !anchors.empty() && !anchors[size_t(i)].empty();
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        bool aa = anchored(a), ab = anchored(b);
        if (aa != ab) return aa;
        int da = h.degree(a), db = h.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    std::vector<int> phi(size_t(hn), -1);
    if (copy_rec(h, g, order, cand, 0, 0, phi)) return phi;
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& h, const Graph& g,
                                                  const std::vector<VertexSet>& anchors) {
    if (!anchors.empty()) {
        if (int(anchors.size()) != h.size()) throw InvalidInput("anchors: wrong arity");
        for (size_t i = 0; i < anchors.size(); ++i)
            for (size_t j = i + 1; j < anchors.size(); ++j)
                if (!anchors[i].empty() && anchors[i].intersects(anchors[j]))
                    throw InvalidInput("anchors: sets overlap");
    }
    return find_copy_impl(h, g, anchors, g.vertices());
}

std::optional<std::vector<int>> find_induced_copy_in(const Graph& h, const Graph& g,
                                                     VertexSet domain) {
    return find_copy_impl(h, g, {}, domain);
}

bool is_h_free(const Graph& g, const Graph& h) { return !find_induced_copy(h, g).has_value(); }

bool is_h_free_in(const Graph& g, VertexSet domain, const Graph& h) {
    return !find_induced_copy_in(h, g, domain).has_value();
}

namespace {

struct RamseyEntry {
    int t, w;
    long long value;
};

// Classical exact values with R <= 25 (plus the degenerate rows).
constexpr RamseyEntry kRamseyTable[] = {
    {3, 3, 6}, {3, 4, 9}, {4, 3, 9}, {3, 5, 14}, {5, 3, 14},
    {3, 6, 18}, {6, 3, 18}, {3, 7, 23}, {7, 3, 23}, {4, 4, 18},
    {4, 5, 25}, {5, 4, 25},
};

long long binomial_ll(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    if (r > Int(std::numeric_limits<long long>::max())) throw CapExceeded("binomial overflow");
    return r.convert_to<long long>();
}

long long pow_ll(long long b, int e) {
    Int r = ipow(Int(b), unsigned(e));
    if (r > Int(std::numeric_limits<long long>::max())) throw CapExceeded("power overflow");
    return r.convert_to<long long>();
}

}  // namespace

bool ramsey_is_exact(int t, int w) {
    if (t < 1 || w < 1) return false;
    if (t <= 2 || w <= 2) return true;
    for (const auto& e : kRamseyTable)
        if (e.t == t && e.w == w) return true;
    return false;
}

long long ramsey(int t, int w) {
    if (t < 1 || w < 1) throw InvalidInput("ramsey: arguments must be >= 1");
    if (t == 1 || w == 1) return 1;
    if (t == 2) return w;
    if (w == 2) return t;
    for (const auto& e : kRamseyTable)
        if (e.t == t && e.w == w) return e.value;
    return std::min(binomial_ll(t + w - 2, t - 1), pow_ll(w, t));
}

namespace {

// Largest clique within `p` under the partial adjacency `adj` (plain
// branch-and-bound; the sets here have at most 15 vertices).
int partial_clique(const std::vector<std::uint64_t>& adj, std::uint64_t p, int rs, int best) {
    while (p) {
        if (rs + std::popcount(p) <= best) return best;
        int v = std::countr_zero(p);
        p &= p - 1;
        best = partial_clique(adj, p & adj[size_t(v)], rs + 1, std::max(best, rs + 1));
    }
    return best;
}

int partial_stable(const std::vector<std::uint64_t>& adj, std::uint64_t p, int rs, int best) {
    while (p) {
        if (rs + std::popcount(p) <= best) return best;
        int v = std::countr_zero(p);
        p &= p - 1;
        best = partial_stable(adj, p & ~adj[size_t(v)], rs + 1, std::max(best, rs + 1));
    }
    return best;
}

bool ramsey_dfs(std::vector<std::uint64_t>& adj, int i, int n, int t, int w) {
    if (i == n) return true;
    std::uint64_t below = (1ULL << i) - 1;
    for (std::uint64_t m = 0;; ++m) {
        // adding vertex i with neighbour set m must not close a w-clique or a
        // stable set of size t; both necessarily pass through i
        bool ok = partial_clique(adj, m, 0, 0) < w - 1 &&
                  partial_stable(adj, below & ~m, 0, 0) < t - 1;
        if (ok) {
            adj.push_back(m);
            for (std::uint64_t mm = m; mm; mm &= mm - 1)
                adj[size_t(std::countr_zero(mm))] |= 1ULL << i;
            if (ramsey_dfs(adj, i + 1, n, t, w)) return true;
            for (std::uint64_t mm = m; mm; mm &= mm - 1)
                adj[size_t(std::countr_zero(mm))] &= ~(1ULL << i);
            adj.pop_back();
        }
        if (m == below) break;
    }
    return false;
}

}  // namespace

bool exists_ramsey_avoiding_graph(int n, int t, int w) {
    if (n <= 0) return true;
    if (n > 16) throw CapExceeded("ramsey search limited to 16 vertices");
    std::vector<std::uint64_t> adj;
    adj.reserve(size_t(n));
    return ramsey_dfs(adj, 0, n, t, w);
}

Submeasure Submeasure::chromatic() {
    return {"chromatic", [](const Graph& g, VertexSet s) { return Rat(chromatic_number(g, s)); }};
}

Submeasure Submeasure::cardinality() {
    return {"cardinality", [](const Graph&, VertexSet s) { return Rat(s.count()); }};
}

SubmeasureReport submeasure_axiom_check(const Submeasure& mu, const Graph& g, int samples,
                                        std::uint64_t seed) {
    SubmeasureReport rep;
    auto record = [&](std::string axiom, VertexSet x, VertexSet y, Rat vx, Rat vy) {
        rep.passed = false;
        if (rep.violations.size() < 20)
            rep.violations.push_back({std::move(axiom), x, y, std::move(vx), std::move(vy)});
    };
    Rat z = mu(g, VertexSet());
    ++rep.checks;
    if (z != 0) record("mu(empty)=0", VertexSet(), VertexSet(), z, Rat(0));
    g.vertices().for_each([&](int v) {
        Rat one = mu(g, VertexSet::single(v));
        ++rep.checks;
        if (one != 1) record("mu(singleton)=1", VertexSet::single(v), VertexSet(), one, Rat(1));
    });
    Rng rng(Rng::derive(seed, 0x5ab));
    std::uint64_t full = g.vertices().bits();
    for (int i = 0; i < samples; ++i) {
        std::uint64_t ybits = rng.next() & full;
        std::uint64_t xbits = rng.next() & ybits;
        VertexSet x(xbits), y(ybits);
        Rat mx = mu(g, x), my = mu(g, y);
        ++rep.checks;
        if (mx > my) record("monotone", x, y, mx, my);
        std::uint64_t abits = rng.next() & full;
        std::uint64_t bbits = rng.next() & full;
        VertexSet a(abits), b(bbits);
        Rat ma = mu(g, a), mb = mu(g, b), mab = mu(g, a | b);
        ++rep.checks;
        if (mab > ma + mb) record("subadditive", a, b, mab, ma + mb);
    }
    return rep;
}

VertexSet max_chi_component(const Graph& g, VertexSet s) {
    VertexSet best;
    int best_chi = -1;
    for (const VertexSet& c : components(g, s)) {
        int chi = chromatic_number(g, c);
        if (chi > best_chi) {
            best_chi = chi;
            best = c;
        }
    }
    return best;
}

}  // namespace purepairs
