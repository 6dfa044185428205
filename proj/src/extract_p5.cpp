#include "purepairs/extract_p5.hpp"

#include "purepairs/extract_broom.hpp"
#include "purepairs/generators.hpp"
#include "purepairs/pair_search.hpp"

#include <algorithm>
#include <array>

namespace purepairs {

namespace {

Rat chi_r(const Graph& g, VertexSet s) { return Rat(chromatic_number(g, s)); }

void verify_p5_free(const Graph& g, VertexSet domain) {
    if (auto copy = find_induced_copy_in(path_graph(5), g, domain))
        throw NotHFree("input contains an induced P5", *copy);
}

void rec(Trace& trace, std::string claim, bool sat, std::string detail = "") {
    trace.push_back({std::move(claim), std::move(detail), sat});
}

// Edge of g[s] with exactly one endpoint adjacent to v, adjacent endpoint
// first; the existence of such an edge is "mixed across an edge".
std::optional<std::array<int, 2>> mixed_edge(const Graph& g, int v, VertexSet s) {
    std::optional<std::array<int, 2>> out;
    s.for_each([&](int x) {
        if (out) return;
        VertexSet others = g.neighbours_in(x, s);
        others.for_each([&](int y) {
            if (out) return;
            bool vx = g.adjacent(v, x), vy = g.adjacent(v, y);
            if (vx && !vy) out = {{x, y}};
            if (!vx && vy) out = {{y, x}};
        });
    });
    return out;
}

}  // namespace

std::optional<MixedWitness> assert_unmixed(const Graph& g, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw InvalidInput("assert_unmixed: empty side");
    if (a.intersects(b) || !is_anticomplete_between(g, a, b))
        throw InvalidInput("assert_unmixed: pair not anticomplete");
    std::optional<MixedWitness> out;
    g.vertices().minus(a | b).for_each([&](int v) {
        if (out) return;
        auto ea = mixed_edge(g, v, a);
        if (!ea) return;
        auto eb = mixed_edge(g, v, b);
        if (!eb) return;
        MixedWitness w;
        w.v = v;
        w.a_edge = *ea;
        w.b_edge = *eb;
        w.p5 = {(*ea)[1], (*ea)[0], v, (*eb)[0], (*eb)[1]};
        out = w;
    });
    return out;
}

// --- terminal partitions ----------------------------------------------------------

namespace {

std::vector<VertexSet> neighbour_sets(const Graph& g, const TerminalPartition& tp) {
    std::vector<VertexSet> bi;
    for (const auto& a : tp.a) {
        VertexSet s;
        tp.b.for_each([&](int u) {
            if (g.has_neighbour_in(u, a)) s.add(u);
        });
        bi.push_back(s);
    }
    return bi;
}

TerminalPartition base_partition(VertexSet domain, const Rat& p, int w) {
    TerminalPartition tp;
    tp.d = domain;
    tp.p = p;
    tp.w = w;
    return tp;
}

}  // namespace

void check_terminal_partition(const Graph& g, VertexSet domain, const TerminalPartition& tp) {
    int w = tp.w;
    int chi_g = chromatic_number(g, domain);
    VertexSet all_a;
    for (const auto& a : tp.a) {
        if (a.empty()) throw ClaimViolation("terminal partition: empty A block");
        all_a = all_a | a;
    }
    VertexSet whole = all_a | tp.b | tp.d;
    if (whole != domain || !all_a.minus(domain).empty())
        throw ClaimViolation("terminal partition: blocks do not partition the domain");
    long long cnt = 0;
    for (const auto& a : tp.a) cnt += a.count();
    if (cnt + tp.b.count() + tp.d.count() != domain.count())
        throw ClaimViolation("terminal partition: blocks overlap");
    // bullet 1: D anticomplete to the A blocks
    if (!is_anticomplete_between(g, tp.d, all_a) && !tp.d.empty() && !all_a.empty())
        throw ClaimViolation("terminal partition: D sees an A block");
    // bullet 2: every B vertex has a neighbour in some A block
    bool ok2 = true;
    tp.b.for_each([&](int u) {
        if (!g.has_neighbour_in(u, all_a)) ok2 = false;
    });
    if (!ok2) throw ClaimViolation("terminal partition: B vertex without A neighbour");
    // bullet 3: 1 <= chi(B_i) <= w^-4 chi(G)
    Int w4 = ipow(Int(w), 4);
    for (const auto& bi : neighbour_sets(g, tp)) {
        int chi_bi = chromatic_number(g, bi);
        if (chi_bi < 1 || Int(chi_bi) * w4 > Int(chi_g))
            throw ClaimViolation("terminal partition: chi(B_i) outside [1, w^-4 chi(G)]");
    }
    // bullet 4: the A blocks are exactly the components of G minus (B u D),
    // each with chi >= p
    auto comps = components(g, domain.minus(tp.b | tp.d));
    if (comps.size() != tp.a.size())
        throw ClaimViolation("terminal partition: component count mismatch");
    for (const auto& c : comps) {
        bool matched = false;
        for (const auto& a : tp.a) matched = matched || (a == c);
        if (!matched) throw ClaimViolation("terminal partition: A blocks are not the components");
        if (chi_r(g, c) < tp.p)
            throw ClaimViolation("terminal partition: component below the p threshold");
    }
    // bullet 5: chi(D) >= (1-w^-2) chi(G); B vertices reach every high-chi
    // component of G[D]
    Int w2 = Int(w) * w;
    if (w2 * chromatic_number(g, tp.d) < (w2 - 1) * chi_g)
        throw ClaimViolation("terminal partition: chi(D) below (1-w^-2) chi(G)");
    for (const auto& c : components(g, tp.d)) {
        if (w2 * chromatic_number(g, c) < (w2 - 1) * chi_g) continue;
        bool ok5 = true;
        tp.b.for_each([&](int u) {
            if (!g.has_neighbour_in(u, c)) ok5 = false;
        });
        if (!ok5)
            throw ClaimViolation("terminal partition: B vertex missing a high-chi D component");
    }
}

VertexSet terminal_concentration(const Graph& g, VertexSet domain, const TerminalPartition& tp) {
    int w = tp.w;
    int chi_g = chromatic_number(g, domain);
    Int w2 = Int(w) * w, w3 = Int(w) * w * w;
    VertexSet big;
    int big_count = 0;
    for (const auto& c : components(g, tp.d)) {
        if (w2 * chromatic_number(g, c) >= (w2 - 1) * chi_g) {
            big = big.empty() ? c : big;
            ++big_count;
        }
    }
    if (big_count != 1)
        throw ClaimViolation("terminal concentration: high-chi component of G[D] not unique");
    if (w3 * chromatic_number(g, tp.d) < (w3 - 1) * chi_g)
        throw ClaimViolation("terminal concentration: chi(D) below (1-w^-3) chi(G)");
    return big;
}

TerminalPartition terminal_partition(const Graph& g, VertexSet domain, const Rat& p,
                                     int w_bound) {
    verify_p5_free(g, domain);
    if (!is_connected(g, domain)) throw InvalidInput("terminal_partition: domain not connected");
    // w is an upper bound on the clique number; the thresholds only need w >= 2
    int w = w_bound > 0 ? w_bound : std::max(clique_number(g, domain), 2);
    if (clique_number(g, domain) > w)
        throw InvalidInput("terminal_partition: clique bound below omega");
    if (!is_q_controlled(g, domain, w))
        throw InvalidInput("terminal_partition: domain not controlled");
    TerminalPartition tp = base_partition(domain, p, w);
    check_terminal_partition(g, domain, tp);
    return tp;
}

TerminalPartition terminal_partition(const Graph& g, const Rat& p) {
    return terminal_partition(g, g.vertices(), p);
}

// --- terminal complete pairs --------------------------------------------------------

TerminalPairResult terminal_complete_pair(const Graph& g, VertexSet domain, const Rat& p,
                                          const AntiSupplier& supplier, int w_bound) {
    verify_p5_free(g, domain);
    if (!is_connected(g, domain))
        throw InvalidInput("terminal_complete_pair: domain not connected");
    int w = w_bound > 0 ? w_bound : std::max(clique_number(g, domain), 2);
    if (clique_number(g, domain) > w)
        throw InvalidInput("terminal_complete_pair: clique bound below omega");
    if (!is_q_controlled(g, domain, w))
        throw InvalidInput("terminal_complete_pair: domain not controlled");
    int chi_g = chromatic_number(g, domain);
    Int w4 = ipow(Int(w), 4);

    TerminalPartition tp = base_partition(domain, p, w);
    for (int round = 0; round <= domain.count() + 1; ++round) {
        VertexSet c = terminal_concentration(g, domain, tp);
        auto supplied = supplier(c);
        if (std::holds_alternative<std::monostate>(supplied))
            throw SupplierFailure("terminal_complete_pair: supplier produced no pair");
        if (auto* esc = std::get_if<SupplierEscape>(&supplied)) return *esc;
        auto [p0, q0] = std::get<std::pair<VertexSet, VertexSet>>(supplied);
        if (p0.empty() || q0.empty() || !p0.subset_of(c) || !q0.subset_of(c) ||
            !is_anticomplete_between(g, p0, q0) || p0.intersects(q0))
            throw SupplierFailure("terminal_complete_pair: supplied pair malformed");
        p0 = max_chi_component(g, p0);
        q0 = max_chi_component(g, q0);
        if (chi_r(g, p0) < p || chi_r(g, q0) < p)
            throw SupplierFailure("terminal_complete_pair: supplied pair below p");
        StabilizedPair stab = stabilize_anticomplete_pair(g, c, p0, q0);
        VertexSet big = stab.p, small = stab.q, cut = stab.cutset;

        // each cut vertex is complete to one side (mixed on both would give a P5)
        VertexSet sp, sq;
        bool bad = false;
        cut.for_each([&](int s) {
            if (is_complete_between(g, VertexSet::single(s), big))
                sp.add(s);
            else if (is_complete_between(g, VertexSet::single(s), small))
                sq.add(s);
            else
                bad = true;
        });
        if (bad)
            throw ClaimViolation("terminal_complete_pair: cut vertex mixed on both sides");
        if (!sp.empty() && w4 * chromatic_number(g, sp) >= Int(chi_g)) {
            CompletePairOutcome out;
            out.a = sp;
            out.b = big;
            out.degenerate = Int(chi_g) <= w4;
            return out;
        }
        if (!sq.empty() && w4 * chromatic_number(g, sq) >= Int(chi_g)) {
            CompletePairOutcome out;
            out.a = sq;
            out.b = small;
            out.degenerate = Int(chi_g) <= w4;
            return out;
        }
        // big-chi continuation: the partition extension
        Int w2 = Int(w) * w;
        if (w2 * chromatic_number(g, big) < (w2 - 1) * chi_g)
            throw ClaimViolation("terminal_complete_pair: chi(P) below (1-w^-2) chi(G)");
        bool ok = true;
        cut.for_each([&](int s) {
            if (!is_mixed_on(g, s, big)) ok = false;
        });
        if (!ok) throw ClaimViolation("terminal_complete_pair: cut vertex not mixed on P");
        if (!is_complete_between(g, cut, small))
            throw ClaimViolation("terminal_complete_pair: cutset not complete to Q");
        tp.b.for_each([&](int u) {
            if (!g.has_neighbour_in(u, big)) ok = false;
        });
        if (!ok) throw ClaimViolation("terminal_complete_pair: B vertex without P neighbour");
        VertexSet z;
        tp.b.for_each([&](int u) {
            if (g.has_neighbour_in(u, small)) z.add(u);
        });
        if (!is_complete_between(g, z, small))
            throw ClaimViolation("terminal_complete_pair: Z not complete to Q");
        VertexSet sz = cut | z;
        if (w4 * chromatic_number(g, sz) >= Int(chi_g)) {
            CompletePairOutcome out;
            out.a = sz;
            out.b = small;
            out.degenerate = Int(chi_g) <= w4;
            return out;
        }
        tp.a.push_back(small);
        tp.b = tp.b | cut;
        tp.d = tp.d.minus(small | cut);
        check_terminal_partition(g, domain, tp);
    }
    throw std::logic_error("terminal_complete_pair: extension loop did not terminate");
}

TerminalPairResult terminal_complete_pair(const Graph& g, const Rat& p,
                                          const AntiSupplier& supplier) {
    return terminal_complete_pair(g, g.vertices(), p, supplier);
}

// --- nonneighbour cover ----------------------------------------------------------

NonneighbourCover nonneighbour_cover_core(const Graph& g, VertexSet p, VertexSet q,
                                          const Rat& threshold, const P5Params& params) {
    params.check();
    if (p.empty() || q.empty()) throw InvalidInput("nonneighbour_cover: empty side");
    if (p.intersects(q)) throw InvalidInput("nonneighbour_cover: sides overlap");
    int w = clique_number(g);
    if (w < 2) throw InvalidInput("nonneighbour_cover: omega >= 2 required");
    int witness = -1;
    p.for_each([&](int u) {
        if (witness < 0 && chi_r(g, q.minus(g.neighbours(u))) > threshold) witness = u;
    });
    if (witness >= 0)
        throw InvalidInput("nonneighbour_cover: precondition fails at vertex " +
                           std::to_string(witness));
    NonneighbourCover out;
    std::uint64_t common = q.bits();
    p.for_each([&](int u) { common &= g.neighbours_bits(u); });
    out.t = q.minus(VertexSet(common));
    Int w2 = Int(w) * w;
    if (out.t.empty()) {
        out.bound_holds = true;
        return out;
    }
    // minimal cover S: ascending pass dropping redundant vertices
    auto tu = [&](int u) { return q.minus(g.neighbours(u)); };
    std::vector<int> cover = p.to_vector();
    for (size_t i = 0; i < cover.size();) {
        VertexSet rest;
        for (size_t j = 0; j < cover.size(); ++j)
            if (j != i) rest = rest | tu(cover[j]);
        if (out.t.subset_of(rest)) {
            cover.erase(cover.begin() + long(i));
        } else {
            ++i;
        }
    }
    out.cover = VertexSet::from(cover);
    for (size_t i = 0; i < cover.size(); ++i) {
        VertexSet priv = tu(cover[i]);
        for (size_t j = 0; j < cover.size(); ++j)
            if (j != i) priv = priv.minus(tu(cover[j]));
        if (priv.empty()) throw std::logic_error("nonneighbour_cover: cover not minimal");
        out.z.push_back(priv.lowest());
    }
    out.alpha_cover = stability_number(g, out.cover);
    if (out.alpha_cover > w)
        throw ClaimViolation("nonneighbour_cover: alpha(S) > omega in a P5-free graph");
    out.eh_violation = Int(cover.size()) > ipow(Int(w), unsigned(params.eh_a));
    out.bound_holds = w2 * chromatic_number(g, out.t) <= Int(chromatic_number(g, q));
    return out;
}

NonneighbourCover nonneighbour_cover(const Graph& g, VertexSet p, VertexSet q,
                                     const P5Params& params) {
    verify_p5_free(g, g.vertices());
    int w = clique_number(g);
    if (w < 2) throw InvalidInput("nonneighbour_cover: omega >= 2 required");
    Rat threshold = chi_r(g, q) / Rat(ipow(Int(w), unsigned(params.mid_d())));
    NonneighbourCover out = nonneighbour_cover_core(g, p, q, threshold, params);
    if (!out.eh_violation && !out.bound_holds)
        throw ClaimViolation("nonneighbour_cover: chi(T) above w^-2 chi(Q) without an EH flag");
    return out;
}

// --- colourful subgraphs -----------------------------------------------------------

std::optional<int> colourful_check(const Graph& g, VertexSet domain, const Rat& eps) {
    Rat thresh = eps * chi_r(g, domain);
    std::optional<int> bad;
    domain.for_each([&](int v) {
        if (bad) return;
        if (chi_r(g, domain.minus(g.closed_neighbourhood(v))) >= thresh) bad = v;
    });
    return bad;
}

std::optional<int> colourful_check(const Graph& g, const Rat& eps) {
    return colourful_check(g, g.vertices(), eps);
}

namespace {

CompletePairOutcome colourful_complete_pair_impl(const Graph& g, const Rat& eps) {
    int chi_g = chromatic_number(g);
    if (chi_g < 2) throw InvalidInput("colourful_complete_pair: chi(G) >= 2 required");
    if (eps <= 0 || eps >= 1) throw InvalidInput("colourful_complete_pair: eps in (0,1)");
    verify_p5_free(g, g.vertices());
    if (auto bad = colourful_check(g, eps))
        throw InvalidInput("colourful_complete_pair: not eps-colourful, violating vertex " +
                           std::to_string(*bad));
    int w = clique_number(g);
    Int w32 = ipow(Int(w), 32);
    if (is_clique(g, g.vertices())) {
        int v = g.vertices().lowest();
        CompletePairOutcome out;
        out.a = VertexSet::single(v);
        out.b = g.vertices().without(v);
        out.degenerate = Int(chi_g) <= w32;
        if (2 * chromatic_number(g, out.b) < (1 - eps) * chi_g)
            throw std::logic_error("colourful_complete_pair: complete case bound failed");
        return out;
    }
    if (!is_connected(g, g.vertices()))
        throw ClaimViolation("colourful_complete_pair: eps-colourful graph is disconnected");

    CoveringResult cov = covering_blockade(g, 4);
    if (!std::holds_alternative<AnticompletePairOutcome>(cov))
        throw ClaimViolation(
            "colourful_complete_pair: covering step returned a blockade; the pair branch is "
            "required");
    auto pair = std::get<AnticompletePairOutcome>(cov);
    VertexSet a0 = max_chi_component(g, pair.a);
    VertexSet b0 = max_chi_component(g, pair.b);
    StabilizedPair stab = stabilize_anticomplete_pair(g, g.vertices(), a0, b0);
    VertexSet big = stab.p, small = stab.q, cut = stab.cutset;
    // colourfulness caps both sides and pushes chi onto the cutset
    Rat ecap = eps * chi_g;
    if (chi_r(g, big) >= ecap || chi_r(g, small) >= ecap)
        throw ClaimViolation("colourful_complete_pair: anticomplete side reaches eps chi(G)");
    if (Rat(chromatic_number(g, cut)) < (1 - eps) * chi_g)
        throw ClaimViolation("colourful_complete_pair: cutset below (1-eps) chi(G)");
    VertexSet sp, sq;
    bool badv = false;
    cut.for_each([&](int s) {
        if (is_complete_between(g, VertexSet::single(s), big))
            sp.add(s);
        else if (is_complete_between(g, VertexSet::single(s), small))
            sq.add(s);
        else
            badv = true;
    });
    if (badv) throw ClaimViolation("colourful_complete_pair: cut vertex mixed on both sides");
    CompletePairOutcome out;
    if (chromatic_number(g, sp) >= chromatic_number(g, sq)) {
        out.a = big;
        out.b = sp;
    } else {
        out.a = small;
        out.b = sq;
    }
    out.degenerate = Int(chi_g) <= w32;
    if (!is_complete_between(g, out.a, out.b))
        throw std::logic_error("colourful_complete_pair: returned pair not complete");
    if (w32 * chromatic_number(g, out.a) < Int(chi_g))
        throw ClaimViolation("colourful_complete_pair: chi(A) below w^-32 chi(G)");
    if (2 * chromatic_number(g, out.b) < (1 - eps) * chi_g)
        throw ClaimViolation("colourful_complete_pair: chi(B) below (1-eps)/2 chi(G)");
    return out;
}

}  // namespace

CompletePairOutcome colourful_complete_pair(const Graph& g, const Rat& eps) {
    return colourful_complete_pair_impl(g, eps);
}

// --- linanti -----------------------------------------------------------------------

namespace {

struct DegenerateExit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// When the 2^-4 chi(G) threshold has collapsed below 1, a single vertex is a
// valid (degenerate) colourful outcome; otherwise the pipeline has genuinely
// failed and the trace is surfaced.
ColourfulSubgraphOutcome degenerate_or_throw(VertexSet domain, int chi_g, const Rat& eps,
                                             Trace& trace, const std::string& reason) {
    if (chi_g <= 16) {
        rec(trace, "degenerate-exit", true, reason);
        ColourfulSubgraphOutcome out;
        out.j = VertexSet::single(domain.lowest());
        out.eps = eps;
        out.degenerate = true;
        return out;
    }
    throw ClaimViolation("linanti: " + reason, trace);
}

}  // namespace

LinantiResult linanti(const Graph& g, VertexSet domain, const Rat& eps, const P5Params& params) {
    params.check();
    if (eps <= 0 || eps >= Rat(1, 2)) throw InvalidInput("linanti: eps in (0, 1/2)");
    verify_p5_free(g, domain);
    int w = clique_number(g, domain);
    if (w < 2) throw InvalidInput("linanti: omega >= 2 required");
    const int d = params.mid_d();
    const int b = params.linanti_b();
    const Int wb = ipow(Int(w), unsigned(b));
    const int chi_g = chromatic_number(g, domain);
    LinantiResult result;
    Trace& trace = result.trace;

    auto anti_exit = [&](VertexSet pp, VertexSet qq) {
        AnticompletePairOutcome out;
        out.a = pp;
        out.b = qq;
        out.degenerate = chi_g <= 16;
        if (!is_anticomplete_between(g, pp, qq))
            throw ClaimViolation("linanti: anticomplete outcome is not anticomplete", trace);
        result.outcome = out;
        return result;
    };
    auto complete_exit = [&](VertexSet aa, VertexSet bb) {
        CompletePairOutcome out;
        out.a = aa;
        out.b = bb;
        out.degenerate = Int(chi_g) <= wb;
        if (!is_complete_between(g, aa, bb))
            throw ClaimViolation("linanti: complete outcome is not complete", trace);
        result.outcome = out;
        return result;
    };
    auto colourful_exit = [&](VertexSet j, int chi_host_block) {
        // verified eps-colourful by the failed scan; check the chi bound
        ColourfulSubgraphOutcome out;
        out.j = j;
        out.eps = eps;
        out.degenerate = chi_g <= 16;
        if (16 * chi_host_block < chi_g && !out.degenerate)
            throw ClaimViolation("linanti: colourful block below 2^-4 chi(G)", trace);
        result.outcome = out;
        return result;
    };

    // Z: vertices with low-chromatic neighbourhoods (Gyarfas bound keeps Z small)
    VertexSet z;
    domain.for_each([&](int v) {
        if (8 * chromatic_number(g, g.neighbours_in(v, domain)) < chi_g) z.add(v);
    });
    rec(trace, "chi(Z) < chi(G)/2", 2 * chromatic_number(g, z) < chi_g);
    VertexSet gz = domain.minus(z);
    if (gz.empty()) {
        result.outcome = degenerate_or_throw(domain, chi_g, eps, trace, "Z swallowed G");
        return result;
    }
    VertexSet f = controlled_subgraph(g, gz, w).subgraph;
    rec(trace, "4 chi(F) > chi(G)", 4 * chromatic_number(g, f) > chi_g);
    int chi_f = chromatic_number(g, f);

    int v = -1;
    {
        Rat need = eps * chi_f;
        f.for_each([&](int cand) {
            if (v >= 0) return;
            if (chi_r(g, domain.minus(g.closed_neighbourhood(cand))) >= need) v = cand;
        });
    }
    if (v < 0) {
        // every vertex of F has small nonneighbourhood: F itself is colourful
        bool ok = true;
        f.for_each([&](int u) {
            if (chi_r(g, f.minus(g.closed_neighbourhood(u))) >= eps * chi_f) ok = false;
        });
        if (!ok) throw ClaimViolation("linanti: F fails its own colourfulness", trace);
        rec(trace, "outcome: colourful F", true);
        return colourful_exit(f, chi_f);
    }
    VertexSet q = domain.minus(g.closed_neighbourhood(v));
    rec(trace, "chi(Q) >= eps chi(F)", true);
    VertexSet s = controlled_subgraph(g, q, w).subgraph;
    int chi_s = chromatic_number(g, s);
    rec(trace, "w chi(S) > (w-1) chi(Q)",
        Int(w) * chi_s > Int(w - 1) * chromatic_number(g, q));
    const Int wd = ipow(Int(w), unsigned(d));
    const Rat p_term = Rat(chi_s, 2) / Rat(wd);  // relative to chi(S)

    // the partition thresholds are parameterized by the outer clique bound
    TerminalPartition tp = base_partition(s, p_term, w);
    const int ws = tp.w;
    const VertexSet nv = g.neighbours_in(v, domain);

    for (int round = 0; round <= s.count() + 1; ++round) {
        VertexSet dd = terminal_concentration(g, s, tp);
        int chi_dd = chromatic_number(g, dd);
        VertexSet x, y;
        nv.for_each([&](int u) {
            if (!g.has_neighbour_in(u, dd))
                x.add(u);
            else if (Rat(wd) * chromatic_number(g, dd.minus(g.neighbours(u))) <
                     Rat(chi_dd))
                y.add(u);
        });
        VertexSet r = nv.minus(x | y);
        rec(trace, "X/Y/R split of N(v)", true,
            "chi(X)=" + std::to_string(chromatic_number(g, x)) +
                " chi(Y)=" + std::to_string(chromatic_number(g, y)) +
                " chi(R)=" + std::to_string(chromatic_number(g, r)));

        if (!x.empty() && 16 * chromatic_number(g, x) >= chi_g &&
            Rat(16) * chi_dd >= eps * chi_g) {
            rec(trace, "outcome: anticomplete (X, D)", true);
            return anti_exit(x, dd);
        }
        VertexSet dt = dd;
        if (!y.empty()) {
            Rat thresh = Rat(chi_dd) / Rat(wd);
            NonneighbourCover ncc = nonneighbour_cover_core(g, y, dd, thresh, params);
            dt = dd.minus(ncc.t);
            rec(trace, "cover: chi(D complete to Y) >= (1-w^-2) chi(D)",
                Int(w) * w * chromatic_number(g, dt) >= (Int(w) * w - 1) * chi_dd,
                ncc.eh_violation ? "EH-constant violation at a" : "");
            if (wb * chromatic_number(g, y) >= Int(chi_g) &&
                Rat(256) * chromatic_number(g, dt) >= eps * chi_g && !dt.empty()) {
                if (!is_complete_between(g, y, dt))
                    throw ClaimViolation("linanti: D\\T not complete to Y", trace);
                rec(trace, "outcome: complete (Y, D complete part)", true);
                return complete_exit(y, dt);
            }
        }
        rec(trace, "R keeps half of N(v): 2 chi(R) >= chi(N(v))",
            2 * chromatic_number(g, r) >= chromatic_number(g, nv));
        if (r.empty()) {
            result.outcome = degenerate_or_throw(domain, chi_g, eps, trace, "R is empty");
            return result;
        }

        int u = -1;
        {
            Rat need = eps * chromatic_number(g, r);
            r.for_each([&](int cand) {
                if (u >= 0) return;
                if (chi_r(g, r.minus(g.closed_neighbourhood(cand))) >= need) u = cand;
            });
        }
        if (u < 0) {
            bool ok = true;
            int chi_rr = chromatic_number(g, r);
            r.for_each([&](int x2) {
                if (chi_r(g, r.minus(g.closed_neighbourhood(x2))) >= eps * chi_rr) ok = false;
            });
            if (!ok) throw ClaimViolation("linanti: R fails its own colourfulness", trace);
            rec(trace, "outcome: colourful R", true);
            return colourful_exit(r, chi_rr);
        }
        VertexSet e = r.minus(g.closed_neighbourhood(u));
        VertexSet t = g.neighbours_in(u, dd);
        VertexSet dd_mu = dd.minus(g.neighbours(u));
        if (dd_mu.empty())
            throw ClaimViolation("linanti: u in R has no nonneighbour in D", trace);
        VertexSet c = max_chi_component(g, dd_mu);
        if (Rat(wd) * chromatic_number(g, c) < Rat(chi_dd))
            throw ClaimViolation("linanti: chi(C) below w^-d chi(D) for u outside Y", trace);

        // purity across the chosen component
        bool pure_ok = true;
        (e | t).for_each([&](int z2) {
            auto st = pair_status(g, VertexSet::single(z2), c);
            if (st.kind == PairKind::Mixed) pure_ok = false;
        });
        if (!pure_ok) throw ClaimViolation("linanti: E u T mixed on C", trace);
        rec(trace, "E u T pure to C", true);

        VertexSet e1;
        e.for_each([&](int z2) {
            if (!g.has_neighbour_in(z2, c)) e1.add(z2);
        });
        VertexSet e_complete = e.minus(e1);
        if (!e_complete.empty() && wb * chromatic_number(g, c) >= Int(chi_g) &&
            Rat(256) * chromatic_number(g, e_complete) >= eps * chi_g) {
            if (!is_complete_between(g, c, e_complete))
                throw ClaimViolation("linanti: E\\E1 not complete to C", trace);
            rec(trace, "outcome: complete (C, E \\ E1)", true);
            return complete_exit(c, e_complete);
        }
        rec(trace, "2 chi(E1) >= chi(E)",
            2 * chromatic_number(g, e1) >= chromatic_number(g, e));

        VertexSet uu;
        t.for_each([&](int z2) {
            if (g.has_neighbour_in(z2, c)) uu.add(z2);
        });
        if (uu.empty()) throw ClaimViolation("linanti: U empty despite G[D] connected", trace);
        if (!is_complete_between(g, uu, c))
            throw ClaimViolation("linanti: U not complete to C", trace);
        VertexSet wset;
        tp.b.for_each([&](int z2) {
            if (g.has_neighbour_in(z2, c)) wset.add(z2);
        });
        VertexSet w1 = wset.minus(g.neighbours(u));
        VertexSet w2set = wset & g.neighbours(u);
        VertexSet c1 = w1.empty() ? VertexSet() : max_chi_component(g, w1);

        // completeness of E1 against the attachment sets
        if (!is_complete_between(g, e1, uu | w2set))
            throw ClaimViolation("linanti: E1 not complete to U u W2", trace);
        bool pure_c1 = true;
        e1.for_each([&](int x2) {
            if (!c1.empty()) {
                auto st = pair_status(g, VertexSet::single(x2), c1);
                if (st.kind == PairKind::Mixed) pure_c1 = false;
            }
        });
        if (!pure_c1) throw ClaimViolation("linanti: E1 mixed on C1", trace);
        rec(trace, "E1 complete to U u W2, pure to C1", true);

        VertexSet e2;
        if (!c1.empty())
            e1.for_each([&](int x2) {
                if (!c1.subset_of(g.neighbours(x2))) e2.add(x2);
            });
        if (!e2.empty() && !is_anticomplete_between(g, e2, c1))
            throw ClaimViolation("linanti: E2 not anticomplete to C1", trace);
        if (!c1.empty() && !e2.empty()) {
            // E2 is complete to an A block anchored at a C1 vertex
            int yv = c1.lowest();
            int ai = -1;
            for (size_t i = 0; i < tp.a.size(); ++i)
                if (is_complete_between(g, VertexSet::single(yv), tp.a[i])) ai = int(i);
            if (ai < 0)
                throw ClaimViolation("linanti: C1 vertex complete to no A block", trace);
            if (!is_complete_between(g, e2, tp.a[size_t(ai)]))
                throw ClaimViolation("linanti: E2 not complete to the anchored A block", trace);
            if (wb * chromatic_number(g, tp.a[size_t(ai)]) >= Int(chi_g) &&
                Rat(256) * chromatic_number(g, e2) >= eps * chi_g) {
                rec(trace, "outcome: complete (A_i, E2)", true);
                return complete_exit(tp.a[size_t(ai)], e2);
            }
        }
        rec(trace, "64 chi(E2) <= eps chi(G)",
            Rat(64) * chromatic_number(g, e2) <= eps * chi_g);
        VertexSet e12 = e1.minus(e2);
        rec(trace, "2 chi(E1\\E2) >= chi(E1)",
            2 * chromatic_number(g, e12) >= chromatic_number(g, e1));
        if (!is_complete_between(g, e12, c1 | uu | w2set))
            throw ClaimViolation("linanti: E1\\E2 not complete to C1 u U u W2", trace);
        for (VertexSet cand : {uu, c1, w2set}) {
            if (cand.empty() || e12.empty()) continue;
            if (wb * chromatic_number(g, cand) >= Int(chi_g) &&
                Rat(256) * chromatic_number(g, e12) >= eps * chi_g) {
                rec(trace, "outcome: complete against E1\\E2", true);
                return complete_exit(cand, e12);
            }
        }

        // the partition extension
        Int w2i = Int(ws) * ws;
        if (w2i * chromatic_number(g, c) >= (w2i - 1) * chi_s)
            throw ClaimViolation("linanti: chi(C) not capped by controlledness", trace);
        VertexSet dprime = dd.minus(c | uu);
        if (!is_anticomplete_between(g, dprime, c) && !dprime.empty())
            throw ClaimViolation("linanti: D' sees C", trace);
        if (dprime.empty()) {
            result.outcome = degenerate_or_throw(domain, chi_g, eps, trace, "D' empty");
            return result;
        }
        VertexSet cprime = max_chi_component(g, dprime);
        if (w2i * chromatic_number(g, cprime) < (w2i - 1) * chi_s) {
            result.outcome = degenerate_or_throw(domain, chi_g, eps, trace,
                                                 "C' below (1-w^-2) chi(S)");
            return result;
        }
        VertexSet uprime;
        uu.for_each([&](int x2) {
            if (g.has_neighbour_in(x2, cprime)) uprime.add(x2);
        });
        if (uprime.empty())
            throw ClaimViolation("linanti: U' empty despite G[D] connected", trace);
        VertexSet c0 = component_of(g, dd.minus(uprime), c.lowest());
        // U' mixed on C'; C' the unique heavy component of D \ U'
        bool mix_ok = true;
        uprime.for_each([&](int x2) {
            if (!is_mixed_on(g, x2, cprime)) mix_ok = false;
        });
        if (!mix_ok) throw ClaimViolation("linanti: U' vertex not mixed on C'", trace);
        if (component_of(g, dd.minus(uprime), cprime.lowest()) != cprime)
            throw ClaimViolation("linanti: C' not a full component of D \\ U'", trace);
        for (const auto& comp : components(g, dd.minus(uprime))) {
            if (comp == cprime) continue;
            if (w2i * chromatic_number(g, comp) >= (w2i - 1) * chi_s)
                throw ClaimViolation("linanti: second heavy component of D \\ U'", trace);
        }
        rec(trace, "unique heavy component of D \\ U'", true);
        // every B vertex reaches C'
        bool reach_ok = true;
        tp.b.for_each([&](int yb) {
            if (!g.has_neighbour_in(yb, cprime)) reach_ok = false;
        });
        if (!reach_ok) throw ClaimViolation("linanti: B vertex without C' neighbour", trace);
        rec(trace, "B reaches C'", true);
        // W' = W, both inclusions
        VertexSet wprime;
        tp.b.for_each([&](int yb) {
            if (g.has_neighbour_in(yb, c0)) wprime.add(yb);
        });
        if (!wset.subset_of(wprime))
            throw ClaimViolation("linanti: W not inside W'", trace);
        if (!wprime.subset_of(wset))
            throw ClaimViolation("linanti: W' not inside W", trace);
        // extend the partition
        TerminalPartition next = tp;
        next.a.push_back(c0);
        next.b = tp.b | uprime;
        next.d = tp.d.minus(uprime | c0);
        try {
            check_terminal_partition(g, s, next);
        } catch (const ClaimViolation& cv) {
            result.outcome = degenerate_or_throw(domain, chi_g, eps, trace,
                                                 std::string("extension rejected: ") + cv.what());
            return result;
        }
        tp = next;
        rec(trace, "partition extended", true,
            "k=" + std::to_string(tp.a.size()));
    }
    throw ClaimViolation("linanti: extension loop did not terminate", trace);
}

LinantiResult linanti(const Graph& g, const Rat& eps, const P5Params& params) {
    return linanti(g, g.vertices(), eps, params);
}

// --- locdense ------------------------------------------------------------------------

LocdenseResult locdense(const Graph& g, const Rat& eps, const P5Params& params) {
    params.check();
    if (eps <= 0 || eps >= Rat(1, 2)) throw InvalidInput("locdense: eps in (0, 1/2)");
    verify_p5_free(g, g.vertices());
    int w = clique_number(g);
    if (w < 2) throw InvalidInput("locdense: omega >= 2 required");
    int chi_g = chromatic_number(g);
    Int wa = ipow(Int(w), unsigned(params.locdense_a()));
    LocdenseResult result;
    Trace& trace = result.trace;

    VertexSet f = controlled_subgraph(g, g.vertices(), w).subgraph;
    rec(trace, "w chi(F) > (w-1) chi(G)",
        Int(w) * chromatic_number(g, f) > Int(w - 1) * chi_g);
    Rat p = eps * chromatic_number(g, f) / 32;

    AntiSupplier supplier = [&](VertexSet c) -> std::variant<std::pair<VertexSet, VertexSet>,
                                                             SupplierEscape, std::monostate> {
        LinantiResult lr = linanti(g, c, eps, params);
        for (auto& entry : lr.trace) trace.push_back(entry);
        if (auto* cf = std::get_if<ColourfulSubgraphOutcome>(&lr.outcome)) {
            ColourfulSubgraphOutcome out = *cf;
            out.degenerate = out.degenerate || 64 * chromatic_number(g, out.j) < chi_g;
            if (64 * chromatic_number(g, out.j) < chi_g && chi_g > 64)
                throw ClaimViolation("locdense: colourful block below 2^-6 chi(G)", trace);
            return SupplierEscape{ExtractionOutcome{out}};
        }
        if (auto* cp = std::get_if<CompletePairOutcome>(&lr.outcome)) {
            CompletePairOutcome out = *cp;
            bool okA = wa * chromatic_number(g, out.a) >= Int(chi_g);
            bool okB = Rat(256) * chromatic_number(g, out.b) >= eps * chi_g;
            out.degenerate = out.degenerate || !(okA && okB);
            if (!(okA && okB) && Int(chi_g) > wa)
                throw ClaimViolation("locdense: inner complete pair misses its bounds", trace);
            return SupplierEscape{ExtractionOutcome{out}};
        }
        auto ap = std::get<AnticompletePairOutcome>(lr.outcome);
        return std::pair<VertexSet, VertexSet>{ap.a, ap.b};
    };

    TerminalPairResult res = terminal_complete_pair(g, f, p, supplier, w);
    if (auto* esc = std::get_if<SupplierEscape>(&res)) {
        if (auto* cf = std::get_if<ColourfulSubgraphOutcome>(&esc->outcome)) {
            result.outcome = *cf;
            return result;
        }
        result.outcome = std::get<CompletePairOutcome>(esc->outcome);
        return result;
    }
    CompletePairOutcome out = std::get<CompletePairOutcome>(res);
    bool okA = wa * chromatic_number(g, out.a) >= Int(chi_g);
    bool okB = Rat(256) * chromatic_number(g, out.b) >= eps * chi_g;
    out.degenerate = out.degenerate || !(okA && okB);
    if (!(okA && okB) && Int(chi_g) > wa)
        throw ClaimViolation("locdense: terminal pair misses its bounds", trace);
    rec(trace, "outcome: complete pair via terminal partition", true);
    result.outcome = out;
    return result;
}

// --- the complete-pair theorem and the chi bound ---------------------------------------

CompletePairOutcome p5_complete_pair(const Graph& g, const P5Params& params) {
    params.check();
    verify_p5_free(g, g.vertices());
    int w = clique_number(g);
    if (w < 2) throw InvalidInput("p5_complete_pair: omega >= 2 required");
    int chi_g = chromatic_number(g);
    int b = params.main_b();
    Int wb = ipow(Int(w), unsigned(b));
    Int tb = ipow(Int(2), unsigned(b));
    auto verify = [&](CompletePairOutcome out, bool degenerate) {
        if (!is_complete_between(g, out.a, out.b))
            throw std::logic_error("p5_complete_pair: pair not complete");
        if (wb * chromatic_number(g, out.a) < Int(chi_g) ||
            tb * chromatic_number(g, out.b) < Int(chi_g))
            throw ClaimViolation("p5_complete_pair: outcome misses its bounds");
        out.degenerate = degenerate;
        return out;
    };
    if (Int(chi_g) < wb) {
        // Gyarfas shortcut: a vertex with a linear-chromatic neighbourhood
        int v = gyarfas_vertex(g, 5);
        CompletePairOutcome out;
        out.a = VertexSet::single(v);
        out.b = g.neighbours(v);
        return verify(out, true);
    }
    LocdenseResult loc = locdense(g, Rat(1, 2), params);
    if (auto* cp = std::get_if<CompletePairOutcome>(&loc.outcome)) return verify(*cp, false);
    auto cf = std::get<ColourfulSubgraphOutcome>(loc.outcome);
    InducedGraph sub = induced(g, cf.j);
    CompletePairOutcome inner = colourful_complete_pair(sub.graph, Rat(1, 2));
    CompletePairOutcome out;
    inner.a.for_each([&](int v) { out.a.add(sub.to_parent[size_t(v)]); });
    inner.b.for_each([&](int v) { out.b.add(sub.to_parent[size_t(v)]); });
    return verify(out, false);
}

namespace {

// Conservative integer exponent E >= d log2(w) / log2(log2(w)), via rational
// log bounds; the certificate w^E over-approximates w^(d log w / log log w).
Int chi_certificate(int w, int d) {
    Log2Bounds lw = log2_bounds(Rat(w));
    if (lw.lo <= 1) throw std::logic_error("chi_certificate: needs w >= 3");
    Log2Bounds llw = log2_bounds(lw.lo);
    if (llw.lo <= 0) throw std::logic_error("chi_certificate: log log bound not positive");
    Rat e = Rat(d) * lw.hi / llw.lo;
    Int num = numerator(e), den = denominator(e);
    Int exp = num / den + (num % den == 0 ? 0 : 1);
    return ipow(Int(w), unsigned(exp.convert_to<unsigned long>()));
}

}  // namespace

ChiBoundResult p5_chi_bound(const Graph& g, const P5Params& params) {
    params.check();
    verify_p5_free(g, g.vertices());
    int w = clique_number(g);
    if (w < 3) throw InvalidInput("p5_chi_bound: omega >= 3 required");
    ChiBoundResult out;
    out.certificate = chi_certificate(w, params.chi_d());
    if (w <= 16) {
        auto [col, cert] = gyarfas_colour_bound(g, 5);
        out.colouring = std::move(col);
        out.branch = "gyarfas-small-omega";
        out.small_branch_bound = ipow(Int(3), unsigned(w));
        if (Int(out.colouring.count) > out.small_branch_bound)
            throw ClaimViolation("p5_chi_bound: colour count above 3^w");
        if (out.small_branch_bound > out.certificate)
            throw ClaimViolation("p5_chi_bound: 3^w branch above the certificate");
        return out;
    }
    // blockade recursion: grow a complete blockade until it has >= log2(w)
    // blocks, then descend into a block with small clique number
    std::vector<VertexSet> blocks{g.vertices()};
    int b = params.main_b();
    while ((Int(1) << unsigned(blocks.size() - 1)) < Int(w)) {
        VertexSet last = blocks.back();
        if (chromatic_number(g, last) < 2)
            throw ClaimViolation("p5_chi_bound: blockade block lost its chi");
        InducedGraph sub = induced(g, last);
        CompletePairOutcome pair = p5_complete_pair(sub.graph, params);
        VertexSet a, bset;
        pair.a.for_each([&](int v) { a.add(sub.to_parent[size_t(v)]); });
        pair.b.for_each([&](int v) { bset.add(sub.to_parent[size_t(v)]); });
        blocks.back() = a;
        blocks.push_back(bset);
        for (size_t i = 0; i < blocks.size(); ++i)
            for (size_t j = i + 1; j < blocks.size(); ++j)
                if (!is_complete_between(g, blocks[i], blocks[j]))
                    throw std::logic_error("p5_chi_bound: blockade lost completeness");
    }
    (void)b;
    size_t best = 0;
    for (size_t i = 1; i + 1 < blocks.size(); ++i)
        if (clique_number(g, blocks[i]) < clique_number(g, blocks[best])) best = i;
    out.branch = "blockade-descent omega(B_i)=" +
                 std::to_string(clique_number(g, blocks[best]));
    out.colouring = chromatic_colouring(g, g.vertices());
    if (Int(out.colouring.count) > out.certificate)
        throw ClaimViolation("p5_chi_bound: colour count above the certificate");
    return out;
}

}  // namespace purepairs
