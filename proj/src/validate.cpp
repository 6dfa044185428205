#include "purepairs/validate.hpp"

#include "purepairs/generators.hpp"
#include "purepairs/rng.hpp"

namespace purepairs {

namespace {

Rat chi_r(const Graph& g, VertexSet s) { return Rat(chromatic_number(g, s)); }

}  // namespace

ValidationResult validate_gyarfas_vertex(const Graph& g, int k, int v) {
    ValidationResult r;
    int chi_g = chromatic_number(g);
    int chi_n = chromatic_number(g, g.neighbours(v));
    r.require((k - 2) * chi_n >= chi_g, "(k-2) chi(N(v)) >= chi(G)");
    r.margin("chi_neighbourhood_ratio", chi_g ? Rat(chi_n, chi_g) : Rat(0));
    return r;
}

ValidationResult validate_gyarfas_bound(const Graph& g, int k, const Colouring& col,
                                        const GyarfasBoundCertificate& cert) {
    ValidationResult r;
    r.require(col.domain == g.vertices(), "colouring covers V(G)");
    r.require(col.proper(g), "colouring proper");
    int w = clique_number(g);
    Int bound = w >= 1 ? ipow(Int(k - 2), unsigned(w - 1)) : Int(1);
    r.require(Int(col.count) <= bound, "count <= (k-2)^(w-1)");
    r.require(cert.bound == bound, "certificate bound matches");
    r.margin("colours", Rat(col.count));
    return r;
}

ValidationResult validate_min_degree_core(const Graph& g, int p, const MinDegreeCore& core) {
    ValidationResult r;
    int chi_g = chromatic_number(g);
    r.require(!core.core.empty(), "core nonempty");
    bool deg_ok = true;
    core.core.for_each([&](int v) {
        if (g.degree_in(v, core.core) < p) deg_ok = false;
    });
    r.require(deg_ok, "min degree >= p");
    int chi_f = chromatic_number(g, core.core);
    r.require(chi_f >= chi_g - p, "chi(F) >= chi(G) - p");
    r.margin("chi_drop", Rat(chi_g - chi_f));
    return r;
}

ValidationResult validate_controlled_subgraph(const Graph& g, int q,
                                              const ControlledSubgraph& cs) {
    ValidationResult r;
    r.require(!cs.subgraph.empty(), "J nonempty");
    r.require(is_connected(g, cs.subgraph), "J connected");
    int chi_j = chromatic_number(g, cs.subgraph);
    Int q2 = Int(q) * q;
    bool ctrl = true;
    cs.subgraph.for_each([&](int v) {
        if (q2 * chromatic_number(g, g.neighbours_in(v, cs.subgraph)) >= (q2 - 1) * chi_j)
            ctrl = false;
    });
    r.require(ctrl, "chi(N_J(v)) < (1-q^-2) chi(J) for all v");
    int w = clique_number(g);
    int chi_g = chromatic_number(g);
    r.require(q2 * chi_j > (q2 - Int(w)) * chi_g, "chi(J) > (1 - w q^-2) chi(G)");
    r.require(is_clique(g, VertexSet::from(cs.clique_trace)), "trace is a clique");
    r.margin("chi_J_over_chi_G", chi_g ? Rat(chi_j, chi_g) : Rat(0));
    return r;
}

ValidationResult validate_vivid(const Graph& g, const Blockade& blockade, const Rat& eps,
                                const VividResult& res) {
    ValidationResult r;
    int k = int(blockade.blocks.size());
    if (auto* tc = std::get_if<TransversalClique>(&res)) {
        r.require(int(tc->clique.size()) == k, "one vertex per block");
        for (int i = 0; i < k; ++i)
            r.require(blockade.blocks[size_t(i)].contains(tc->clique[size_t(i)]),
                      "clique vertex inside its block");
        r.require(is_clique(g, VertexSet::from(tc->clique)), "transversal pairwise adjacent");
        r.require(k <= clique_number(g), "k <= omega(G)");
        // the recorded margins must all sit strictly below their thresholds
        for (const auto& m : tc->certificate.margins)
            r.require(Rat(m.chi_nonneighbours) < m.threshold, "recorded margin strict");
    } else if (auto* nv = std::get_if<NotVivid>(&res)) {
        r.require(nv->i < nv->j && nv->j < k, "violation indices ordered");
        r.require(blockade.blocks[size_t(nv->j)].contains(nv->v), "violating vertex in B_j");
        Rat thresh = eps * chi_r(g, blockade.blocks[size_t(nv->i)]);
        r.require(chi_r(g, blockade.blocks[size_t(nv->i)].minus(g.neighbours(nv->v))) >= thresh,
                  "violation margin reaches the threshold");
    } else {
        // greedy got stuck: only possible when eps > 1/omega
        r.require(eps * clique_number(g) > 1, "stuck only with eps above 1/omega");
    }
    return r;
}

ValidationResult validate_near_pure(const Graph& g, const Graph& h, const Rat& eps,
                                    const Submeasure& mu, const NearPurePairOutcome& out) {
    ValidationResult r;
    r.require(!out.a.empty() && !out.b.empty(), "sides nonempty");
    r.require(!out.a.intersects(out.b), "sides disjoint");
    int hn = h.size();
    Rat bound = Rat(1, 2 * hn) * rpow(eps, hn - 2) * mu(g, g.vertices());
    Rat mu_a = mu(g, out.a), mu_b = mu(g, out.b);
    r.require(mu_a >= bound && mu_b >= bound, "mu(A), mu(B) >= (2|H|)^-1 eps^(|H|-2) mu(G)");
    Rat side = eps * mu_a;
    bool dir_ok = true;
    out.b.for_each([&](int v) {
        Rat val = out.direction == PureDirection::Sparse
                      ? mu(g, out.a & g.neighbours(v))
                      : mu(g, out.a.minus(g.neighbours(v)));
        if (val >= side) dir_ok = false;
    });
    r.require(dir_ok, "sparse/dense inequality for every v in B");
    r.require(out.depth <= hn, "recursion depth <= |H|");
    r.margin("mu_a", mu_a);
    r.margin("mu_b", mu_b);
    r.margin("bound", bound);
    r.degenerate = out.degenerate;
    return r;
}

ValidationResult validate_quasi(const Graph& g, const Graph& h, const Rat& eps,
                                const Submeasure& mu, const QuasiResult& res) {
    ValidationResult r;
    int w = clique_number(g);
    int hn = h.size();
    Rat mu_g = mu(g, g.vertices());
    if (auto* ss = std::get_if<StableSetOutcome>(&res)) {
        r.require(is_stable_set(g, ss->set), "S stable");
        r.require(w <= 1 || ss->exponent <= 2 * hn * floor_log2(Int(std::max(w, 1))),
                  "exponent within 2|H| log2(w)");
        Rat bound = rpow(eps, ss->exponent) * mu_g;
        r.require(mu(g, ss->set) >= bound, "mu(S) >= eps^exponent mu(G)");
        r.margin("mu_s", mu(g, ss->set));
        r.margin("bound", bound);
    } else {
        const auto& np = std::get<NearPurePairOutcome>(res);
        r.require(np.direction == PureDirection::Sparse, "second outcome is the sparse one");
        r.require(!np.a.empty() && !np.b.empty() && !np.a.intersects(np.b), "pair well formed");
        Rat bound = rpow(eps, np.exponent) * mu_g;
        r.require(mu(g, np.a) >= bound && mu(g, np.b) >= bound,
                  "mu(A), mu(B) >= eps^exponent mu(G)");
        r.require(np.exponent <= 2 * hn * floor_log2(Int(std::max(w, 2))),
                  "exponent within 2|H| log2(w)");
        Rat side = eps * mu(g, np.a);
        bool ok = true;
        np.b.for_each([&](int v) {
            if (mu(g, np.a & g.neighbours(v)) >= side) ok = false;
        });
        r.require(ok, "mu(A cap N(v)) < eps mu(A) for all v in B");
        r.require(np.depth <= hn, "recursion depth <= |H|");
    }
    return r;
}

ValidationResult validate_tbroom_decompose(const Graph& g, int t,
                                           const TbroomDecomposition& dec) {
    ValidationResult r;
    int w = clique_number(g);
    int chi_g = chromatic_number(g);
    long long rr = ramsey(t, w);
    r.require(!dec.s.empty() && !dec.p.empty(), "S, P nonempty");
    r.require(!dec.s.intersects(dec.p), "S, P disjoint");
    r.require(chi_g <= chromatic_number(g, dec.s) + chromatic_number(g, dec.p),
              "chi(G) <= chi(S) + chi(P)");
    r.require(w * chromatic_number(g, dec.p) >= chi_g, "omega chi(P) >= chi(G)");
    bool near = true, degen = true;
    dec.s.for_each([&](int u) {
        VertexSet rest = dec.p.minus(g.neighbours(u));
        if (chromatic_number(g, rest) > 2 * rr - 1) near = false;
        if (degeneracy(g, rest).degeneracy > 2 * (rr - 1)) degen = false;
    });
    r.require(near, "chi(P \\ N(u)) <= 2R(t,w)-1 for all u in S");
    r.require(degen, "degeneracy(P \\ N(u)) <= 2(R(t,w)-1) for all u in S");
    r.margin("R", Rat(rr));
    return r;
}

ValidationResult validate_tbroom_colour(const Graph& g, int t, const ColouringOutcome& out) {
    ValidationResult r;
    int w = std::max(clique_number(g), 1);
    r.require(out.colouring.domain == g.vertices(), "colouring covers V(G)");
    r.require(out.colouring.proper(g), "colouring proper");
    r.require(Int(out.colouring.count) <= Int(2) * w * w * ramsey(t, w),
              "count <= 2 w^2 R(t,w)");
    r.require(out.colouring.count >= chromatic_number(g), "count >= chi(G)");
    r.margin("colours", Rat(out.colouring.count));
    return r;
}

ValidationResult validate_star(const Graph& g, VertexSet f, VertexSet a, VertexSet b, int t,
                               const Rat& q, int w, const StarResult& res) {
    ValidationResult r;
    if (auto* xy = std::get_if<StarPairXY>(&res)) {
        r.require(xy->x.subset_of(a) && xy->y.subset_of(b), "(X,Y) inside (A,B)");
        r.require(clique_number(g, xy->x) + clique_number(g, xy->y) <= clique_number(g, f),
                  "omega(X) + omega(Y) <= omega(F)");
        r.require(Int(a.minus(xy->x).count()) < ipow(Int(w), unsigned(t + 2)),
                  "|A \\ X| < w^(t+2)");
        r.require(chi_r(g, b.minus(xy->y)) < q, "chi(B \\ Y) < q");
    } else {
        const auto& st = std::get<StarAnticompleteStable>(res);
        r.require(st.p.subset_of(a) && st.q.subset_of(b), "(P,Q) inside (A,B)");
        r.require(is_stable_set(g, st.p) && st.p.count() == t, "P stable of size t");
        r.require(is_anticomplete_between(g, st.p, st.q), "P anticomplete to Q");
        Rat need = q / Rat(ipow(Int(w), unsigned(t * (t + 2))));
        r.require(chi_r(g, st.q) >= need, "chi(Q) >= w^(-t(t+2)) q");
        r.margin("chi_q", chi_r(g, st.q));
    }
    return r;
}

ValidationResult validate_covering(const Graph& g, int k, const CoveringResult& res) {
    ValidationResult r;
    int w = clique_number(g);
    int chi_g = chromatic_number(g);
    if (auto* pair = std::get_if<AnticompletePairOutcome>(&res)) {
        r.require(!pair->a.empty() && !pair->b.empty(), "pair nonempty");
        r.require(is_anticomplete_between(g, pair->a, pair->b), "pair anticomplete");
        Rat need = Rat(Int(chi_g), ipow(Int(w), unsigned(8 * k)));
        bool ok = chi_r(g, pair->a) >= need && chi_r(g, pair->b) >= need;
        r.require(ok, "chi >= w^(-8k) chi(G) on both sides");
        r.degenerate = pair->degenerate;
        return r;
    }
    const auto& cb = std::get<CoveringBlockadeOutcome>(res);
    r.degenerate = cb.degenerate;
    r.require(int(cb.d.size()) == k, "k blocks");
    // structural bullets, straight from the definition
    VertexSet seen = cb.e;
    for (const auto& d : cb.d) {
        r.require(!d.empty(), "D block nonempty");
        r.require(!d.intersects(seen), "blocks disjoint");
        seen = seen | d;
    }
    r.require(!cb.e.empty(), "E nonempty");
    for (size_t i = 1; i < cb.d.size(); ++i) {
        bool chain = true;
        VertexSet earlier;
        for (size_t j = 0; j + 1 < i; ++j) earlier = earlier | cb.d[j];
        cb.d[i].for_each([&](int v) {
            if (!g.has_neighbour_in(v, cb.d[i - 1])) chain = false;
            if (g.has_neighbour_in(v, earlier)) chain = false;
        });
        r.require(chain, "chain bullet for D_" + std::to_string(i + 1));
    }
    VertexSet head;
    for (size_t j = 0; j + 1 < cb.d.size(); ++j) head = head | cb.d[j];
    r.require(is_anticomplete_between(g, cb.e, head), "E anticomplete to D_1..D_{k-1}");
    // chi thresholds (degenerate below 1 is fine: blocks are nonempty)
    Rat need = Rat(Int(chi_g), ipow(Int(w), unsigned(6 * k)));
    r.require(chi_r(g, cb.d.back()) >= need || need <= 1, "chi(D_k) >= w^(-6k) chi(G)");
    r.require(chi_r(g, cb.e) >= need || need <= 1, "chi(E) >= w^(-6k) chi(G)");
    // sampled covering property at X = D_k, plus the recorded queries
    for (const VertexSet& y : covering_sample_ys(g, cb.e, w, 100))
        r.require(covering_q_form_holds(g, cb.d.back(), y, w),
                  "sampled covering property at X = D_k");
    // sampled existence form: every heavy X <= D_k keeps a good vertex
    Int w2 = Int(w) * w;
    int chi_dk = chromatic_number(g, cb.d.back());
    auto [s0, s1] = g.signature();
    Rng xrng(Rng::derive(s0 + s1, 0xBADC));
    for (const VertexSet& y : covering_sample_ys(g, cb.e, w, 20)) {
        VertexSet bad = covering_bad_set(g, cb.d.back(), y, w);
        for (int attempt = 0; attempt < 5; ++attempt) {
            VertexSet x = attempt == 0 ? cb.d.back()
                                       : VertexSet(xrng.next() & cb.d.back().bits());
            if (x.empty()) continue;
            if (w2 * chromatic_number(g, x) < (w2 - 1) * chi_dk) continue;
            r.require((x & bad) != x, "heavy X keeps a good vertex");
        }
    }
    for (const auto& qr : cb.queries)
        r.require(w2 * qr.chi_bad < (w2 - 1) * qr.chi_dk, "recorded downstream query");
    return r;
}

ValidationResult validate_broom_anti(const Graph& g, int k, int t, const BroomResult& res) {
    ValidationResult r;
    int w = clique_number(g);
    int chi_g = chromatic_number(g);
    Rat need = Rat(Int(chi_g), ipow(Int(w), unsigned(broom_exponent(k, t))));
    if (auto* pair = std::get_if<AnticompletePairOutcome>(&res)) {
        r.require(!pair->a.empty() && !pair->b.empty(), "pair nonempty");
        r.require(is_anticomplete_between(g, pair->a, pair->b), "pair anticomplete");
        r.require(chi_r(g, pair->a) >= need && chi_r(g, pair->b) >= need,
                  "chi >= w^-d chi(G) on both sides");
        r.degenerate = pair->degenerate;
        return r;
    }
    const auto& bp = std::get<BroomPairOutcome>(res);
    r.require(!bp.q.empty(), "Q nonempty");
    r.require(!bp.broom.intersects(bp.q), "broom disjoint from Q");
    r.require(is_anticomplete_between(g, bp.broom, bp.q), "broom anticomplete to Q");
    r.require(bp.broom.count() == k + t, "broom has k + t vertices");
    InducedGraph sub = induced(g, bp.broom);
    r.require(find_induced_copy(broom_graph(k, t), sub.graph).has_value() &&
                  sub.graph.edge_count() == broom_graph(k, t).edge_count(),
              "broom isomorphic to broom(k,t)");
    r.require(chi_r(g, bp.q) >= need, "chi(Q) >= w^-d chi(G)");
    r.degenerate = bp.degenerate;
    return r;
}

ValidationResult validate_terminal_partition(const Graph& g, VertexSet domain,
                                             const TerminalPartition& tp) {
    ValidationResult r;
    try {
        check_terminal_partition(g, domain, tp);
    } catch (const ClaimViolation& cv) {
        r.require(false, cv.what());
    }
    try {
        terminal_concentration(g, domain, tp);
    } catch (const ClaimViolation& cv) {
        r.require(false, cv.what());
    }
    return r;
}

ValidationResult validate_complete_pair_bounds(const Graph& g, const CompletePairOutcome& out,
                                               const Rat& need_a, const Rat& need_b) {
    ValidationResult r;
    r.require(!out.a.empty() && !out.b.empty(), "pair nonempty");
    r.require(!out.a.intersects(out.b), "pair disjoint");
    r.require(is_complete_between(g, out.a, out.b), "pair complete");
    r.require(chi_r(g, out.a) >= need_a, "chi(A) bound");
    r.require(chi_r(g, out.b) >= need_b, "chi(B) bound");
    r.margin("chi_a", chi_r(g, out.a));
    r.margin("chi_b", chi_r(g, out.b));
    r.degenerate = out.degenerate;
    return r;
}

namespace {

ValidationResult validate_colourful_outcome(const Graph& g, const ColourfulSubgraphOutcome& cf,
                                            const Rat& eps, const Rat& need_chi) {
    ValidationResult r;
    r.require(!cf.j.empty(), "J nonempty");
    int chi_j = chromatic_number(g, cf.j);
    bool col = true;
    cf.j.for_each([&](int v) {
        if (Rat(chromatic_number(g, cf.j.minus(g.closed_neighbourhood(v)))) >= eps * chi_j)
            col = false;
    });
    r.require(col, "J eps-colourful");
    r.require(Rat(chi_j) >= need_chi || need_chi <= 1, "chi(J) bound");
    r.degenerate = cf.degenerate;
    return r;
}

}  // namespace

ValidationResult validate_linanti(const Graph& g, const Rat& eps, const P5Params& params,
                                  const LinantiResult& res) {
    int chi_g = chromatic_number(g);
    int w = clique_number(g);
    if (auto* cf = std::get_if<ColourfulSubgraphOutcome>(&res.outcome))
        return validate_colourful_outcome(g, *cf, eps, Rat(chi_g, 16));
    if (auto* ap = std::get_if<AnticompletePairOutcome>(&res.outcome)) {
        ValidationResult r;
        r.require(!ap->a.empty() && !ap->b.empty(), "pair nonempty");
        r.require(is_anticomplete_between(g, ap->a, ap->b), "pair anticomplete");
        bool ok = 16 * chromatic_number(g, ap->a) >= chi_g &&
                  Rat(16) * chromatic_number(g, ap->b) >= eps * chi_g;
        r.require(ok || chi_g <= 16, "2^-4 thresholds (or degenerate)");
        r.degenerate = ap->degenerate;
        return r;
    }
    const auto& cp = std::get<CompletePairOutcome>(res.outcome);
    Rat need_a = Rat(Int(chi_g), ipow(Int(w), unsigned(params.linanti_b())));
    Rat need_b = eps * chi_g / 256;
    return validate_complete_pair_bounds(g, cp, need_a, need_b);
}

ValidationResult validate_locdense(const Graph& g, const Rat& eps, const P5Params& params,
                                   const LocdenseResult& res) {
    int chi_g = chromatic_number(g);
    int w = clique_number(g);
    if (auto* cf = std::get_if<ColourfulSubgraphOutcome>(&res.outcome))
        return validate_colourful_outcome(g, *cf, eps, Rat(chi_g, 64));
    const auto& cp = std::get<CompletePairOutcome>(res.outcome);
    Rat need_a = Rat(Int(chi_g), ipow(Int(w), unsigned(params.locdense_a())));
    Rat need_b = eps * chi_g / 256;
    return validate_complete_pair_bounds(g, cp, need_a, need_b);
}

ValidationResult validate_p5_pair(const Graph& g, const P5Params& params,
                                  const CompletePairOutcome& out) {
    int chi_g = chromatic_number(g);
    int w = clique_number(g);
    int b = params.main_b();
    Rat need_a = Rat(Int(chi_g), ipow(Int(w), unsigned(b)));
    Rat need_b = Rat(Int(chi_g), ipow(Int(2), unsigned(b)));
    return validate_complete_pair_bounds(g, out, need_a, need_b);
}

ValidationResult validate_p5_chi(const Graph& g, const P5Params& params,
                                 const ChiBoundResult& res) {
    ValidationResult r;
    int w = clique_number(g);
    r.require(res.colouring.domain == g.vertices(), "colouring covers V(G)");
    r.require(res.colouring.proper(g), "colouring proper");
    r.require(Int(res.colouring.count) <= res.certificate, "count <= certificate");
    if (w <= 16)
        r.require(Int(res.colouring.count) <= ipow(Int(3), unsigned(w)), "count <= 3^w");
    (void)params;
    r.margin("colours", Rat(res.colouring.count));
    return r;
}

ValidationResult validate_colourful_pair(const Graph& g, const Rat& eps,
                                         const CompletePairOutcome& out) {
    int chi_g = chromatic_number(g);
    int w = clique_number(g);
    Rat need_a = Rat(Int(chi_g), ipow(Int(w), 32));
    Rat need_b = (1 - eps) * chi_g / 2;
    return validate_complete_pair_bounds(g, out, need_a, need_b);
}

}  // namespace purepairs
