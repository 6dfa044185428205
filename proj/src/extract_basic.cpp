#include "purepairs/extract_basic.hpp"

#include "purepairs/generators.hpp"

#include <algorithm>

namespace purepairs {

namespace {

Rat chi_r(const Graph& g, VertexSet s) { return Rat(chromatic_number(g, s)); }

void verify_pk_free(const Graph& g, VertexSet domain, int k) {
    if (k < 4) throw InvalidInput("path length k must be >= 4");
    if (auto copy = find_induced_copy_in(path_graph(k), g, domain))
        throw NotHFree("input contains an induced P_" + std::to_string(k), *copy);
}

int gyarfas_vertex_in(const Graph& g, VertexSet domain, int k, bool verify) {
    if (verify) verify_pk_free(g, domain, k);
    int chi_g = chromatic_number(g, domain);
    if (chi_g < 2) throw InvalidInput("gyarfas_vertex: chi(G) >= 2 required");
    int found = -1;
    domain.for_each([&](int v) {
        if (found >= 0) return;
        int chi_n = chromatic_number(g, g.neighbours_in(v, domain));
        if ((k - 2) * chi_n >= chi_g) found = v;
    });
    if (found >= 0) return found;
    // The theorem guarantees the scan succeeds on P_k-free inputs; diagnose.
    auto diag = gyarfas_grow_path(g, domain, k);
    if (std::holds_alternative<int>(diag)) return std::get<int>(diag);
    throw NotHFree("gyarfas_vertex: path growth produced an induced P_k on verified input",
                   std::get<std::vector<int>>(diag));
}

}  // namespace

int gyarfas_vertex(const Graph& g, VertexSet domain, int k) {
    return gyarfas_vertex_in(g, domain, k, true);
}

int gyarfas_vertex(const Graph& g, int k) { return gyarfas_vertex(g, g.vertices(), k); }

std::variant<int, std::vector<int>> gyarfas_grow_path(const Graph& g, VertexSet domain, int k) {
    int chi_g = chromatic_number(g, domain);
    VertexSet comp = max_chi_component(g, domain);
    auto big_neighbourhood = [&](int v) {
        return (k - 2) * chromatic_number(g, g.neighbours_in(v, comp)) >= chi_g;
    };
    int v1 = comp.lowest();
    if (big_neighbourhood(v1)) return v1;
    VertexSet rest = comp.minus(g.closed_neighbourhood(v1));
    if (rest.empty()) throw std::logic_error("gyarfas_grow_path: degenerate start");
    VertexSet d = max_chi_component(g, rest);
    std::vector<int> path{v1};
    // v2: a neighbour of v1 seeing d
    {
        int v2 = -1;
        g.neighbours_in(v1, comp).for_each([&](int u) {
            if (v2 < 0 && g.has_neighbour_in(u, d)) v2 = u;
        });
        if (v2 < 0) throw std::logic_error("gyarfas_grow_path: no bridge into the component");
        path.push_back(v2);
    }
    while (true) {
        if (int(path.size()) == k) return path;
        int tail = path.back();
        if (big_neighbourhood(tail)) return tail;
        if (int(path.size()) == k - 1) {
            VertexSet nb = g.neighbours_in(tail, d);
            if (nb.empty()) throw std::logic_error("gyarfas_grow_path: lost contact");
            path.push_back(nb.lowest());
            return path;
        }
        VertexSet shrunk = d.minus(g.neighbours(tail));
        if (shrunk.empty()) throw std::logic_error("gyarfas_grow_path: neighbourhood swallowed D");
        VertexSet d2 = max_chi_component(g, shrunk);
        int next = -1;
        g.neighbours_in(tail, d).for_each([&](int u) {
            if (next < 0 && g.has_neighbour_in(u, d2)) next = u;
        });
        if (next < 0) throw std::logic_error("gyarfas_grow_path: D disconnected from D'");
        path.push_back(next);
        d = d2;
    }
}

std::pair<Colouring, GyarfasBoundCertificate> gyarfas_colour_bound(const Graph& g, int k) {
    verify_pk_free(g, g.vertices(), k);
    GyarfasBoundCertificate cert;
    int w = clique_number(g);
    cert.bound = w >= 1 ? ipow(Int(k - 2), unsigned(w - 1)) : Int(1);
    VertexSet s = g.vertices();
    while (chromatic_number(g, s) >= 2) {
        int v = gyarfas_vertex_in(g, s, k, false);
        cert.chain.push_back(v);
        s = g.neighbours_in(v, s);
        cert.chain_chi.push_back(chromatic_number(g, s));
    }
    if (int(cert.chain.size()) > std::max(w - 1, 0))
        throw std::logic_error("gyarfas_colour_bound: descent longer than omega - 1");
    Colouring col = chromatic_colouring(g, g.vertices());
    if (Int(col.count) > cert.bound)
        throw std::logic_error("gyarfas_colour_bound: exact colouring above certified bound");
    return {std::move(col), std::move(cert)};
}

MinDegreeCore min_degree_core(const Graph& g, VertexSet domain, int p) {
    int chi_g = chromatic_number(g, domain);
    if (chi_g <= p) throw InvalidInput("min_degree_core: chi(G) > p required");
    MinDegreeCore out;
    VertexSet cur = domain;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t m = cur.bits(); m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (g.degree_in(v, cur) < p) {
                cur.remove(v);
                out.removed.push_back(v);
                changed = true;
                break;
            }
        }
    }
    out.core = cur;
    if (cur.empty() || chromatic_number(g, cur) < chi_g - p)
        throw std::logic_error("min_degree_core: chi drop exceeded p");
    return out;
}

MinDegreeCore min_degree_core(const Graph& g, int p) {
    return min_degree_core(g, g.vertices(), p);
}

ControlledSubgraph controlled_subgraph(const Graph& g, VertexSet domain, int q) {
    if (q < 2) throw InvalidInput("controlled_subgraph: q >= 2 required");
    if (domain.empty()) throw InvalidInput("controlled_subgraph: empty input");
    ControlledSubgraph out;
    VertexSet f = domain;
    const Int q2 = Int(q) * q;
    while (true) {
        int chi_f = chromatic_number(g, f);
        int descend = -1;
        f.for_each([&](int v) {
            if (descend >= 0) return;
            int chi_n = chromatic_number(g, g.neighbours_in(v, f));
            if (q2 * chi_n >= (q2 - 1) * chi_f) descend = v;
        });
        if (descend < 0) break;
        out.clique_trace.push_back(descend);
        f = g.neighbours_in(descend, f);
        if (f.empty()) throw std::logic_error("controlled_subgraph: descent emptied the graph");
    }
    out.subgraph = max_chi_component(g, f);
    if (!is_clique(g, VertexSet::from(out.clique_trace)))
        throw std::logic_error("controlled_subgraph: trace is not a clique");
    return out;
}

ControlledSubgraph controlled_subgraph(const Graph& g, int q) {
    return controlled_subgraph(g, g.vertices(), q);
}

bool is_q_controlled(const Graph& g, VertexSet s, int q) {
    if (!is_connected(g, s)) return false;
    int chi_s = chromatic_number(g, s);
    const Int q2 = Int(q) * q;
    bool ok = true;
    s.for_each([&](int v) {
        int chi_n = chromatic_number(g, g.neighbours_in(v, s));
        if (q2 * chi_n >= (q2 - 1) * chi_s) ok = false;
    });
    return ok;
}

std::optional<NotVivid> vivid_violation(const Graph& g, const Blockade& blockade, const Rat& eps) {
    blockade.check(g);
    for (const auto& b : blockade.blocks)
        if (b.empty()) throw InvalidInput("vivid blockade: empty block");
    int k = int(blockade.blocks.size());
    for (int i = 0; i < k; ++i) {
        Rat thresh = eps * chi_r(g, blockade.blocks[size_t(i)]);
        for (int j = i + 1; j < k; ++j) {
            std::optional<NotVivid> hit;
            blockade.blocks[size_t(j)].for_each([&](int v) {
                if (hit) return;
                Rat chi_miss = chi_r(g, blockade.blocks[size_t(i)].minus(g.neighbours(v)));
                if (chi_miss >= thresh) hit = NotVivid{i, j, v};
            });
            if (hit) return hit;
        }
    }
    return std::nullopt;
}

VividResult vivid_clique(const Graph& g, const Blockade& blockade, const Rat& eps) {
    if (auto bad = vivid_violation(g, blockade, eps)) return *bad;
    VividCertificate cert;
    cert.blockade = blockade;
    cert.eps = eps;
    int k = int(blockade.blocks.size());
    for (int i = 0; i < k; ++i) {
        Rat thresh = eps * chi_r(g, blockade.blocks[size_t(i)]);
        for (int j = i + 1; j < k; ++j)
            blockade.blocks[size_t(j)].for_each([&](int v) {
                int chi_miss =
                    chromatic_number(g, blockade.blocks[size_t(i)].minus(g.neighbours(v)));
                cert.margins.push_back({i, j, v, chi_miss, thresh});
            });
    }
    // greedy transversal, back to front
    std::vector<int> clique(size_t(k), -1);
    VertexSet common = g.vertices();
    for (int j = k - 1; j >= 0; --j) {
        VertexSet cand = blockade.blocks[size_t(j)] & common;
        if (cand.empty()) {
            std::vector<int> partial;
            for (int i = j + 1; i < k; ++i) partial.push_back(clique[size_t(i)]);
            return GreedyStuck{partial, j};
        }
        int v = cand.lowest();
        clique[size_t(j)] = v;
        common = common & g.neighbours(v);
    }
    if (!is_clique(g, VertexSet::from(clique)))
        throw std::logic_error("vivid_clique: transversal is not a clique");
    return TransversalClique{clique, std::move(cert)};
}

namespace {

struct EhContext {
    const Graph& g;
    const Rat& eps;
    const Submeasure& mu;
    std::vector<int> phi;  // indexed by original H vertices
    int depth = 0;
};

// Returns the near-pure outcome, or nullopt when an anchored copy was written
// into ctx.phi. `idx` maps the current H's vertices to original indices.
std::optional<NearPurePairOutcome> eh_rec(EhContext& ctx, const Graph& h,
                                          const std::vector<int>& idx,
                                          const std::vector<VertexSet>& anchors) {
    const Graph& g = ctx.g;
    const Rat& eps = ctx.eps;
    const Submeasure& mu = ctx.mu;
    int hn = h.size();
    if (hn == 0) return std::nullopt;
    if (hn == 1) {
        ctx.phi[size_t(idx[0])] = anchors[0].lowest();
        return std::nullopt;
    }
    if (hn == 2) {
        bool want_edge = h.adjacent(0, 1);
        int a0 = -1, a1 = -1;
        anchors[0].for_each([&](int u) {
            if (a0 >= 0) return;
            std::uint64_t hits = want_edge ? (g.neighbours_bits(u) & anchors[1].bits())
                                           : (anchors[1].bits() & ~g.neighbours_bits(u));
            if (hits) {
                a0 = u;
                a1 = std::countr_zero(hits);
            }
        });
        if (a0 >= 0) {
            ctx.phi[size_t(idx[0])] = a0;
            ctx.phi[size_t(idx[1])] = a1;
            return std::nullopt;
        }
        // all cross pairs are non-edges (want_edge) or edges (!want_edge)
        NearPurePairOutcome out;
        out.a = anchors[1];
        out.b = anchors[0];
        out.anchor_i = idx[0];
        out.anchor_j = idx[1];
        out.direction = want_edge ? PureDirection::Sparse : PureDirection::Dense;
        out.exponent = 0;
        out.depth = ctx.depth;
        return out;
    }
    Rat mu_a1 = mu(g, anchors[0]);
    Rat thresh1 = rpow(eps, hn - 2) * mu_a1;
    std::vector<VertexSet> bsets(static_cast<size_t>(hn), VertexSet());
    for (int i = 1; i < hn; ++i) {
        bool edge = h.adjacent(0, i);
        Rat side = eps * mu(g, anchors[size_t(i)]);
        VertexSet bi;
        anchors[0].for_each([&](int v) {
            Rat val = edge ? mu(g, g.neighbours_in(v, anchors[size_t(i)]))
                           : mu(g, anchors[size_t(i)].minus(g.neighbours(v)));
            if (val < side) bi.add(v);
        });
        bsets[size_t(i)] = bi;
        if (mu(g, bi) >= thresh1) {
            // (B_i, A_i) is already the near-pure pair
            NearPurePairOutcome out;
            out.a = anchors[size_t(i)];
            out.b = bi;
            out.anchor_i = idx[0];
            out.anchor_j = idx[size_t(i)];
            out.direction = edge ? PureDirection::Sparse : PureDirection::Dense;
            out.exponent = hn - 2;
            out.depth = ctx.depth;
            return out;
        }
    }
    // some v in A_1 escapes every B_i (subadditivity); take the lowest
    int v = -1;
    anchors[0].for_each([&](int u) {
        if (v >= 0) return;
        for (int i = 1; i < hn; ++i)
            if (bsets[size_t(i)].contains(u)) return;
        v = u;
    });
    if (v < 0) throw std::logic_error("eh_step: no vertex escapes the B_i sets");
    std::vector<VertexSet> next_anchors;
    std::vector<int> next_idx;
    for (int i = 1; i < hn; ++i) {
        bool edge = h.adjacent(0, i);
        VertexSet ci = edge ? g.neighbours_in(v, anchors[size_t(i)])
                            : anchors[size_t(i)].minus(g.neighbours(v));
        if (mu(g, ci) < eps * mu(g, anchors[size_t(i)]))
            throw std::logic_error("eh_step: C_i lost too much measure");
        next_anchors.push_back(ci);
        next_idx.push_back(idx[size_t(i)]);
    }
    Graph sub_h = induced(h, h.vertices().without(0)).graph;
    ++ctx.depth;
    auto res = eh_rec(ctx, sub_h, next_idx, next_anchors);
    if (!res) {
        ctx.phi[size_t(idx[0])] = v;
        return std::nullopt;
    }
    return res;
}

}  // namespace

EhResult eh_step(const Graph& g, const Graph& h, const Rat& eps, const Submeasure& mu,
                 const std::vector<VertexSet>& anchors) {
    if (eps <= 0 || eps > Rat(1, 2)) throw InvalidInput("eh_step: eps must lie in (0, 1/2]");
    if (int(anchors.size()) != h.size()) throw InvalidInput("eh_step: one anchor set per H vertex");
    for (size_t i = 0; i < anchors.size(); ++i) {
        if (anchors[i].empty()) throw InvalidInput("eh_step: empty anchor set");
        for (size_t j = i + 1; j < anchors.size(); ++j)
            if (anchors[i].intersects(anchors[j])) throw InvalidInput("eh_step: anchors overlap");
    }
    EhContext ctx{g, eps, mu, std::vector<int>(size_t(h.size()), -1), 0};
    std::vector<int> idx(size_t(h.size()), 0);
    for (int i = 0; i < h.size(); ++i) idx[size_t(i)] = i;
    auto res = eh_rec(ctx, h, idx, anchors);
    if (!res) return InducedCopyOutcome{ctx.phi};
    // re-verify the advertised bounds against the original anchors
    NearPurePairOutcome out = *res;
    int hn = h.size();
    Rat factor = rpow(eps, hn - 2);
    Rat need_i = factor * mu(g, anchors[size_t(out.anchor_i)]);
    Rat need_j = factor * mu(g, anchors[size_t(out.anchor_j)]);
    if (mu(g, out.b) < need_i || mu(g, out.a) < need_j)
        throw std::logic_error("eh_step: returned pair misses its measure bound");
    out.exponent = hn - 2;
    out.bound = std::min(need_i, need_j);
    return out;
}

namespace {

NearPurePairOutcome near_pure_pair_impl(const Graph& g, VertexSet domain, const Graph& h,
                                        const Rat& eps, const Submeasure& mu, bool verify) {
    if (eps <= 0 || eps > Rat(1, 2)) throw InvalidInput("near_pure_pair: eps in (0, 1/2]");
    if (h.size() == 0) throw InvalidInput("near_pure_pair: H must be nonempty");
    if (verify) {
        if (auto copy = find_induced_copy_in(h, g, domain))
            throw NotHFree("near_pure_pair: G is not H-free", *copy);
    }
    if (domain.count() < 2)
        throw InvalidInput("near_pure_pair: G needs at least two vertices");
    int hn = h.size();
    Rat mu_g = mu(g, domain);
    Rat final_bound = Rat(1, 2 * hn) * rpow(eps, hn - 2) * mu_g;
    if (hn < 2 || mu_g < Rat(2 * hn) * rpow(eps, 2 - hn)) {
        // trivial branch: two singletons form a pure pair
        int u = domain.lowest();
        int v = domain.without(u).lowest();
        NearPurePairOutcome out;
        out.a = VertexSet::single(u);
        out.b = VertexSet::single(v);
        out.direction = g.adjacent(u, v) ? PureDirection::Dense : PureDirection::Sparse;
        out.exponent = hn - 2;
        out.bound = final_bound;
        out.degenerate = true;
        if (Rat(1) < final_bound)
            throw std::logic_error("near_pure_pair: trivial branch bound exceeds 1");
        return out;
    }
    // extension loop: disjoint A_1..A_h, (2h)^-1 mu(G) <= mu(A_i) <= h^-1 mu(G)
    Rat target = mu_g / (2 * hn);
    Rat upper = mu_g / hn;
    std::vector<VertexSet> as;
    VertexSet used;
    for (int l = 0; l < hn; ++l) {
        VertexSet rest = domain.minus(used);
        VertexSet a;
        for (std::uint64_t m = rest.bits(); m; m &= m - 1) {
            a.add(std::countr_zero(m));
            if (mu(g, a) >= target) break;
        }
        if (mu(g, a) < target)
            throw std::logic_error("near_pure_pair: could not reach the block target");
        bool pruned = true;
        while (pruned) {
            pruned = false;
            for (std::uint64_t m = a.bits(); m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (mu(g, a.without(v)) >= target) {
                    a.remove(v);
                    pruned = true;
                }
            }
        }
        if (mu(g, a) > upper)
            throw std::logic_error("near_pure_pair: minimal block exceeds the upper window");
        as.push_back(a);
        used = used | a;
    }
    auto res = eh_step(g, h, eps, mu, as);
    if (std::holds_alternative<InducedCopyOutcome>(res))
        throw std::logic_error("near_pure_pair: anchored copy found in verified H-free graph");
    NearPurePairOutcome out = std::get<NearPurePairOutcome>(res);
    if (mu(g, out.a) < final_bound || mu(g, out.b) < final_bound)
        throw std::logic_error("near_pure_pair: final measure bound violated");
    out.bound = final_bound;
    return out;
}

}  // namespace

NearPurePairOutcome near_pure_pair(const Graph& g, VertexSet domain, const Graph& h,
                                   const Rat& eps, const Submeasure& mu) {
    return near_pure_pair_impl(g, domain, h, eps, mu, true);
}

NearPurePairOutcome near_pure_pair(const Graph& g, const Graph& h, const Rat& eps,
                                   const Submeasure& mu) {
    return near_pure_pair_impl(g, g.vertices(), h, eps, mu, true);
}

QuasiResult quasi_pure(const Graph& g, const Graph& h, const Rat& eps, const Submeasure& mu) {
    if (g.size() == 0) throw InvalidInput("quasi_pure: empty graph");
    if (auto copy = find_induced_copy(h, g))
        throw NotHFree("quasi_pure: G is not H-free", *copy);
    int w = clique_number(g);
    if (eps <= 0 || eps * w > 1) throw InvalidInput("quasi_pure: eps in (0, 1/omega]");
    Rat mu_g = mu(g, g.vertices());
    int hn = h.size();
    if (w <= 1) {
        StableSetOutcome out;
        out.set = g.vertices();
        out.exponent = 0;
        out.bound = mu_g;
        return out;
    }
    int level = 0;
    std::vector<VertexSet> sets{g.vertices()};
    while (true) {
        Rat level_bound = rpow(eps, 2 * hn * level) * mu_g;
        int omega_sum = 0;
        for (const auto& e : sets) {
            if (mu(g, e) < level_bound)
                throw std::logic_error("quasi_pure: level bound lost");
            omega_sum += clique_number(g, e);
        }
        if (omega_sum > w) throw std::logic_error("quasi_pure: clique budget exceeded");
        for (const auto& e : sets) {
            if (is_stable_set(g, e)) {
                StableSetOutcome out;
                out.set = e;
                out.exponent = 2 * hn * level;
                out.bound = level_bound;
                return out;
            }
        }
        // all blocks have omega >= 2; split each by the near-pure lemma
        Rat next_bound = rpow(eps, 2 * hn * (level + 1)) * mu_g;
        Rat pair_bound = rpow(eps, 2 * hn * (level + 1) - 2) * mu_g;
        std::vector<VertexSet> next;
        for (const auto& e : sets) {
            NearPurePairOutcome np = near_pure_pair_impl(g, e, h, eps, mu, false);
            if (mu(g, np.a) < pair_bound || mu(g, np.b) < pair_bound)
                throw std::logic_error("quasi_pure: split block lost its measure bound");
            if (np.direction == PureDirection::Sparse) {
                np.exponent = 2 * hn * (level + 1) - 2;
                np.bound = pair_bound;
                np.depth = hn;
                return np;
            }
            // dense: purify by a largest clique of the quantified side
            VertexSet d = max_clique(g, np.b);
            VertexSet purified;
            np.a.for_each([&](int u) {
                if (d.subset_of(g.neighbours(u))) purified.add(u);
            });
            if (purified.empty())
                throw std::logic_error("quasi_pure: purified block empty");
            if (clique_number(g, np.b) + clique_number(g, purified) > clique_number(g, e))
                throw std::logic_error("quasi_pure: clique budget broken by purification");
            if (mu(g, purified) < next_bound || mu(g, np.b) < next_bound)
                throw std::logic_error("quasi_pure: purified measures below next level");
            next.push_back(np.b);
            next.push_back(purified);
        }
        sets = std::move(next);
        ++level;
        if ((1 << level) > w)
            throw std::logic_error("quasi_pure: doubling exceeded the clique budget");
    }
}

}  // namespace purepairs
