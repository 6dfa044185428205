#include "purepairs/harness.hpp"

#include "purepairs/io.hpp"
#include "purepairs/rng.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace purepairs {

namespace {

std::string set_str(VertexSet s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    s.for_each([&](int v) {
        if (!first) os << ',';
        os << v;
        first = false;
    });
    os << '}';
    return os.str();
}

struct RunOutcome {
    std::string tag;
    std::string serialized;
    bool pass = false;
    bool degenerate = false;
    bool skipped = false;
    std::string fail_reason;
    std::vector<std::string> margins;
};

RunOutcome from_validation(std::string tag, std::string serialized, const ValidationResult& v) {
    RunOutcome out;
    out.tag = std::move(tag);
    out.serialized = std::move(serialized);
    out.pass = v.pass;
    out.degenerate = v.degenerate;
    for (const auto& f : v.failures) {
        out.fail_reason += f;
        out.fail_reason += "; ";
    }
    for (const auto& [name, val] : v.margins) out.margins.push_back(name + "=" + rat_to_string(val));
    return out;
}

RunOutcome skip(const std::string& why) {
    RunOutcome out;
    out.skipped = true;
    out.pass = true;
    out.tag = "skipped";
    out.fail_reason = why;
    return out;
}

// --- per-lemma runners -------------------------------------------------------

RunOutcome run_gyarfas(const Graph& g, const CampaignConfig&) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (chromatic_number(g) < 2) return skip("chi < 2");
    int v = gyarfas_vertex(g, 5);
    ValidationResult r = validate_gyarfas_vertex(g, 5, v);
    auto [col, cert] = gyarfas_colour_bound(g, 5);
    ValidationResult rb = validate_gyarfas_bound(g, 5, col, cert);
    r.pass = r.pass && rb.pass;
    for (const auto& f : rb.failures) r.failures.push_back(f);
    return from_validation("gyarfas-vertex", "v=" + std::to_string(v) +
                                                 " colours=" + std::to_string(col.count),
                           r);
}

RunOutcome run_min_degree_core(const Graph& g, const CampaignConfig&, std::uint64_t seed) {
    int chi_g = chromatic_number(g);
    if (chi_g < 2) return skip("chi < 2");
    Rng rng(Rng::derive(seed, 0x11));
    int p = 1 + int(rng.below(std::uint64_t(chi_g - 1)));
    MinDegreeCore core = min_degree_core(g, p);
    return from_validation("min-degree-core",
                           "p=" + std::to_string(p) + " core=" + set_str(core.core),
                           validate_min_degree_core(g, p, core));
}

RunOutcome run_controlled(const Graph& g, const CampaignConfig&, std::uint64_t seed) {
    if (g.size() == 0) return skip("empty");
    int w = clique_number(g);
    Rng rng(Rng::derive(seed, 0x12));
    int q = std::max(2, rng.next() % 2 == 0 ? w : w * w);
    ControlledSubgraph cs = controlled_subgraph(g, q);
    return from_validation("controlled",
                           "q=" + std::to_string(q) + " J=" + set_str(cs.subgraph),
                           validate_controlled_subgraph(g, q, cs));
}

RunOutcome run_vivid(const Graph& g, const CampaignConfig&, std::uint64_t seed) {
    int w = clique_number(g);
    if (w < 2) return skip("omega < 2");
    Rat eps(1, w);
    Rng rng(Rng::derive(seed, 0x13));
    // randomized greedy extension: keep appending random blocks while the
    // blockade stays (1/w)-vivid
    Blockade blockade;
    VertexSet used;
    for (int attempt = 0; attempt < 3 * g.size(); ++attempt) {
        VertexSet rest = g.vertices().minus(used);
        if (rest.empty()) break;
        VertexSet cand;
        int want = 1 + int(rng.below(3));
        auto pool = rest.to_vector();
        for (int pick = 0; pick < want && !pool.empty(); ++pick) {
            size_t at = size_t(rng.below(pool.size()));
            cand.add(pool[at]);
            pool.erase(pool.begin() + long(at));
        }
        Blockade trial = blockade;
        trial.blocks.push_back(cand);
        if (!vivid_violation(g, trial, eps)) {
            blockade = trial;
            used = used | cand;
        }
    }
    if (blockade.blocks.empty()) blockade.blocks.push_back(VertexSet::single(0));
    VividResult res = vivid_clique(g, blockade, eps);
    ValidationResult r = validate_vivid(g, blockade, eps, res);
    r.require(int(blockade.blocks.size()) <= w, "vivid blockade no longer than omega");
    r.require(std::holds_alternative<TransversalClique>(res), "vivid input yields a clique");
    return from_validation("vivid", "blocks=" + std::to_string(blockade.blocks.size()), r);
}

RunOutcome run_near_pure(const Graph& g, const CampaignConfig& cfg, std::uint64_t seed) {
    Graph h = named_graph(cfg.h);
    if (!is_h_free(g, h)) return skip("not H-free");
    if (g.size() < 2) return skip("too small");
    Rng rng(Rng::derive(seed, 0x14));
    const Submeasure mu =
        rng.next() % 2 == 0 ? Submeasure::chromatic() : Submeasure::cardinality();
    NearPurePairOutcome out = near_pure_pair(g, h, cfg.eps, mu);
    return from_validation("near-pure",
                           "mu=" + mu.name + " a=" + set_str(out.a) + " b=" + set_str(out.b) +
                               (out.direction == PureDirection::Sparse ? " sparse" : " dense"),
                           validate_near_pure(g, h, cfg.eps, mu, out));
}

RunOutcome run_quasi(const Graph& g, const CampaignConfig& cfg, std::uint64_t seed) {
    Graph h = named_graph(cfg.h);
    if (!is_h_free(g, h)) return skip("not H-free");
    if (g.size() == 0) return skip("empty");
    int w = std::max(clique_number(g), 1);
    Rat eps(1, std::max(2, w));
    Rng rng(Rng::derive(seed, 0x15));
    const Submeasure mu =
        rng.next() % 2 == 0 ? Submeasure::chromatic() : Submeasure::cardinality();
    QuasiResult res = quasi_pure(g, h, eps, mu);
    std::string tag = std::holds_alternative<StableSetOutcome>(res) ? "stable-set" : "near-pure";
    std::string ser =
        std::holds_alternative<StableSetOutcome>(res)
            ? "s=" + set_str(std::get<StableSetOutcome>(res).set)
            : "a=" + set_str(std::get<NearPurePairOutcome>(res).a) +
                  " b=" + set_str(std::get<NearPurePairOutcome>(res).b);
    return from_validation("quasi-" + tag, "mu=" + mu.name + " " + ser,
                           validate_quasi(g, h, eps, mu, res));
}

RunOutcome run_tbroom_decompose(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, t_broom_graph(cfg.t))) return skip("not t-broom-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    TbroomDecomposition dec = tbroom_decompose(g, cfg.t);
    return from_validation("tbroom-decompose", "s=" + set_str(dec.s) + " p=" + set_str(dec.p),
                           validate_tbroom_decompose(g, cfg.t, dec));
}

RunOutcome run_tbroom_colour(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, t_broom_graph(cfg.t))) return skip("not t-broom-free");
    ColouringOutcome out = tbroom_colour(g, cfg.t);
    return from_validation("tbroom-colour", "colours=" + std::to_string(out.colouring.count),
                           validate_tbroom_colour(g, cfg.t, out));
}

RunOutcome run_star(const Graph& g, const CampaignConfig& cfg, std::uint64_t seed) {
    int w = clique_number(g);
    if (w < 2) return skip("omega < 2");
    Int need = ipow(Int(w), unsigned(cfg.t + 2));
    if (Int(g.size()) <= need) return skip("graph below w^(t+2)+1");
    VertexSet a;
    for (int v = 0; Int(a.count()) < need; ++v) a.add(v);
    VertexSet b = g.vertices().minus(a);
    Rng rng(Rng::derive(seed, 0x16));
    Rat q(1 + int(rng.below(2)), 1);
    StarResult res = star_step(g, g.vertices(), a, b, cfg.t, q, w);
    std::string tag = std::holds_alternative<StarPairXY>(res) ? "xy" : "stable";
    return from_validation("star-" + tag, "q=" + rat_to_string(q),
                           validate_star(g, g.vertices(), a, b, cfg.t, q, w, res));
}

RunOutcome run_covering(const Graph& g, const CampaignConfig& cfg) {
    if (clique_number(g) < 2) return skip("omega < 2");
    if (is_clique(g, g.vertices())) return skip("complete");
    CoveringResult res = covering_blockade(g, cfg.k);
    std::string tag = std::holds_alternative<AnticompletePairOutcome>(res)
                          ? "covering-pair"
                          : "covering-blockade";
    std::string ser;
    if (auto* p = std::get_if<AnticompletePairOutcome>(&res))
        ser = "a=" + set_str(p->a) + " b=" + set_str(p->b);
    else {
        const auto& cb = std::get<CoveringBlockadeOutcome>(res);
        ser = "k=" + std::to_string(cb.d.size()) + " e=" + set_str(cb.e);
    }
    return from_validation(tag, ser, validate_covering(g, cfg.k, res));
}

RunOutcome run_broom_anti(const Graph& g, const CampaignConfig& cfg) {
    if (clique_number(g) < 2) return skip("omega < 2");
    if (is_clique(g, g.vertices())) return skip("complete");
    BroomResult res = broom_or_anticomplete(g, cfg.k, cfg.t);
    std::string tag =
        std::holds_alternative<AnticompletePairOutcome>(res) ? "anticomplete" : "broom-pair";
    std::string ser;
    if (auto* p = std::get_if<AnticompletePairOutcome>(&res))
        ser = "a=" + set_str(p->a) + " b=" + set_str(p->b);
    else {
        const auto& bp = std::get<BroomPairOutcome>(res);
        ser = "broom=" + set_str(bp.broom) + " q=" + set_str(bp.q);
    }
    return from_validation("broom-" + tag, ser, validate_broom_anti(g, cfg.k, cfg.t, res));
}

RunOutcome run_unmixed(const Graph& g, const CampaignConfig&) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (g.size() > 10) return skip("exhaustive pair check limited to n <= 10");
    // exhaustive over anticomplete nonempty disjoint pairs
    int n = g.size();
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    ValidationResult r;
    long long checked = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        VertexSet a, b;
        for (int v = 0; v < n; ++v) {
            int dig = int(c % 3);
            c /= 3;
            if (dig == 1) a.add(v);
            if (dig == 2) b.add(v);
        }
        if (a.empty() || b.empty()) continue;
        if (!is_anticomplete_between(g, a, b)) continue;
        ++checked;
        if (auto witness = assert_unmixed(g, a, b)) {
            r.require(false, "mixed-on-both vertex " + std::to_string(witness->v) + " at a=" +
                                 set_str(a) + " b=" + set_str(b));
            break;
        }
    }
    return from_validation("unmixed", "pairs=" + std::to_string(checked), r);
}

RunOutcome run_terminal(const Graph& g, const CampaignConfig&) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    ControlledSubgraph cs = controlled_subgraph(g, clique_number(g));
    VertexSet dom = cs.subgraph;
    if (clique_number(g, dom) < 2) return skip("controlled core edgeless");
    TerminalPartition tp = terminal_partition(g, dom, Rat(0));
    return from_validation("terminal", "k=" + std::to_string(tp.a.size()) + " d=" + set_str(tp.d),
                           validate_terminal_partition(g, dom, tp));
}

RunOutcome run_terminal_pair(const Graph& g, const CampaignConfig&) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    ControlledSubgraph cs = controlled_subgraph(g, clique_number(g));
    VertexSet dom = cs.subgraph;
    if (clique_number(g, dom) < 2) return skip("controlled core edgeless");
    Rat p(1);
    AntiSupplier supplier = [&](VertexSet c) -> std::variant<std::pair<VertexSet, VertexSet>,
                                                             SupplierEscape, std::monostate> {
        InducedGraph sub = induced(g, c);
        if (is_clique(g, c) || clique_number(sub.graph) < 2) return std::monostate{};
        CoveringResult res = covering_blockade(sub.graph, 1);
        VertexSet pa, pb;
        if (auto* pr = std::get_if<AnticompletePairOutcome>(&res)) {
            pa = pr->a;
            pb = pr->b;
        } else {
            const auto& cb = std::get<CoveringBlockadeOutcome>(res);
            if (!is_anticomplete_between(sub.graph, cb.d.back(), cb.e)) return std::monostate{};
            pa = cb.d.back();
            pb = cb.e;
        }
        VertexSet out_a, out_b;
        pa.for_each([&](int v) { out_a.add(sub.to_parent[size_t(v)]); });
        pb.for_each([&](int v) { out_b.add(sub.to_parent[size_t(v)]); });
        return std::pair<VertexSet, VertexSet>{out_a, out_b};
    };
    try {
        TerminalPairResult res = terminal_complete_pair(g, dom, p, supplier, clique_number(g));
        const auto& cp = std::get<CompletePairOutcome>(res);
        int chi_dom = chromatic_number(g, dom);
        int w = clique_number(g);
        Rat need_a = Rat(Int(chi_dom), ipow(Int(w), 4));
        return from_validation("terminal-pair", "a=" + set_str(cp.a) + " b=" + set_str(cp.b),
                               validate_complete_pair_bounds(g, cp, need_a, p));
    } catch (const SupplierFailure& sf) {
        return skip(std::string("supplier failure: ") + sf.what());
    }
}

RunOutcome run_mid(const Graph& g, const CampaignConfig& cfg, std::uint64_t seed) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    int w = clique_number(g);
    if (w < 2) return skip("omega < 2");
    Rng rng(Rng::derive(seed, 0x17));
    int v = int(rng.below(std::uint64_t(g.size())));
    VertexSet q = g.vertices().minus(g.closed_neighbourhood(v));
    if (q.empty()) return skip("dominating vertex");
    Rat theta = Rat(chromatic_number(g, q), 2);
    VertexSet p;
    g.neighbours(v).for_each([&](int u) {
        if (Rat(chromatic_number(g, q.minus(g.neighbours(u)))) <= theta) p.add(u);
    });
    if (p.empty()) return skip("no qualifying P vertices");
    NonneighbourCover nc = nonneighbour_cover_core(g, p, q, theta, cfg.params);
    ValidationResult r;
    // definitional recheck of T and the cover
    VertexSet t_expected;
    q.for_each([&](int x) {
        bool nonnb = false;
        p.for_each([&](int u) {
            if (!g.adjacent(u, x)) nonnb = true;
        });
        if (nonnb) t_expected.add(x);
    });
    r.require(nc.t == t_expected, "T is the nonneighbour-cover set");
    VertexSet covered;
    nc.cover.for_each([&](int u) { covered = covered | q.minus(g.neighbours(u)); });
    r.require(nc.t.empty() || covered == nc.t, "cover spans T");
    r.require(nc.alpha_cover <= w, "alpha(S) <= omega");
    r.margin("cover_size", Rat(nc.cover.count()));
    return from_validation("mid", "T=" + set_str(nc.t) + " S=" + set_str(nc.cover), r);
}

RunOutcome run_colourful_pair(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (chromatic_number(g) < 2) return skip("chi < 2");
    if (colourful_check(g, cfg.eps)) return skip("not eps-colourful");
    CompletePairOutcome out = colourful_complete_pair(g, cfg.eps);
    return from_validation("colourful-pair", "a=" + set_str(out.a) + " b=" + set_str(out.b),
                           validate_colourful_pair(g, cfg.eps, out));
}

RunOutcome run_linanti(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    LinantiResult res = linanti(g, cfg.eps, cfg.params);
    std::string tag = std::holds_alternative<ColourfulSubgraphOutcome>(res.outcome)
                          ? "colourful"
                      : std::holds_alternative<AnticompletePairOutcome>(res.outcome)
                          ? "anticomplete"
                          : "complete";
    return from_validation("linanti-" + tag, "claims=" + std::to_string(res.trace.size()),
                           validate_linanti(g, cfg.eps, cfg.params, res));
}

RunOutcome run_locdense(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    LocdenseResult res = locdense(g, cfg.eps, cfg.params);
    std::string tag =
        std::holds_alternative<ColourfulSubgraphOutcome>(res.outcome) ? "colourful" : "complete";
    return from_validation("locdense-" + tag, "claims=" + std::to_string(res.trace.size()),
                           validate_locdense(g, cfg.eps, cfg.params, res));
}

RunOutcome run_p5_pair(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 2) return skip("omega < 2");
    CompletePairOutcome out = p5_complete_pair(g, cfg.params);
    return from_validation("p5-pair", "a=" + set_str(out.a) + " b=" + set_str(out.b),
                           validate_p5_pair(g, cfg.params, out));
}

RunOutcome run_p5_chi(const Graph& g, const CampaignConfig& cfg) {
    if (!is_h_free(g, path_graph(5))) return skip("not P5-free");
    if (clique_number(g) < 3) return skip("omega < 3");
    ChiBoundResult res = p5_chi_bound(g, cfg.params);
    return from_validation("p5-chi",
                           "colours=" + std::to_string(res.colouring.count) + " branch=" +
                               res.branch,
                           validate_p5_chi(g, cfg.params, res));
}

RunOutcome dispatch(const std::string& lemma, const Graph& g, const CampaignConfig& cfg,
                    std::uint64_t seed) {
    if (lemma == "gyarfas") return run_gyarfas(g, cfg);
    if (lemma == "min-degree-core") return run_min_degree_core(g, cfg, seed);
    if (lemma == "controlled") return run_controlled(g, cfg, seed);
    if (lemma == "vivid") return run_vivid(g, cfg, seed);
    if (lemma == "near-pure") return run_near_pure(g, cfg, seed);
    if (lemma == "quasi-pure") return run_quasi(g, cfg, seed);
    if (lemma == "tbroom-decompose") return run_tbroom_decompose(g, cfg);
    if (lemma == "tbroom-colour") return run_tbroom_colour(g, cfg);
    if (lemma == "star-step") return run_star(g, cfg, seed);
    if (lemma == "covering-blockade") return run_covering(g, cfg);
    if (lemma == "broom-anti") return run_broom_anti(g, cfg);
    if (lemma == "unmixed") return run_unmixed(g, cfg);
    if (lemma == "terminal") return run_terminal(g, cfg);
    if (lemma == "terminal-pair") return run_terminal_pair(g, cfg);
    if (lemma == "mid") return run_mid(g, cfg, seed);
    if (lemma == "colourful-pair") return run_colourful_pair(g, cfg);
    if (lemma == "linanti") return run_linanti(g, cfg);
    if (lemma == "locdense") return run_locdense(g, cfg);
    if (lemma == "p5-pair") return run_p5_pair(g, cfg);
    if (lemma == "p5-chi") return run_p5_chi(g, cfg);
    throw InvalidInput("unknown lemma id: " + lemma);
}

}  // namespace

std::vector<std::string> campaign_lemmas() {
    return {"gyarfas",  "min-degree-core", "controlled",    "vivid",        "near-pure",
            "quasi-pure", "tbroom-decompose", "tbroom-colour", "star-step",  "covering-blockade",
            "broom-anti", "unmixed",       "terminal",      "terminal-pair", "mid",
            "colourful-pair", "linanti",   "locdense",      "p5-pair",      "p5-chi"};
}

namespace {

SampleRecord run_one(const CampaignConfig& cfg, int index) {
    SampleRecord rec;
    rec.index = index;
    size_t spec_idx = cfg.generators.empty() ? 0 : size_t(index) / size_t(cfg.samples_per_spec);
    rec.seed = Rng::derive(cfg.seed, std::uint64_t(index));
    if (spec_idx >= cfg.generators.size()) {
        rec.skipped = true;
        rec.pass = true;
        rec.fail_reason = "no generator";
        return rec;
    }
    try {
        Graph g = build_family(cfg.generators[spec_idx], rec.seed);
        if (g.size() > cfg.max_n) {
            rec.skipped = true;
            rec.pass = true;
            rec.fail_reason = "above max_n";
            return rec;
        }
        rec.graph6 = to_graph6(g);
        RunOutcome out = dispatch(cfg.lemma, g, cfg, rec.seed);
        rec.outcome_tag = out.tag;
        rec.outcome = out.serialized;
        rec.pass = out.pass;
        rec.degenerate = out.degenerate;
        rec.skipped = out.skipped;
        rec.fail_reason = out.fail_reason;
        rec.margins = out.margins;
    } catch (const RepairExhausted& e) {
        rec.skipped = true;
        rec.pass = true;
        rec.fail_reason = e.what();
    } catch (const std::exception& e) {
        rec.pass = false;
        rec.fail_reason = e.what();
    }
    return rec;
}

}  // namespace

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PUREPAIRS_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

CampaignReport run_campaign(const CampaignConfig& config) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = config;
    int total = int(config.generators.size()) * config.samples_per_spec;
    report.records.assign(size_t(std::max(total, 0)), SampleRecord{});
    int workers = resolve_workers(config.workers);
    std::atomic<int> next{0};
    auto work = [&]() {
        while (true) {
            int i = next.fetch_add(1);
            if (i >= total) break;
            report.records[size_t(i)] = run_one(config, i);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& rec : report.records) {
        if (rec.skipped)
            ++report.skipped;
        else if (rec.pass)
            ++report.pass;
        else
            ++report.fail;
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    if (!config.out_path.empty()) {
        std::ofstream out(config.out_path);
        if (!out) throw InvalidInput("cannot write report to " + config.out_path);
        out << report_to_json(report).dump(2) << "\n";
    }
    return report;
}

SampleRecord replay(const CampaignConfig& config, const SampleRecord& record) {
    return run_one(config, record.index);
}

namespace {

Json spec_to_json(const GeneratorSpec& s) {
    Json j;
    j["family"] = s.family;
    j["n"] = s.n;
    j["p"] = s.p;
    j["k"] = s.k;
    j["t"] = s.t;
    j["a"] = s.a;
    j["b"] = s.b;
    j["m"] = s.m;
    j["parts"] = s.parts;
    j["h_name"] = s.h_name;
    j["name"] = s.name;
    return j;
}

GeneratorSpec spec_from_json(const Json& j) {
    GeneratorSpec s;
    s.family = j.value("family", "gnp");
    s.n = j.value("n", 0);
    s.p = j.value("p", 0.5);
    s.k = j.value("k", 3);
    s.t = j.value("t", 1);
    s.a = j.value("a", 1);
    s.b = j.value("b", 1);
    s.m = j.value("m", 1);
    s.parts = j.value("parts", std::vector<int>{});
    s.h_name = j.value("h_name", "");
    s.name = j.value("name", "");
    return s;
}

}  // namespace

Json report_to_json(const CampaignReport& report) {
    Json j;
    j["version"] = report.version;
    Json cfg;
    cfg["lemma"] = report.config.lemma;
    cfg["samples_per_spec"] = report.config.samples_per_spec;
    cfg["seed"] = report.config.seed;
    cfg["max_n"] = report.config.max_n;
    cfg["t"] = report.config.t;
    cfg["k"] = report.config.k;
    cfg["eps"] = rat_to_string(report.config.eps);
    cfg["h"] = report.config.h;
    cfg["eh_a"] = report.config.params.eh_a;
    cfg["workers"] = report.config.workers;
    Json gens = Json::array();
    for (const auto& s : report.config.generators) gens.push_back(spec_to_json(s));
    cfg["generators"] = gens;
    j["config"] = cfg;
    Json recs = Json::array();
    for (const auto& r : report.records) {
        Json rj;
        rj["index"] = r.index;
        rj["seed"] = r.seed;
        rj["graph6"] = r.graph6;
        rj["outcome_tag"] = r.outcome_tag;
        rj["outcome"] = r.outcome;
        rj["pass"] = r.pass;
        rj["degenerate"] = r.degenerate;
        rj["skipped"] = r.skipped;
        rj["fail_reason"] = r.fail_reason;
        rj["margins"] = r.margins;
        recs.push_back(rj);
    }
    j["records"] = recs;
    j["pass"] = report.pass;
    j["fail"] = report.fail;
    j["skipped"] = report.skipped;
    j["wall_ms"] = report.wall_ms;
    return j;
}

CampaignReport report_from_json(const Json& j) {
    CampaignReport report;
    report.version = j.value("version", 1);
    const Json& cfg = j.at("config");
    report.config.lemma = cfg.value("lemma", "");
    report.config.samples_per_spec = cfg.value("samples_per_spec", 100);
    report.config.seed = cfg.value("seed", std::uint64_t(1));
    report.config.max_n = cfg.value("max_n", 12);
    report.config.t = cfg.value("t", 1);
    report.config.k = cfg.value("k", 1);
    report.config.eps = rat_from_string(cfg.value("eps", "1/3"));
    report.config.h = cfg.value("h", "P5");
    report.config.params.eh_a = cfg.value("eh_a", 4);
    report.config.workers = cfg.value("workers", 1);
    for (const auto& sj : cfg.value("generators", Json::array()))
        report.config.generators.push_back(spec_from_json(sj));
    for (const auto& rj : j.value("records", Json::array())) {
        SampleRecord r;
        r.index = rj.value("index", 0);
        r.seed = rj.value("seed", std::uint64_t(0));
        r.graph6 = rj.value("graph6", "");
        r.outcome_tag = rj.value("outcome_tag", "");
        r.outcome = rj.value("outcome", "");
        r.pass = rj.value("pass", false);
        r.degenerate = rj.value("degenerate", false);
        r.skipped = rj.value("skipped", false);
        r.fail_reason = rj.value("fail_reason", "");
        r.margins = rj.value("margins", std::vector<std::string>{});
        report.records.push_back(r);
    }
    report.pass = j.value("pass", 0LL);
    report.fail = j.value("fail", 0LL);
    report.skipped = j.value("skipped", 0LL);
    report.wall_ms = j.value("wall_ms", 0.0);
    return report;
}

SearchReport search_counterexample(const std::string& target, const Rat& eps,
                                   const std::vector<Graph>& corpus) {
    if (target != "clful" && target != "modp5")
        throw InvalidInput("search target must be clful or modp5");
    SearchReport report;
    report.target = target;
    report.eps = eps;
    report.exhausted = corpus.empty();
    for (const Graph& g : corpus) {
        int n = g.size();
        if (n > 11) throw CapExceeded("exhaustive subgraph search limited to n <= 11");
        if (n == 0) continue;
        auto chi = chi_all_subsets(g);
        int chi_g = chi[(size_t(1) << n) - 1];
        if (chi_g == 0) continue;
        Rat best(-1);
        VertexSet best_f;
        for (std::uint64_t f = 1; f < (std::uint64_t(1) << n); ++f) {
            int chi_f = chi[f];
            Rat delta;
            if (target == "clful") {
                bool colourful = true;
                VertexSet(f).for_each([&](int v) {
                    std::uint64_t rest = f & ~(g.neighbours_bits(v) | (1ULL << v));
                    if (Rat(chi[rest]) >= eps * chi_f) colourful = false;
                });
                if (!colourful) continue;
                delta = Rat(chi_f, chi_g);
            } else {
                Rat inner(1);
                VertexSet(f).for_each([&](int v) {
                    std::uint64_t nb = f & g.neighbours_bits(v);
                    Rat ratio = Rat(chi[nb], chi_f);
                    if (ratio < inner) inner = ratio;
                });
                delta = std::min(Rat(chi_f, chi_g), inner);
            }
            if (delta > best) {
                best = delta;
                best_f = VertexSet(f);
            }
        }
        report.findings.push_back({to_graph6(g), best, best_f});
    }
    std::sort(report.findings.begin(), report.findings.end(),
              [](const SearchFinding& a, const SearchFinding& b) {
                  return a.best_delta < b.best_delta;
              });
    return report;
}

Json search_to_json(const SearchReport& report) {
    Json j;
    j["target"] = report.target;
    j["eps"] = rat_to_string(report.eps);
    j["exhausted"] = report.exhausted;
    Json arr = Json::array();
    for (const auto& f : report.findings) {
        Json fj;
        fj["graph6"] = f.graph6;
        fj["best_delta"] = rat_to_string(f.best_delta);
        std::vector<int> fv = f.best_f.to_vector();
        fj["best_f"] = fv;
        arr.push_back(fj);
    }
    j["findings"] = arr;
    return j;
}

}  // namespace purepairs
