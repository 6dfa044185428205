#include "purepairs/extract_broom.hpp"
#include "purepairs/extract_p5.hpp"
#include "purepairs/harness.hpp"
#include "purepairs/io.hpp"
#include "purepairs/rng.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace purepairs;
using Json = nlohmann::json;

namespace {

Graph load_input(const std::string& path) {
    if (path.empty() || path == "-") return read_graph_auto(std::cin);
    return load_graph_file(path);
}

// "0,1,4" -> VertexSet
VertexSet parse_set(const std::string& s) {
    VertexSet out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.add(std::stoi(item));
    return out;
}

// "0,1;2,3;4" -> vector of VertexSets
std::vector<VertexSet> parse_sets(const std::string& s) {
    std::vector<VertexSet> out;
    std::stringstream ss(s);
    std::string group;
    while (std::getline(ss, group, ';')) out.push_back(parse_set(group));
    return out;
}

Json set_json(VertexSet s) { return Json(s.to_vector()); }

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_oracle(const std::string& what, const std::string& input, const std::string& h_name) {
    Graph g = load_input(input);
    Json j;
    if (what == "chi") {
        Colouring col = chromatic_colouring(g);
        j["value"] = col.count;
        Json w = Json::array();
        g.vertices().for_each([&](int v) { w.push_back(col.colour[size_t(v)]); });
        j["witness"] = w;
    } else if (what == "omega") {
        VertexSet c = max_clique(g);
        j["value"] = c.count();
        j["witness"] = set_json(c);
    } else if (what == "alpha") {
        VertexSet s = max_stable_set(g, g.vertices());
        j["value"] = s.count();
        j["witness"] = set_json(s);
    } else if (what == "degeneracy") {
        auto d = degeneracy(g);
        j["value"] = d.degeneracy;
        j["witness"] = d.order;
    } else if (what == "copy") {
        Graph h = named_graph(h_name);
        auto phi = find_induced_copy(h, g);
        j["value"] = phi.has_value();
        j["witness"] = phi ? Json(*phi) : Json(nullptr);
    } else {
        std::cerr << "unknown oracle: " << what << "\n";
        return 2;
    }
    emit(j, "");
    return 0;
}

Json outcome_json(const Graph& g, const ExtractionOutcome& out);

Json complete_json(const Graph&, const CompletePairOutcome& o) {
    Json j;
    j["kind"] = "complete-pair";
    j["a"] = set_json(o.a);
    j["b"] = set_json(o.b);
    j["degenerate"] = o.degenerate;
    return j;
}

Json anti_json(const Graph&, const AnticompletePairOutcome& o) {
    Json j;
    j["kind"] = "anticomplete-pair";
    j["a"] = set_json(o.a);
    j["b"] = set_json(o.b);
    j["degenerate"] = o.degenerate;
    return j;
}

Json outcome_json(const Graph& g, const ExtractionOutcome& out) {
    return std::visit(
        [&](const auto& o) -> Json {
            using T = std::decay_t<decltype(o)>;
            Json j;
            if constexpr (std::is_same_v<T, CompletePairOutcome>) {
                j = complete_json(g, o);
            } else if constexpr (std::is_same_v<T, AnticompletePairOutcome>) {
                j = anti_json(g, o);
            } else if constexpr (std::is_same_v<T, InducedCopyOutcome>) {
                j["kind"] = "induced-copy";
                j["map"] = o.map;
            } else if constexpr (std::is_same_v<T, StableSetOutcome>) {
                j["kind"] = "stable-set";
                j["set"] = set_json(o.set);
                j["bound"] = rat_to_string(o.bound);
                j["exponent"] = o.exponent;
            } else if constexpr (std::is_same_v<T, NearPurePairOutcome>) {
                j["kind"] = "near-pure-pair";
                j["a"] = set_json(o.a);
                j["b"] = set_json(o.b);
                j["direction"] = o.direction == PureDirection::Sparse ? "sparse" : "dense";
                j["bound"] = rat_to_string(o.bound);
                j["depth"] = o.depth;
            } else if constexpr (std::is_same_v<T, ColourfulSubgraphOutcome>) {
                j["kind"] = "colourful-subgraph";
                j["j"] = set_json(o.j);
                j["eps"] = rat_to_string(o.eps);
                j["degenerate"] = o.degenerate;
            } else if constexpr (std::is_same_v<T, ColouringOutcome>) {
                j["kind"] = "colouring";
                j["count"] = o.colouring.count;
                j["bound"] = o.bound.str();
                j["branch"] = o.branch;
                Json cols = Json::array();
                o.colouring.domain.for_each(
                    [&](int v) { cols.push_back(o.colouring.colour[size_t(v)]); });
                j["colours"] = cols;
            } else if constexpr (std::is_same_v<T, BroomPairOutcome>) {
                j["kind"] = "broom-pair";
                j["broom"] = set_json(o.broom);
                j["handle"] = o.handle;
                j["fan"] = set_json(o.fan);
                j["q"] = set_json(o.q);
            } else if constexpr (std::is_same_v<T, DecompositionSPOutcome>) {
                j["kind"] = "decomposition-sp";
                j["s"] = set_json(o.s);
                j["p"] = set_json(o.p);
                j["ramsey"] = o.ramsey_bound;
            }
            return j;
        },
        out);
}

Json trace_json(const Trace& trace) {
    Json arr = Json::array();
    for (const auto& e : trace) {
        Json ej;
        ej["claim"] = e.claim;
        ej["detail"] = e.detail;
        ej["satisfied"] = e.satisfied;
        arr.push_back(ej);
    }
    return arr;
}

int cmd_extract(const std::string& op, const std::string& input, int k, int t, int q,
                const std::string& eps_str, int eh_a, const std::string& h_name,
                const std::string& sets_a, const std::string& sets_b,
                const std::string& blocks) {
    Graph g = load_input(input);
    Rat eps = rat_from_string(eps_str);
    P5Params params;
    params.eh_a = eh_a;
    Json j;
    try {
        if (op == "gyarfas-vertex") {
            int v = gyarfas_vertex(g, k >= 4 ? k : 5);
            j["kind"] = "vertex";
            j["v"] = v;
            j["chi_neighbourhood"] = chromatic_number(g, g.neighbours(v));
        } else if (op == "gyarfas-bound") {
            auto [col, cert] = gyarfas_colour_bound(g, k >= 4 ? k : 5);
            j["kind"] = "colouring";
            j["count"] = col.count;
            j["bound"] = cert.bound.str();
            j["chain"] = cert.chain;
        } else if (op == "min-degree-core") {
            MinDegreeCore core = min_degree_core(g, q);
            j["kind"] = "core";
            j["core"] = set_json(core.core);
            j["removed"] = core.removed;
        } else if (op == "controlled") {
            ControlledSubgraph cs = controlled_subgraph(g, std::max(q, 2));
            j["kind"] = "controlled";
            j["subgraph"] = set_json(cs.subgraph);
            j["clique_trace"] = cs.clique_trace;
        } else if (op == "vivid") {
            Blockade blockade;
            blockade.blocks = parse_sets(blocks);
            VividResult res = vivid_clique(g, blockade, eps);
            if (auto* tc = std::get_if<TransversalClique>(&res)) {
                j["kind"] = "transversal-clique";
                j["clique"] = tc->clique;
            } else if (auto* nv = std::get_if<NotVivid>(&res)) {
                j["kind"] = "not-vivid";
                j["i"] = nv->i;
                j["j"] = nv->j;
                j["v"] = nv->v;
            } else {
                const auto& gs = std::get<GreedyStuck>(res);
                j["kind"] = "greedy-stuck";
                j["partial"] = gs.partial;
                j["block"] = gs.block;
            }
        } else if (op == "eh-step") {
            auto res = eh_step(g, named_graph(h_name), eps, Submeasure::chromatic(),
                               parse_sets(blocks));
            j = std::visit([&](const auto& o) { return outcome_json(g, ExtractionOutcome{o}); },
                           res);
        } else if (op == "star-step") {
            StarResult res = star_step(g, g.vertices(), parse_set(sets_a), parse_set(sets_b), t,
                                       eps, std::max(q, 2));
            if (auto* xy = std::get_if<StarPairXY>(&res)) {
                j["kind"] = "star-pair-xy";
                j["x"] = set_json(xy->x);
                j["y"] = set_json(xy->y);
            } else {
                const auto& st = std::get<StarAnticompleteStable>(res);
                j["kind"] = "star-anticomplete-stable";
                j["p"] = set_json(st.p);
                j["q"] = set_json(st.q);
            }
        } else if (op == "terminal-pair") {
            AntiSupplier supplier =
                [&](VertexSet c) -> std::variant<std::pair<VertexSet, VertexSet>, SupplierEscape,
                                                 std::monostate> {
                InducedGraph sub = induced(g, c);
                if (is_clique(g, c) || clique_number(sub.graph) < 2) return std::monostate{};
                CoveringResult res = covering_blockade(sub.graph, 1);
                VertexSet pa, pb;
                if (auto* pr = std::get_if<AnticompletePairOutcome>(&res)) {
                    pa = pr->a;
                    pb = pr->b;
                } else {
                    const auto& cb = std::get<CoveringBlockadeOutcome>(res);
                    if (!is_anticomplete_between(sub.graph, cb.d.back(), cb.e))
                        return std::monostate{};
                    pa = cb.d.back();
                    pb = cb.e;
                }
                VertexSet oa, ob;
                pa.for_each([&](int v) { oa.add(sub.to_parent[size_t(v)]); });
                pb.for_each([&](int v) { ob.add(sub.to_parent[size_t(v)]); });
                return std::pair<VertexSet, VertexSet>{oa, ob};
            };
            TerminalPairResult res = terminal_complete_pair(g, eps, supplier);
            j = outcome_json(g, ExtractionOutcome{std::get<CompletePairOutcome>(res)});
        } else if (op == "near-pure") {
            auto out = near_pure_pair(g, named_graph(h_name), eps, Submeasure::chromatic());
            j = outcome_json(g, ExtractionOutcome{out});
        } else if (op == "quasi-pure") {
            auto res = quasi_pure(g, named_graph(h_name), eps, Submeasure::chromatic());
            j = std::visit([&](const auto& o) { return outcome_json(g, ExtractionOutcome{o}); },
                           res);
        } else if (op == "tbroom-decompose") {
            TbroomDecomposition dec = tbroom_decompose(g, t);
            DecompositionSPOutcome o;
            o.s = dec.s;
            o.p = dec.p;
            o.ramsey_bound = dec.ramsey_tw;
            j = outcome_json(g, ExtractionOutcome{o});
        } else if (op == "tbroom-colour") {
            ColouringOutcome out = tbroom_colour(g, t);
            j = outcome_json(g, ExtractionOutcome{out});
        } else if (op == "covering-blockade") {
            CoveringResult res = covering_blockade(g, k);
            if (auto* p = std::get_if<AnticompletePairOutcome>(&res)) {
                j = outcome_json(g, ExtractionOutcome{*p});
            } else {
                const auto& cb = std::get<CoveringBlockadeOutcome>(res);
                j["kind"] = "covering-blockade";
                Json ds = Json::array();
                for (const auto& d : cb.d) ds.push_back(set_json(d));
                j["d"] = ds;
                j["e"] = set_json(cb.e);
                j["degenerate"] = cb.degenerate;
            }
        } else if (op == "broom-anti") {
            BroomResult res = broom_or_anticomplete(g, k, t);
            j = std::visit([&](const auto& o) { return outcome_json(g, ExtractionOutcome{o}); },
                           res);
        } else if (op == "unmixed") {
            // checks every anticomplete pair of components? No: the CLI form
            // takes the first two components of the complement split
            auto comps = components(g, g.vertices());
            if (comps.size() < 2) throw InvalidInput("unmixed: need an anticomplete pair");
            auto witness = assert_unmixed(g, comps[0], comps[1]);
            j["kind"] = "unmixed";
            j["ok"] = !witness.has_value();
            if (witness) j["p5"] = witness->p5;
        } else if (op == "terminal") {
            TerminalPartition tp = terminal_partition(g, eps);
            j["kind"] = "terminal-partition";
            Json as = Json::array();
            for (const auto& a : tp.a) as.push_back(set_json(a));
            j["a"] = as;
            j["b"] = set_json(tp.b);
            j["d"] = set_json(tp.d);
        } else if (op == "mid") {
            // P = N(v), Q = nonneighbours of v, for the lowest vertex; --a/--b
            // override the defaults
            VertexSet pset = sets_a.empty() ? g.neighbours(0) : parse_set(sets_a);
            VertexSet qset = sets_b.empty() ? g.vertices().minus(g.closed_neighbourhood(0))
                                            : parse_set(sets_b);
            auto nc = nonneighbour_cover(g, pset, qset, params);
            j["kind"] = "nonneighbour-cover";
            j["t"] = set_json(nc.t);
            j["cover"] = set_json(nc.cover);
            j["bound_holds"] = nc.bound_holds;
            j["eh_violation"] = nc.eh_violation;
        } else if (op == "colourful-pair") {
            auto out = colourful_complete_pair(g, eps);
            j = outcome_json(g, ExtractionOutcome{out});
        } else if (op == "linanti") {
            LinantiResult res = linanti(g, eps, params);
            j = std::visit([&](const auto& o) { return outcome_json(g, ExtractionOutcome{o}); },
                           res.outcome);
            j["trace"] = trace_json(res.trace);
        } else if (op == "locdense") {
            LocdenseResult res = locdense(g, eps, params);
            j = std::visit([&](const auto& o) { return outcome_json(g, ExtractionOutcome{o}); },
                           res.outcome);
            j["trace"] = trace_json(res.trace);
        } else if (op == "p5-pair") {
            auto out = p5_complete_pair(g, params);
            j = outcome_json(g, ExtractionOutcome{out});
        } else if (op == "p5-chi") {
            ChiBoundResult res = p5_chi_bound(g, params);
            j["kind"] = "chi-bound";
            j["count"] = res.colouring.count;
            j["certificate"] = res.certificate.str();
            j["branch"] = res.branch;
        } else {
            std::cerr << "unknown extract op: " << op << "\n";
            return 2;
        }
    } catch (const NotHFree& e) {
        j["error"] = e.what();
        j["witness"] = e.copy;
        emit(j, "");
        return 1;
    }
    emit(j, "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pure-pair extraction laboratory"};
    app.require_subcommand(1);

    // oracle
    std::string oracle_what, oracle_input, oracle_h = "P5";
    auto* oracle_cmd = app.add_subcommand("oracle", "exact ground-truth computations");
    oracle_cmd->add_option("what", oracle_what, "chi|omega|alpha|degeneracy|copy")->required();
    oracle_cmd->add_option("--input,-i", oracle_input, "edge-list or graph6 file (- for stdin)");
    oracle_cmd->add_option("--pattern", oracle_h, "pattern graph for copy (named form, e.g. P5)");

    // gen
    std::string gen_family, gen_out, gen_format = "edge", gen_h = "P5", gen_name;
    int gen_n = 10, gen_k = 3, gen_t = 1, gen_a = 1, gen_b = 1, gen_m = 1;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 1;
    std::vector<int> gen_parts;
    auto* gen_cmd = app.add_subcommand("gen", "graph generators");
    gen_cmd->add_option("family", gen_family,
                        "gnp|h_free|broom|path|double_star|c5_join_power|complete_multipartite|named")
        ->required();
    gen_cmd->add_option("--n", gen_n);
    gen_cmd->add_option("--p", gen_p);
    gen_cmd->add_option("--k", gen_k);
    gen_cmd->add_option("--t", gen_t);
    gen_cmd->add_option("--a", gen_a);
    gen_cmd->add_option("--b", gen_b);
    gen_cmd->add_option("--m", gen_m);
    gen_cmd->add_option("--parts", gen_parts);
    gen_cmd->add_option("--exclude", gen_h, "excluded graph for h_free");
    gen_cmd->add_option("--name", gen_name, "named graph (K5, C5, P4, E3, petersen)");
    gen_cmd->add_option("--seed", gen_seed);
    gen_cmd->add_option("--out", gen_out);
    gen_cmd->add_option("--format", gen_format, "edge|g6");

    // extract
    std::string ex_op, ex_input, ex_eps = "1/3", ex_h = "P5";
    int ex_k = 1, ex_t = 1, ex_q = 2, ex_eh_a = 4;
    auto* ex_cmd = app.add_subcommand("extract", "lemma extraction with certificates");
    ex_cmd->add_option("op", ex_op)->required();
    ex_cmd->add_option("--input,-i", ex_input);
    ex_cmd->add_option("--k", ex_k);
    ex_cmd->add_option("--t", ex_t);
    ex_cmd->add_option("--q", ex_q);
    ex_cmd->add_option("--eps", ex_eps, "rational p/q");
    ex_cmd->add_option("--eh-a", ex_eh_a);
    ex_cmd->add_option("--pattern", ex_h);
    std::string ex_a, ex_b, ex_blocks;
    ex_cmd->add_option("--a", ex_a, "vertex list, e.g. 0,1,2");
    ex_cmd->add_option("--b", ex_b, "vertex list");
    ex_cmd->add_option("--blocks", ex_blocks, "semicolon-separated vertex lists");

    // verify
    std::string ver_lemma, ver_out, ver_config, ver_h = "P5", ver_eps = "1/3";
    int ver_samples = 100, ver_max_n = 12, ver_k = 1, ver_t = 1, ver_workers = 0;
    std::uint64_t ver_seed = 1;
    auto* ver_cmd = app.add_subcommand("verify", "campaign runner");
    ver_cmd->add_option("lemma", ver_lemma)->required();
    ver_cmd->add_option("--config", ver_config, "campaign config JSON");
    ver_cmd->add_option("--samples", ver_samples);
    ver_cmd->add_option("--seed", ver_seed);
    ver_cmd->add_option("--max-n", ver_max_n);
    ver_cmd->add_option("--k", ver_k);
    ver_cmd->add_option("--t", ver_t);
    ver_cmd->add_option("--eps", ver_eps);
    ver_cmd->add_option("--exclude", ver_h);
    ver_cmd->add_option("--workers", ver_workers);
    ver_cmd->add_option("--out", ver_out);

    // search
    std::string search_target, search_eps = "1/2", search_corpus, search_out;
    int search_samples = 50, search_max_n = 9;
    std::uint64_t search_seed = 1;
    auto* search_cmd = app.add_subcommand("search", "conjecture counterexample search");
    search_cmd->add_option("target", search_target, "clful|modp5")->required();
    search_cmd->add_option("--eps", search_eps);
    search_cmd->add_option("--corpus", search_corpus, "graph6 file (default: random P5-free)");
    search_cmd->add_option("--samples", search_samples);
    search_cmd->add_option("--max-n", search_max_n);
    search_cmd->add_option("--seed", search_seed);
    search_cmd->add_option("--out", search_out);

    // replay
    std::string rep_report;
    int rep_index = 0;
    auto* rep_cmd = app.add_subcommand("replay", "re-run one campaign record");
    rep_cmd->add_option("--report", rep_report)->required();
    rep_cmd->add_option("--index", rep_index)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle_cmd->parsed()) return cmd_oracle(oracle_what, oracle_input, oracle_h);
        if (gen_cmd->parsed()) {
            GeneratorSpec spec;
            spec.family = gen_family;
            spec.n = gen_n;
            spec.p = gen_p;
            spec.k = gen_k;
            spec.t = gen_t;
            spec.a = gen_a;
            spec.b = gen_b;
            spec.m = gen_m;
            spec.parts = gen_parts;
            spec.h_name = gen_h;
            spec.name = gen_name;
            Graph g = build_family(spec, gen_seed);
            std::ostringstream os;
            if (gen_format == "g6")
                os << to_graph6(g) << "\n";
            else
                write_edge_list(os, g);
            if (gen_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream out(gen_out);
                out << os.str();
            }
            return 0;
        }
        if (ex_cmd->parsed())
            return cmd_extract(ex_op, ex_input, ex_k, ex_t, ex_q, ex_eps, ex_eh_a, ex_h,
                               ex_a, ex_b, ex_blocks);
        if (ver_cmd->parsed()) {
            CampaignConfig cfg;
            if (!ver_config.empty()) {
                std::ifstream in(ver_config);
                if (!in) throw InvalidInput("cannot open config " + ver_config);
                Json j;
                in >> j;
                cfg = report_from_json(Json{{"config", j}}).config;
            } else {
                cfg.lemma = ver_lemma;
                cfg.samples_per_spec = ver_samples;
                cfg.seed = ver_seed;
                cfg.max_n = ver_max_n;
                cfg.k = ver_k;
                cfg.t = ver_t;
                cfg.eps = rat_from_string(ver_eps);
                cfg.h = ver_h;
                cfg.workers = ver_workers;
                GeneratorSpec spec;
                spec.family = "h_free";
                spec.n = ver_max_n;
                spec.p = 0.5;
                if (ver_lemma == "tbroom-decompose" || ver_lemma == "tbroom-colour")
                    spec.h_name = "broom_3_" + std::to_string(ver_t);
                else if (ver_lemma == "star-step" && ver_h == "P5")
                    spec.h_name = "K3";  // keeps omega low enough for |A| >= w^(t+2)
                else
                    spec.h_name = ver_h;
                cfg.generators.push_back(spec);
            }
            cfg.lemma = ver_lemma;
            CampaignReport report = run_campaign(cfg);
            Json j = report_to_json(report);
            emit(j, ver_out.empty() ? cfg.out_path : ver_out);
            std::cerr << "pass=" << report.pass << " fail=" << report.fail
                      << " skipped=" << report.skipped << "\n";
            return report.fail == 0 ? 0 : 1;
        }
        if (search_cmd->parsed()) {
            std::vector<Graph> corpus;
            if (!search_corpus.empty()) {
                std::ifstream in(search_corpus);
                if (!in) throw InvalidInput("cannot open corpus " + search_corpus);
                corpus = read_graph6_stream(in);
            } else {
                for (int i = 0; i < search_samples; ++i) {
                    try {
                        corpus.push_back(random_h_free(search_max_n, 0.5, path_graph(5),
                                                       Rng::derive(search_seed, unsigned(i))));
                    } catch (const RepairExhausted&) {
                    }
                }
            }
            SearchReport report =
                search_counterexample(search_target, rat_from_string(search_eps), corpus);
            emit(search_to_json(report), search_out);
            return 0;
        }
        if (rep_cmd->parsed()) {
            std::ifstream in(rep_report);
            if (!in) throw InvalidInput("cannot open report " + rep_report);
            Json j;
            in >> j;
            CampaignReport report = report_from_json(j);
            if (rep_index < 0 || rep_index >= int(report.records.size()))
                throw InvalidInput("record index out of range");
            SampleRecord fresh = replay(report.config, report.records[size_t(rep_index)]);
            const SampleRecord& old = report.records[size_t(rep_index)];
            bool identical = fresh.outcome_tag == old.outcome_tag && fresh.outcome == old.outcome &&
                             fresh.pass == old.pass && fresh.graph6 == old.graph6;
            Json out;
            out["identical"] = identical;
            out["outcome_tag"] = fresh.outcome_tag;
            out["outcome"] = fresh.outcome;
            out["pass"] = fresh.pass;
            out["fail_reason"] = fresh.fail_reason;
            emit(out, "");
            return identical && fresh.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
