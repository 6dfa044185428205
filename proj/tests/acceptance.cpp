// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// An optional --graph6 FILE switches criterion 1 to an exhaustive catalog.

#include "purepairs/harness.hpp"
#include "purepairs/io.hpp"
#include "purepairs/rng.hpp"

#include "naive_oracles.hpp"

#include <array>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace purepairs;

namespace {

int g_failures = 0;

struct CheckFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFail(what);
}

void run_criterion(int number, const std::string& name,
                   const std::function<void(std::ostream&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::ostringstream note;
    bool ok = true;
    std::string reason;
    try {
        body(note);
    } catch (const std::exception& e) {
        ok = false;
        reason = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << name << " (" << note.str()
         << (note.str().empty() ? "" : ", ") << secs << "s)";
    if (!ok) line << "  -- " << reason;
    std::cout << line.str() << std::endl;
    if (!ok) ++g_failures;
}

std::vector<Graph> p5free_corpus(int count, int max_n, std::uint64_t seed) {
    std::vector<Graph> out;
    out.push_back(c5_join_power(1));
    out.push_back(c5_join_power(2));
    out.push_back(c5_join_power(3));
    out.push_back(broom_graph(3, 2));
    out.push_back(complete_multipartite_graph({2, 3, 2}));
    out.push_back(join(complete_graph(1), cycle_graph(5)));
    for (const Graph& g : out)
        if (!is_h_free(g, path_graph(5))) throw CheckFail("seed family not P5-free");
    std::uint64_t stream = 0;
    while (int(out.size()) < count) {
        int n = 5 + int(stream % std::uint64_t(max_n - 4));
        double p = 0.35 + 0.15 * double(stream % 3);
        try {
            Graph g = random_h_free(n, p, path_graph(5), Rng::derive(seed, stream));
            if (!is_h_free(g, path_graph(5))) throw CheckFail("corpus graph not P5-free");
            out.push_back(g);
        } catch (const RepairExhausted&) {
        }
        ++stream;
    }
    return out;
}

std::string g_catalog_path;

void criterion_oracles(std::ostream& note) {
    std::vector<Graph> patterns{path_graph(4), path_graph(5), broom_graph(3, 2)};
    long long checked = 0;
    auto check_one = [&](const Graph& g) {
        int n = g.size();
        int chi = chromatic_number(g);
        int om = clique_number(g);
        int al = stability_number(g, g.vertices());
        int dg = degeneracy(g).degeneracy;
        require(chi >= om, "chi >= omega");
        require(chi * std::max(al, 1) >= n, "chi >= n/alpha");
        require(chi <= dg + 1, "chi <= degeneracy + 1");
        for (const Graph& h : patterns)
            require(find_induced_copy(h, g).has_value() == testing::naive_has_copy(h, g),
                    "copy search agrees with the naive subset oracle");
        ++checked;
    };
    if (!g_catalog_path.empty()) {
        std::ifstream in(g_catalog_path);
        require(bool(in), "cannot open catalog");
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            check_one(from_graph6(line));
        }
    } else {
        for (int i = 0; i < 10000; ++i) {
            std::uint64_t s = Rng::derive(1001, std::uint64_t(i));
            Rng rng(s);
            int n = 1 + int(rng.below(10));
            check_one(gnp(n, 0.2 + 0.6 * double(i % 4) / 3.0, rng.next()));
        }
    }
    note << checked << " graphs";
}

void criterion_gyarfas(std::ostream& note, const std::vector<Graph>& corpus) {
    long long ran = 0;
    for (const Graph& g : corpus) {
        if (chromatic_number(g) < 2) continue;
        int v = gyarfas_vertex(g, 5);
        require(3 * chromatic_number(g, g.neighbours(v)) >= chromatic_number(g),
                "3 chi(N(v)) >= chi(G)");
        auto [col, cert] = gyarfas_colour_bound(g, 5);
        require(col.proper(g), "colouring proper");
        int w = clique_number(g);
        require(Int(col.count) <= ipow(Int(3), unsigned(std::max(w - 1, 0))),
                "count <= 3^(w-1)");
        ++ran;
    }
    require(ran >= 1000, "at least 1000 qualifying samples");
    note << ran << " graphs";
}

void criterion_core_and_control(std::ostream& note, const std::vector<Graph>& corpus) {
    long long ran = 0;
    for (size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        int chi = chromatic_number(g);
        if (chi >= 2) {
            int p = 1 + int(i % size_t(chi - 1));
            MinDegreeCore core = min_degree_core(g, p);
            require(validate_min_degree_core(g, p, core).pass,
                    "min_degree_core postconditions");
        }
        if (g.size() >= 1) {
            int q = std::max(2, clique_number(g));
            require(validate_controlled_subgraph(g, q, controlled_subgraph(g, q)).pass,
                    "controlled_subgraph postconditions");
        }
        ++ran;
    }
    note << ran << " graphs";
}

void criterion_tbroom(std::ostream& note) {
    long long colour_runs = 0, decompose_runs = 0;
    for (int t = 1; t <= 3; ++t) {
        Graph broom = t_broom_graph(t);
        long long done = 0;
        std::uint64_t stream = 0;
        while (done < 500) {
            int n = 5 + int(stream % 8);
            Graph g;
            try {
                g = random_h_free(n, 0.5, broom, Rng::derive(std::uint64_t(2000 + t), stream++));
            } catch (const RepairExhausted&) {
                continue;
            }
            auto out = tbroom_colour(g, t);
            require(validate_tbroom_colour(g, t, out).pass, "tbroom_colour valid");
            ++colour_runs;
            if (clique_number(g) >= 2) {
                auto dec = tbroom_decompose(g, t);
                require(validate_tbroom_decompose(g, t, dec).pass, "tbroom_decompose valid");
                ++decompose_runs;
            }
            ++done;
        }
    }
    require(colour_runs >= 1500, "at least 500 per t");
    note << colour_runs << " colourings, " << decompose_runs << " decompositions";
}

void criterion_vivid(std::ostream& note) {
    long long attempts = 0, cliques = 0;
    for (int i = 0; attempts < 10000; ++i) {
        Rng rng(Rng::derive(3003, std::uint64_t(i)));
        int n = 4 + int(rng.below(9));
        Graph g = gnp(n, 0.25 + 0.5 * double(i % 3) / 2.0, rng.next());
        int w = clique_number(g);
        if (w < 2) continue;
        Rat eps(1, w);
        Blockade blockade;
        VertexSet used;
        for (int attempt = 0; attempt < 3 * n; ++attempt) {
            VertexSet rest = g.vertices().minus(used);
            if (rest.empty()) break;
            VertexSet cand;
            auto pool = rest.to_vector();
            int want = 1 + int(rng.below(3));
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
        ++attempts;
        if (blockade.blocks.empty()) continue;
        require(int(blockade.blocks.size()) <= w, "(1/w)-vivid blockade no longer than omega");
        VividResult res = vivid_clique(g, blockade, eps);
        require(std::holds_alternative<TransversalClique>(res),
                "vivid input yields a transversal clique");
        const auto& tc = std::get<TransversalClique>(res);
        require(is_clique(g, VertexSet::from(tc.clique)), "transversal pairwise adjacent");
        ++cliques;
    }
    require(attempts >= 10000, "attempt volume");
    note << attempts << " attempts, " << cliques << " cliques";
}

void criterion_submeasure_lemmas(std::ostream& note) {
    long long runs = 0;
    const std::vector<std::pair<std::string, Graph>> patterns{
        {"K3", complete_graph(3)}, {"P4", path_graph(4)}, {"P5", path_graph(5)}};
    for (const auto& [name, h] : patterns) {
        long long done = 0;
        std::uint64_t stream = 0;
        while (done < 500) {
            int n = 4 + int(stream % 9);
            Graph g;
            try {
                g = random_h_free(n, 0.45, h, Rng::derive(4004, stream++));
            } catch (const RepairExhausted&) {
                continue;
            }
            if (g.size() < 2) continue;
            for (const Submeasure& mu : {Submeasure::chromatic(), Submeasure::cardinality()}) {
                auto out = near_pure_pair(g, h, Rat(1, 2), mu);
                require(validate_near_pure(g, h, Rat(1, 2), mu, out).pass,
                        "near_pure_pair mu-inequalities (" + name + ", " + mu.name + ")");
                require(out.depth <= h.size(), "recursion depth <= |H|");
                Rat eps(1, std::max(2, clique_number(g)));
                auto qres = quasi_pure(g, h, eps, mu);
                require(validate_quasi(g, h, eps, mu, qres).pass,
                        "quasi_pure mu-inequalities (" + name + ", " + mu.name + ")");
            }
            ++done;
            ++runs;
        }
    }
    note << runs << " instances";
}

void criterion_brooms(std::ostream& note) {
    long long broom_runs = 0, blockades = 0;
    std::uint64_t stream = 0;
    const std::array<std::pair<int, int>, 3> kts{std::pair{1, 1}, std::pair{2, 1},
                                                 std::pair{3, 2}};
    while (broom_runs < 300) {
        Rng rng(Rng::derive(5005, stream++));
        int n = 5 + int(rng.below(8));
        Graph g = gnp(n, 0.3 + 0.4 * double(stream % 3) / 2.0, rng.next());
        if (clique_number(g) < 2 || is_clique(g, g.vertices())) continue;
        auto [k, t] = kts[stream % 3];
        BroomResult res = broom_or_anticomplete(g, k, t);
        require(validate_broom_anti(g, k, t, res).pass, "broom_or_anticomplete outcome valid");
        ++broom_runs;
        int ck = 1 + int(stream % 2);
        CoveringResult cres = covering_blockade(g, ck);
        require(validate_covering(g, ck, cres).pass, "covering blockade/pair valid");
        if (std::holds_alternative<CoveringBlockadeOutcome>(cres)) ++blockades;
    }
    require(blockades > 0, "some runs return blockades");
    note << broom_runs << " broom runs, " << blockades << " blockades";
}

void criterion_p5(std::ostream& note, const std::vector<Graph>& corpus) {
    P5Params params;
    long long ran = 0, chi_runs = 0;
    for (size_t i = 0; i < corpus.size() && ran < 320; ++i) {
        const Graph& g = corpus[i];
        if (clique_number(g) < 2) continue;
        ControlledSubgraph cs = controlled_subgraph(g, clique_number(g));
        if (clique_number(g, cs.subgraph) >= 2) {
            TerminalPartition tp = terminal_partition(g, cs.subgraph, Rat(0));
            require(validate_terminal_partition(g, cs.subgraph, tp).pass,
                    "terminal partition bullets");
        }
        LinantiResult lr = linanti(g, Rat(1, 4), params);
        require(validate_linanti(g, Rat(1, 4), params, lr).pass, "linanti outcome valid");
        LocdenseResult ld = locdense(g, Rat(1, 3), params);
        require(validate_locdense(g, Rat(1, 3), params, ld).pass, "locdense outcome valid");
        CompletePairOutcome cp = p5_complete_pair(g, params);
        require(validate_p5_pair(g, params, cp).pass, "p5_complete_pair valid");
        if (clique_number(g) >= 3) {
            ChiBoundResult cb = p5_chi_bound(g, params);
            require(validate_p5_chi(g, params, cb).pass, "p5_chi_bound valid");
            ++chi_runs;
        }
        ++ran;
    }
    require(ran >= 300, "at least 300 qualifying samples");
    require(chi_runs > 0, "chi bound exercised");
    note << ran << " graphs, " << chi_runs << " chi bounds";
}

void criterion_determinism(std::ostream& note) {
    CampaignConfig cfg;
    cfg.lemma = "near-pure";
    cfg.samples_per_spec = 60;
    cfg.seed = 777;
    cfg.max_n = 10;
    cfg.h = "P5";
    cfg.eps = Rat(1, 2);
    GeneratorSpec spec;
    spec.family = "h_free";
    spec.n = 9;
    spec.p = 0.5;
    spec.h_name = "P5";
    cfg.generators.push_back(spec);
    cfg.workers = 1;
    CampaignReport seq = run_campaign(cfg);
    cfg.workers = 8;
    CampaignReport par = run_campaign(cfg);
    require(seq.records.size() == par.records.size(), "record counts equal");
    for (size_t i = 0; i < seq.records.size(); ++i) {
        require(seq.records[i].outcome_tag == par.records[i].outcome_tag &&
                    seq.records[i].outcome == par.records[i].outcome &&
                    seq.records[i].graph6 == par.records[i].graph6 &&
                    seq.records[i].pass == par.records[i].pass,
                "outcome fields identical across parallelism 1 and 8");
    }
    Rng rng(909090);
    for (int i = 0; i < 50; ++i) {
        const SampleRecord& old = seq.records[size_t(rng.below(seq.records.size()))];
        SampleRecord fresh = replay(cfg, old);
        require(fresh.outcome_tag == old.outcome_tag && fresh.outcome == old.outcome &&
                    fresh.graph6 == old.graph6 && fresh.pass == old.pass,
                "replayed record byte-identical");
    }
    note << seq.records.size() << " records, 50 replays";
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--graph6") g_catalog_path = argv[i + 1];

    std::vector<Graph> corpus = p5free_corpus(1050, 14, 20240608);

    run_criterion(1, "oracle soundness", criterion_oracles);
    run_criterion(2, "Gyarfas vertex and colour bound",
                  [&](std::ostream& n) { criterion_gyarfas(n, corpus); });
    run_criterion(3, "degeneracy core and controlled subgraph",
                  [&](std::ostream& n) { criterion_core_and_control(n, corpus); });
    run_criterion(4, "t-broom decomposition and colouring", criterion_tbroom);
    run_criterion(5, "vivid blockades", criterion_vivid);
    run_criterion(6, "submeasure near-pure and quasi-pure", criterion_submeasure_lemmas);
    run_criterion(7, "covering blockades and broom pairs", criterion_brooms);
    run_criterion(8, "P5 pipeline", [&](std::ostream& n) { criterion_p5(n, corpus); });
    run_criterion(9, "determinism and replay", criterion_determinism);

    if (g_failures == 0) {
        std::cout << "acceptance: all criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << g_failures << " criterion(s) failed" << std::endl;
    return 1;
}
