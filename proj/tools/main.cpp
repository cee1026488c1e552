#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bihyp/analysis.hpp"
#include "bihyp/certificate.hpp"
#include "bihyp/constructions.hpp"
#include "bihyp/enumeration.hpp"
#include "bihyp/io.hpp"
#include "bihyp/solver.hpp"
#include "bihyp/store.hpp"
#include "bihyp/suite.hpp"
#include "bihyp/version.hpp"

namespace {

using nlohmann::json;

json verdict_json(const bihyp::Verdict& v) {
    return json::parse(bihyp::verdict_to_json(v));
}

bihyp::BiHypergraph as_bi(const bihyp::MixedHypergraph& h, const char* what) {
    if (!h.is_bi())
        throw std::invalid_argument(std::string(what) +
                                    " needs a bi-hypergraph (C = D)");
    return bihyp::BiHypergraph(h);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed hypergraph colorability toolkit"};
    app.set_version_flag("--version", std::string(bihyp::kVersion));
    app.require_subcommand(1);
    int rc = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "build a named construction");
    std::string g_family, g_out;
    int g_n = 0, g_l = 0, g_m = 0, g_k = 0;
    gen->add_option("--family", g_family,
                    "knlm | hk | fano | muc (muc picks the family for --n)")
        ->required();
    gen->add_option("--n", g_n, "order (knlm, muc)");
    gen->add_option("--l", g_l, "co-edge size (knlm)");
    gen->add_option("--m", g_m, "edge size (knlm)");
    gen->add_option("--k", g_k, "block count (hk)");
    gen->add_option("--out", g_out,
                    "output file (.json or edge list by extension); stdout when omitted");
    gen->callback([&]() {
        bihyp::ConstructionSpec spec{g_family, g_n, g_l, g_m, g_k};
        bihyp::MixedHypergraph h = bihyp::build(spec);
        bihyp::Provenance prov = bihyp::provenance_of(spec);
        if (g_out.empty())
            std::cout << bihyp::to_json(h, prov);
        else
            bihyp::write_instance_file(g_out, h, prov);
        std::cerr << "generated " << prov.family << ": n=" << h.n() << ", |C|="
                  << h.c_edges().size() << ", |D|=" << h.d_edges().size()
                  << (g_out.empty() ? "" : " -> " + g_out) << "\n";
    });

    // solve
    auto* solve = app.add_subcommand("solve", "decide colorability of an instance");
    std::string s_in;
    bool s_chibar = false, s_minimal = false;
    int s_max_colors = -1, s_jobs = 1;
    solve->add_option("instance", s_in, "instance file")->required();
    solve->add_flag("--chibar", s_chibar, "also compute the upper chromatic number");
    solve->add_flag("--minimal", s_minimal,
                    "also check minimal uncolorability (bi-hypergraphs)");
    solve->add_option("--max-colors", s_max_colors, "cap the palette (default: order)");
    solve->add_option("--jobs", s_jobs, "workers for --minimal deletions");
    solve->callback([&]() {
        bihyp::ParsedInstance inst = bihyp::read_instance_file(s_in);
        bihyp::SolveOptions opts;
        opts.max_colors = s_max_colors;
        bihyp::Verdict v = bihyp::decide_colorable(inst.h, opts);
        json j = verdict_json(v);
        std::cerr << s_in << ": " << bihyp::to_string(v.status) << " ("
                  << v.nodes_explored << " nodes, " << v.elapsed_ms << " ms)\n";
        if (s_chibar) {
            bihyp::ChiBar cb = bihyp::upper_chromatic_number(inst.h);
            if (cb.value) j["chibar"] = *cb.value;
            else j["chibar"] = nullptr;
            if (cb.witness) j["chibar_witness"] = cb.witness->colors;
            std::cerr << "  chibar: "
                      << (cb.value ? std::to_string(*cb.value) : "none") << "\n";
        }
        if (s_minimal) {
            bihyp::MinimalityReport rep =
                bihyp::is_minimal_uncolorable(as_bi(inst.h, "--minimal"), s_jobs);
            j["minimal_uncolorable"] = rep.minimal_uncolorable;
            std::cerr << "  minimal uncolorable: "
                      << (rep.minimal_uncolorable ? "true" : "false") << "\n";
        }
        std::cout << j.dump(2) << "\n";
    });

    // chibar
    auto* chibar = app.add_subcommand("chibar", "upper chromatic number");
    std::string c_in;
    chibar->add_option("instance", c_in, "instance file")->required();
    chibar->callback([&]() {
        bihyp::ParsedInstance inst = bihyp::read_instance_file(c_in);
        bihyp::ChiBar cb = bihyp::upper_chromatic_number(inst.h);
        json j;
        if (cb.value) j["chibar"] = *cb.value;
        else j["chibar"] = nullptr;
        if (cb.witness) {
            j["witness"]["colors"] = cb.witness->colors;
            j["witness"]["num_colors"] = cb.witness->num_colors;
        } else {
            j["witness"] = nullptr;
        }
        j["nodes_explored"] = cb.nodes_explored;
        j["elapsed_ms"] = cb.elapsed_ms;
        std::cout << j.dump(2) << "\n";
        std::cerr << c_in << ": chibar "
                  << (cb.value ? std::to_string(*cb.value) : "none (uncolorable)")
                  << "\n";
    });

    // minimal
    auto* minimal = app.add_subcommand("minimal", "minimal uncolorability report");
    std::string m_in;
    int m_jobs = 1;
    minimal->add_option("instance", m_in, "instance file")->required();
    minimal->add_option("--jobs", m_jobs, "workers for the deletion fan-out");
    minimal->callback([&]() {
        bihyp::ParsedInstance inst = bihyp::read_instance_file(m_in);
        bihyp::MinimalityReport rep =
            bihyp::is_minimal_uncolorable(as_bi(inst.h, "minimal"), m_jobs);
        json j;
        j["minimal_uncolorable"] = rep.minimal_uncolorable;
        j["base"] = verdict_json(rep.base);
        j["deletions"] = json::array();
        for (const auto& [edge, verdict] : rep.deletions)
            j["deletions"].push_back(
                {{"edge", edge}, {"status", bihyp::to_string(verdict.status)}});
        std::cout << j.dump(2) << "\n";
        std::cerr << m_in << ": minimal uncolorable = "
                  << (rep.minimal_uncolorable ? "true" : "false") << "\n";
    });

    // bounds
    auto* bounds = app.add_subcommand("bounds", "sparse colorability bound reports");
    std::string b_in;
    bounds->add_option("instance", b_in, "instance file (uniform bi-hypergraph)")
        ->required();
    bounds->callback([&]() {
        bihyp::ParsedInstance inst = bihyp::read_instance_file(b_in);
        json arr = json::array();
        for (const bihyp::BoundReport& b : bihyp::all_bounds(as_bi(inst.h, "bounds"))) {
            arr.push_back({{"bound", b.bound},
                           {"threshold", b.threshold},
                           {"measured", b.measured},
                           {"satisfied", b.satisfied},
                           {"conclusion", b.conclusion}});
            std::cerr << b.bound << ": measured " << b.measured << " vs threshold "
                      << b.threshold << " -> " << b.conclusion << "\n";
        }
        std::cout << arr.dump(2) << "\n";
    });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "identify a non-adjacent vertex pair");
    std::string r_in, r_out;
    int r_u = -1, r_v = -1;
    reduce->add_option("instance", r_in, "instance file")->required();
    reduce->add_option("--u", r_u, "first vertex (default: first non-adjacent pair)");
    reduce->add_option("--v", r_v, "second vertex");
    reduce->add_option("--out", r_out, "write the quotient here instead of stdout");
    reduce->callback([&]() {
        bihyp::ParsedInstance inst = bihyp::read_instance_file(r_in);
        if (r_u < 0 || r_v < 0) {
            auto pair = bihyp::find_nonadjacent_pair(inst.h);
            if (!pair)
                throw std::invalid_argument("every vertex pair is adjacent; nothing to identify");
            r_u = pair->first;
            r_v = pair->second;
        }
        bihyp::IdentifyResult res = bihyp::identify(inst.h, r_u, r_v);
        if (r_out.empty())
            std::cout << bihyp::to_json(res.h);
        else
            bihyp::write_instance_file(r_out, res.h);
        std::cerr << "identified " << r_u << " and " << r_v << " into vertex "
                  << res.merged << "; dropped " << res.dropped_edges
                  << " superset edges; order " << inst.h.n() << " -> " << res.h.n()
                  << "\n";
    });

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "isomorph-free sweep over r-uniform bi-hypergraphs");
    bihyp::SweepSpec spec;
    std::string e_pred = "colorable", e_store;
    enumerate->add_option("--n", spec.n, "order (1..12)")->required();
    enumerate->add_option("--r", spec.r, "edge size")->capture_default_str();
    enumerate->add_option("--min-edges", spec.min_edges, "smallest edge count")
        ->capture_default_str();
    enumerate->add_option("--max-edges", spec.max_edges, "largest edge count")
        ->required();
    enumerate->add_option("--min-degree", spec.filters.min_degree,
                          "drop classes with a vertex below this degree");
    enumerate->add_flag("--adjacent", spec.filters.all_pairs_adjacent,
                        "keep only classes where every vertex pair is adjacent");
    enumerate->add_flag("--connected", spec.filters.connected,
                        "keep only connected classes");
    enumerate
        ->add_option("--predicate", e_pred, "colorable | minimal-uncolorable")
        ->check(CLI::IsMember({"colorable", "minimal-uncolorable"}))
        ->capture_default_str();
    enumerate->add_option("--jobs", spec.jobs, "worker threads")->capture_default_str();
    enumerate->add_option("--shard-depth", spec.shard_depth,
                          "augmentation depth where subtrees split")
        ->capture_default_str();
    enumerate->add_option("--budget-ms", spec.budget_ms,
                          "wall-clock budget; 0 = unbounded");
    enumerate->add_option("--store-dir", e_store, "persist verdicts into this store");
    enumerate->add_option("--id", spec.id, "override the sweep id");
    enumerate->callback([&]() {
        spec.predicate = e_pred == "colorable"
                             ? bihyp::SweepPredicate::Colorable
                             : bihyp::SweepPredicate::MinimalUncolorable;
        std::unique_ptr<bihyp::VerdictStore> store;
        if (!e_store.empty()) store = std::make_unique<bihyp::VerdictStore>(e_store);
        bihyp::SweepSummary s = bihyp::run_sweep(spec, store.get());
        std::cout << bihyp::summary_to_json(s);
        std::cerr << s.id << ": " << s.classes << " classes, " << s.filtered
                  << " evaluated, " << s.violations << " violations ("
                  << s.elapsed_ms << " ms)\n";
        if (s.violations > 0) rc = 2;
    });

    // verify
    auto* verify = app.add_subcommand("verify", "run the claim verification suite");
    std::string v_suite = "quick", v_out;
    bihyp::SuiteOptions v_opts;
    verify->add_option("--suite", v_suite, "quick | paper")
        ->check(CLI::IsMember({"quick", "paper"}))
        ->capture_default_str();
    verify->add_option("--jobs", v_opts.jobs, "worker threads")->capture_default_str();
    verify->add_option("--store-dir", v_opts.store_dir,
                       "verdict store directory (default: ./verify-store)");
    verify->add_option("--seed", v_opts.seed, "seed for randomized batteries")
        ->capture_default_str();
    verify->add_option("--budget-ms", v_opts.sweep_budget_ms,
                       "budget for the order-7 sweep before the fallback");
    verify->add_option("--out", v_out, "also write the result document here");
    verify->callback([&]() {
        bihyp::SuiteResult res = bihyp::run_suite(v_suite, v_opts);
        for (const bihyp::CriterionResult& c : res.criteria)
            std::cerr << "[" << c.status << "] " << c.id << " " << c.name << " ("
                      << c.elapsed_ms << " ms): " << c.detail << "\n";
        std::string doc = bihyp::suite_to_json(res);
        std::cout << doc;
        if (!v_out.empty()) {
            std::ofstream out(v_out);
            if (!out) throw std::runtime_error("cannot write " + v_out);
            out << doc;
        }
        if (!res.all_passed) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
