#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "turan/digraph.hpp"
#include "turan/enumerate.hpp"
#include "turan/extremal.hpp"
#include "turan/io.hpp"
#include "turan/palette.hpp"
#include "turan/solver.hpp"
#include "turan/threegraph.hpp"
#include "turan/verify.hpp"

namespace {

using nlohmann::json;
using namespace turan;

constexpr const char* kCacheEnv = "TURAN_CACHE";

struct CacheHandle {
    ExCache cache;
    std::string path;
    bool enabled = false;

    void open(const std::string& mode_flag) {
        if (mode_flag == "off") return;
        const char* env = std::getenv(kCacheEnv);
        if (!mode_flag.empty() && mode_flag != "on")
            path = mode_flag;
        else if (env)
            path = env;
        if (path.empty()) return;
        enabled = true;
        cache.load_file(path);
    }
    void close() {
        if (enabled) cache.save_file(path);
    }
};

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
    return order;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

int run(int argc, char** argv) {
    CLI::App app{"combinatorial toolkit for digraph Turan numbers and palette colorability"};
    app.require_subcommand(1);

    std::string cache_flag;
    app.add_option("--cache", cache_flag,
                   "extremal cache: 'off', 'on' (use $TURAN_CACHE), or a file path");

    // ---- digraph ----
    auto* dg = app.add_subcommand("digraph", "digraph constructions and statistics");
    dg->require_subcommand(1);

    std::string dg_a, dg_b, dg_out;
    auto* dg_sum = dg->add_subcommand("sum", "sum of two digraphs");
    dg_sum->add_option("--a", dg_a)->required();
    dg_sum->add_option("--b", dg_b)->required();
    dg_sum->add_option("--out", dg_out);

    int tu_n = 0, tu_r = 0;
    std::string tu_out;
    auto* dg_turan = dg->add_subcommand("turan", "Turan numbers and the bidirected Turan digraph");
    dg_turan->add_option("--n", tu_n)->required();
    dg_turan->add_option("--r", tu_r)->required();
    dg_turan->add_option("--out", tu_out, "write the digraph here");

    std::string host_name, pattern_name;
    auto* dg_contains = dg->add_subcommand("contains", "injective arc-preserving embedding");
    dg_contains->add_option("--host", host_name)->required();
    dg_contains->add_option("--pattern", pattern_name)->required();

    std::string c3_name;
    auto* dg_c3 = dg->add_subcommand("c3", "directed triangle count of a tournament");
    dg_c3->add_option("--t", c3_name)->required();

    // ---- hypergraph ----
    auto* hg = app.add_subcommand("hypergraph", "3-graphs and linear k-graphs");
    hg->require_subcommand(1);

    std::string hg_name, hg_out;
    auto* hg_make = hg->add_subcommand("make", "named 3-graph (complete:m, k4minus, f5star, cycle:l)");
    hg_make->add_option("--name", hg_name)->required();
    hg_make->add_option("--out", hg_out);

    std::string mono_file;
    int mono_bound = kMonotoneDefaultMax;
    auto* hg_mono = hg->add_subcommand("monotone", "monotone-edge property of a linear k-graph");
    hg_mono->add_option("--k", mono_file, "k-graph file")->required();
    hg_mono->add_option("--bound", mono_bound, "permutation search bound");

    int sw_k = 3, sw_nmax = 8;
    std::uint64_t sw_budget = 1000000;
    auto* hg_search = hg->add_subcommand("search", "search for a monotone-edge linear k-graph");
    hg_search->add_option("--k", sw_k)->required();
    hg_search->add_option("--nmax", sw_nmax);
    hg_search->add_option("--budget", sw_budget);

    // ---- palette ----
    auto* pal = app.add_subcommand("palette", "palette calculus");
    pal->require_subcommand(1);

    std::string pal_p, pal_q, pal_out;
    auto* pal_density = pal->add_subcommand("density", "exact |A|/|C|^3");
    pal_density->add_option("--p", pal_p)->required();

    auto* pal_reverse = pal->add_subcommand("reverse", "triples written right to left");
    pal_reverse->add_option("--p", pal_p)->required();
    pal_reverse->add_option("--out", pal_out);

    auto* pal_union = pal->add_subcommand("union", "disjoint union");
    pal_union->add_option("--a", pal_p)->required();
    pal_union->add_option("--b", pal_q)->required();
    pal_union->add_option("--out", pal_out);

    auto* pal_sub = pal->add_subcommand("subpalette", "homomorphism search");
    pal_sub->add_option("--a", pal_p)->required();
    pal_sub->add_option("--b", pal_q)->required();

    std::string pal_side_arg = "left";
    auto* pal_aux = pal->add_subcommand("aux", "auxiliary digraph of a palette");
    pal_aux->add_option("--p", pal_p)->required();
    pal_aux->add_option("--side", pal_side_arg)->check(CLI::IsMember({"left", "right"}));
    pal_aux->add_option("--out", pal_out);

    std::string side_digraph;
    auto* pal_side = pal->add_subcommand("side", "left/right palette of a digraph");
    pal_side->add_option("--d", side_digraph)->required();
    pal_side->add_option("--side", pal_side_arg)->check(CLI::IsMember({"left", "right"}));
    pal_side->add_option("--out", pal_out);

    // ---- check ----
    auto* check = app.add_subcommand("check", "colorability checks");
    check->require_subcommand(1);

    std::string col_graph, col_palette, col_order, col_witness_out;
    auto* col = check->add_subcommand("colorable", "decide P-colorability");
    col->add_option("--graph", col_graph)->required();
    col->add_option("--palette", col_palette)->required();
    col->add_option("--order", col_order, "fixed vertex order, comma separated");
    col->add_option("--witness-out", col_witness_out);
    int col_threads = 1;
    col->add_option("--threads", col_threads);

    // ---- extremal ----
    auto* ext = app.add_subcommand("extremal", "exact digraph Turan numbers");
    ext->require_subcommand(1);

    std::string ex_pattern;
    int ex_n = 0, ex_threads = 1;
    auto* ext_ex = ext->add_subcommand("ex", "branch-and-bound ex(n, pattern)");
    ext_ex->add_option("--pattern", ex_pattern)->required();
    ext_ex->add_option("--n", ex_n)->required();
    ext_ex->add_option("--threads", ex_threads);

    std::string good_pattern;
    int good_nmax = 0;
    auto* ext_good = ext->add_subcommand("good", "r-goodness on a prefix of n");
    ext_good->add_option("--pattern", good_pattern)->required();
    ext_good->add_option("--nmax", good_nmax)->required();

    int g2_r = 3, g2_n = 4;
    auto* ext_g2 = ext->add_subcommand("gamma2", "max degree squared sum over T*_r-free digraphs");
    ext_g2->add_option("--r", g2_r)->required();
    ext_g2->add_option("--n", g2_n)->required();

    // ---- verify ----
    std::string suite_id, verify_json;
    bool verify_parallel = false;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", suite_id, "one of: " + [] {
                        std::string s;
                        for (const auto& id : suite_ids()) s += (s.empty() ? "" : ", ") + id;
                        return s;
                    }())
        ->required();
    ver->add_flag("--parallel", verify_parallel, "run independent claims concurrently");
    ver->add_option("--json", verify_json, "also write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    CacheHandle cache;
    cache.open(cache_flag);

    if (dg_sum->parsed()) {
        Digraph out = sum(resolve_digraph(dg_a), resolve_digraph(dg_b));
        emit(dg_out, to_text(out));
    } else if (dg_turan->parsed()) {
        TuranNumbers t = turan_numbers(tu_n, tu_r);
        std::cout << "ex(" << tu_n << ",K_" << tu_r << ") = " << t.ex_k << "\n"
                  << "f(" << tu_n << "," << tu_r << ") = " << t.f << "\n";
        if (!tu_out.empty()) write_file(tu_out, to_text(bidirected_turan(tu_n, tu_r)));
    } else if (dg_contains->parsed()) {
        auto eta = find_embedding(resolve_digraph(host_name), resolve_digraph(pattern_name));
        if (eta) {
            std::cout << "embedding:";
            for (std::size_t i = 0; i < eta->size(); ++i) std::cout << " " << i << "->" << (*eta)[i];
            std::cout << "\n";
        } else {
            std::cout << "none\n";
        }
    } else if (dg_c3->parsed()) {
        Tournament t(resolve_digraph(c3_name));
        std::cout << "c3 = " << count_c3(t) << "\n"
                  << "moon_moser_bound = " << moon_moser_bound(t.n()) << "\n";
    } else if (hg_make->parsed()) {
        emit(hg_out, to_text(resolve_threegraph(hg_name)));
    } else if (hg_mono->parsed()) {
        LinearKGraph h = kgraph_from_text(read_file(mono_file));
        MonotoneResult r = monotone_edge_property(h, mono_bound);
        if (r.holds) {
            std::cout << "holds (nodes " << r.nodes << ")\n";
        } else {
            std::cout << "fails; counterexample sigma:";
            for (int v : *r.counterexample) std::cout << " " << v;
            std::cout << " (nodes " << r.nodes << ")\n";
        }
    } else if (hg_search->parsed()) {
        auto found = search_monotone_witness(sw_k, sw_nmax, sw_budget);
        if (found)
            std::cout << to_text(*found);
        else
            std::cout << "none within budget (not a disproof)\n";
    } else if (pal_density->parsed()) {
        std::cout << density(resolve_palette(pal_p)).str() << "\n";
    } else if (pal_reverse->parsed()) {
        emit(pal_out, to_text(reverse(resolve_palette(pal_p))));
    } else if (pal_union->parsed()) {
        emit(pal_out, to_text(palette_union(resolve_palette(pal_p), resolve_palette(pal_q))));
    } else if (pal_sub->parsed()) {
        auto hom = subpalette(resolve_palette(pal_p), resolve_palette(pal_q));
        if (hom) {
            std::cout << "subpalette:";
            for (std::size_t c = 0; c < hom->size(); ++c)
                std::cout << " " << c << "->" << (*hom)[c];
            std::cout << "\n";
        } else {
            std::cout << "none\n";
        }
    } else if (pal_aux->parsed()) {
        Side side = pal_side_arg == "left" ? Side::left : Side::right;
        emit(pal_out, to_text(aux_digraph(resolve_palette(pal_p), side)));
    } else if (pal_side->parsed()) {
        Side side = pal_side_arg == "left" ? Side::left : Side::right;
        emit(pal_out, to_text(side_palette(resolve_digraph(side_digraph), side)));
    } else if (col->parsed()) {
        ThreeGraph f = resolve_threegraph(col_graph);
        Palette p = resolve_palette(col_palette);
        if (!col_order.empty()) {
            auto phi = colorable_fixed_order(f, p, parse_order(col_order));
            if (phi) {
                ColoringWitness w{parse_order(col_order), *phi};
                std::cout << "colorable under the given order\n";
                if (!col_witness_out.empty())
                    write_file(col_witness_out, witness_to_json(w).dump(2) + "\n");
            } else {
                std::cout << "not colorable under the given order\n";
            }
        } else {
            SolverOptions opts;
            opts.threads = col_threads;
            ColorSearch r = colorable_search(f, p, opts);
            if (r.witness) {
                std::cout << "colorable (nodes " << r.nodes << ")\n";
                if (!col_witness_out.empty())
                    write_file(col_witness_out, witness_to_json(*r.witness).dump(2) + "\n");
            } else {
                std::cout << "not colorable (nodes " << r.nodes << ", orders "
                          << r.orders_exhausted << ")\n";
            }
        }
    } else if (ext_ex->parsed()) {
        ExOptions opts;
        opts.threads = ex_threads;
        if (cache.enabled) opts.cache = &cache.cache;
        ExtremalResult r = ex_exact(resolve_digraph(ex_pattern), ex_n, opts);
        std::cout << "ex = " << r.value << " (nodes " << r.nodes << ", witness classes "
                  << r.witness_keys.size() << (r.from_cache ? ", cached" : "") << ")\n";
        for (const Digraph& w : r.witnesses) std::cout << to_text(w);
    } else if (ext_good->parsed()) {
        ExOptions opts;
        if (cache.enabled) opts.cache = &cache.cache;
        RGoodReport rep = is_r_good_upto(resolve_digraph(good_pattern), good_nmax, opts);
        for (const RGoodRow& row : rep.rows)
            std::cout << "n=" << row.n << " ex=" << row.ex_value << " f=" << row.f_value
                      << (row.ex_value == row.f_value ? "" : "  <-- differs") << "\n";
        std::cout << (rep.good ? "prefix-verified r-good" : "not r-good") << " (n up to "
                  << good_nmax << " only; says nothing about larger n)\n";
    } else if (ext_g2->parsed()) {
        MaxGamma2 r = max_gamma2(g2_r, g2_n);
        std::cout << "max gamma2 = " << r.value << " over " << r.digraphs_scanned
                  << " digraphs\n"
                  << to_text(r.witness);
    } else if (ver->parsed()) {
        VerifySuiteReport report = run_suite(suite_id, verify_parallel);
        std::cout << report_to_text(report);
        if (!verify_json.empty()) write_file(verify_json, report_to_json(report).dump(2) + "\n");
        cache.close();
        return report.pass ? 0 : 1;
    }

    cache.close();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
