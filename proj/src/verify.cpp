#include "turan/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

#include "turan/digraph.hpp"
#include "turan/enumerate.hpp"
#include "turan/extremal.hpp"
#include "turan/io.hpp"
#include "turan/palette.hpp"
#include "turan/solver.hpp"
#include "turan/threegraph.hpp"

namespace turan {

namespace {

using nlohmann::json;

struct Claim {
    std::string id;
    std::string anchor;
    std::function<void(ClaimResult&)> run;
};

// Every suite pins its own bounds; a changed default elsewhere must not
// change what a suite means.
const SolverOptions kSolver{.n_max = 10, .shadow_max = 45, .automorphism_prune = false,
                            .threads = 1};
const OracleBounds kOracle{.n_max = 6, .shadow_max = 12};
constexpr EnumLimits kEnum{.tournament_max = 7, .digraph_max = 5};

ExOptions pinned_ex_options() {
    ExOptions o;
    o.n_general_max = 5;
    o.n_small_pattern_max = 6;
    o.witness_cap = 100;
    o.threads = 1;
    return o;
}

json rational_json(const Rational& r) { return r.str(); }

// --- lemma-t6 -----------------------------------------------------------------

std::vector<Claim> suite_lemma_t6() {
    Claim c;
    c.id = "partition-all-6-vertex-tournaments";
    c.anchor = "every tournament on six vertices splits into two vertex-disjoint transitive triples";
    c.run = [](ClaimResult& out) {
        std::uint64_t checked = 0, failures = 0;
        json first_failure;
        enumerate(6, EnumKind::tournaments, false, [&](const Digraph& d) {
            ++checked;
            Tournament t(d);
            auto part = transitive_partition6(t);
            if (!part) {
                ++failures;
                if (first_failure.is_null()) first_failure = digraph_to_json(d);
            }
            return true;
        }, kEnum);
        out.pass = failures == 0 && checked == 32768;
        out.measured = {{"tournaments", checked}, {"failures", failures}};
        out.counterexample = first_failure;
    };
    return {c};
}

// --- moon-moser ----------------------------------------------------------------

std::vector<Claim> suite_moon_moser() {
    std::vector<Claim> claims;
    for (int n = 3; n <= 7; ++n) {
        // exhaustive maxima pinned where the bound is known to be attained
        long long expected_max = n == 6 ? 8 : n == 7 ? 14 : -1;
        Claim c;
        c.id = "bound-n" + std::to_string(n);
        c.anchor = "Moon-Moser: every n-vertex tournament has at most n(n^2-4)/24 (n even) "
                   "or n(n^2-1)/24 (n odd) directed triangles";
        c.run = [n, expected_max](ClaimResult& out) {
            long long bound = moon_moser_bound(n);
            long long max_seen = 0;
            std::uint64_t violations = 0, checked = 0;
            json first_violation;
            enumerate(n, EnumKind::tournaments, false, [&](const Digraph& d) {
                ++checked;
                long long c3 = count_c3(Tournament(d));
                max_seen = std::max(max_seen, c3);
                if (c3 > bound) {
                    ++violations;
                    if (first_violation.is_null()) first_violation = digraph_to_json(d);
                }
                return true;
            }, kEnum);
            out.pass = violations == 0;
            if (expected_max >= 0 && max_seen != expected_max) out.pass = false;
            out.measured = {{"n", n},
                            {"tournaments", checked},
                            {"bound", bound},
                            {"max_c3", max_seen}};
            if (expected_max >= 0) out.measured["expected_max"] = expected_max;
            out.counterexample = first_violation;
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- brown-harary ------------------------------------------------------------------

std::vector<Claim> suite_brown_harary() {
    std::vector<Claim> claims;
    struct Case {
        std::string id;
        std::string name;
        Digraph pattern;
        int n;
        long long expected;
    };
    std::vector<Case> cases;
    for (int n = 3; n <= 5; ++n) {
        cases.push_back({"tstar3-n" + std::to_string(n), "tstar:3", transitive_tournament(3), n,
                         turan_numbers(n, 3).f});
        cases.push_back({"c3-n" + std::to_string(n), "c3", directed_triangle(), n,
                         turan_numbers(n, 3).f});
    }
    for (int n = 3; n <= 4; ++n) {
        long long expected = static_cast<long long>(n) * (n - 1) / 2 + turan_numbers(n, 3).ex_k;
        cases.push_back({"bik3-n" + std::to_string(n), "bik:3", complete_bidirected(3), n,
                         expected});
    }
    for (auto& cs : cases) {
        Claim c;
        c.id = cs.id;
        c.anchor = cs.name.rfind("bik", 0) == 0
                       ? "Brown-Harary: ex(n, <->K_r) = C(n,2) + ex(n, K_r)"
                       : "Brown-Harary: ex(n, T_r) = 2 ex(n, K_r) for every r-vertex tournament";
        c.run = [cs](ClaimResult& out) {
            ExtremalResult r = ex_exact(cs.pattern, cs.n, pinned_ex_options());
            out.pass = r.value == cs.expected && r.exhaustive;
            out.measured = {{"pattern", cs.name},
                            {"n", cs.n},
                            {"value", r.value},
                            {"expected", cs.expected},
                            {"nodes", r.nodes},
                            {"witness_classes", r.witness_keys.size()}};
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- degree-squared ------------------------------------------------------------------

std::vector<Claim> suite_degree_squared() {
    std::vector<Claim> claims;
    for (int n = 2; n <= 5; ++n) {
        Claim c;
        c.id = "gamma2-r3-n" + std::to_string(n);
        c.anchor = "a transitive-triangle-free digraph on n vertices has degree squared sum "
                   "at most n^3/4";
        c.run = [n](ClaimResult& out) {
            MaxGamma2 r = max_gamma2(3, n, kEnum);
            bool bound_ok = 4 * r.value <= static_cast<long long>(n) * n * n;
            out.pass = bound_ok;
            if (n == 4 && r.value != 16) out.pass = false;
            out.measured = {{"n", n},
                            {"max_gamma2", r.value},
                            {"bound_times_4", static_cast<long long>(n) * n * n},
                            {"digraphs", r.digraphs_scanned}};
            if (n == 4) out.measured["expected"] = 16;
            if (!bound_ok) out.counterexample = digraph_to_json(r.witness);
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- colorability ---------------------------------------------------------------------

ThreeGraph f4_gadget() {
    LinearKGraph h(4, 4);
    h.add_edge({0, 1, 2, 3});
    return construct_from_linear(h, ExpansionScheme::F4);
}

ThreeGraph f7_gadget() {
    LinearKGraph h(7, 7);
    h.add_edge({0, 1, 2, 3, 4, 5, 6});
    return construct_from_linear(h, ExpansionScheme::F7);
}

VertexOrder natural_order(int n) {
    VertexOrder o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

VertexOrder reversed_order(int n) {
    VertexOrder o = natural_order(n);
    std::reverse(o.begin(), o.end());
    return o;
}

std::vector<Claim> suite_colorability() {
    std::vector<Claim> claims;

    auto expect_colorable = [](std::string id, std::string anchor, ThreeGraph f, Palette p,
                               bool expect) {
        Claim c;
        c.id = std::move(id);
        c.anchor = std::move(anchor);
        c.run = [f = std::move(f), p = std::move(p), expect](ClaimResult& out) {
            ColorSearch r = colorable_search(f, p, kSolver);
            bool got = r.witness.has_value();
            out.pass = got == expect;
            out.measured = {{"colorable", got},
                            {"expected", expect},
                            {"nodes", r.nodes},
                            {"orders_exhausted", r.orders_exhausted}};
            if (r.witness) out.measured["witness"] = witness_to_json(*r.witness);
        };
        return c;
    };

    claims.push_back(expect_colorable(
        "k4-not-qr2", "the complete 3-graph on r+2 vertices is not Q_r-colorable (r=2)",
        complete_threegraph(4), palette_qr(2), false));
    claims.push_back(expect_colorable(
        "k5-not-qr3", "the complete 3-graph on r+2 vertices is not Q_r-colorable (r=3)",
        complete_threegraph(5), palette_qr(3), false));

    Palette ql_t3 = side_palette(transitive_tournament(3), Side::left);
    claims.push_back(expect_colorable("k4minus-ql-t3",
                                      "K4-minus is left-palette-of-T3-colorable", k4_minus(),
                                      ql_t3, true));
    claims.push_back(expect_colorable("k4minus-not-q2r2", "K4-minus is not Q^2_2-colorable",
                                      k4_minus(), palette_q2r(2), false));
    claims.push_back(expect_colorable("f5star-ql-t3", "F5-star is left-palette-of-T3-colorable",
                                      f5_star(), ql_t3, true));
    claims.push_back(expect_colorable("f5star-not-q2r2", "F5-star is not Q^2_2-colorable",
                                      f5_star(), palette_q2r(2), false));

    claims.push_back(expect_colorable("c5-not-qplus2",
                                      "the tight 5-cycle is not Q^{+2}_5-colorable",
                                      tight_cycle(5), palette_qplus2_5(), false));

    {
        Claim c;
        c.id = "f4-gadget-qplus2-phi";
        c.anchor = "the two-triple gadget on one 4-edge is Q^{+2}_5-colorable under the natural "
                   "order with pair colors (4,1,5) and (1,2,3), written 0-based";
        c.run = [](ClaimResult& out) {
            ThreeGraph f = f4_gadget();
            auto phi = colorable_fixed_order(f, palette_qplus2_5(), natural_order(4));
            ShadowColoring expected{
                {{0, 1}, 3}, {{0, 2}, 0}, {{1, 2}, 4}, {{0, 3}, 1}, {{2, 3}, 2}};
            out.pass = phi.has_value() && *phi == expected;
            out.measured = {{"found", phi.has_value()}};
            if (phi) {
                ColoringWitness w{natural_order(4), *phi};
                out.measured["phi"] = witness_to_json(w)["phi"];
                out.measured["matches_expected"] = (*phi == expected);
            }
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "f4-gadget-not-qprime";
        c.anchor = "the two-triple gadget is not Q'^-_3-colorable under the natural or reversed "
                   "order";
        c.run = [](ClaimResult& out) {
            ThreeGraph f = f4_gadget();
            bool natural = colorable_fixed_order(f, palette_qprime_minus3(), natural_order(4))
                               .has_value();
            bool reversed = colorable_fixed_order(f, palette_qprime_minus3(), reversed_order(4))
                                .has_value();
            out.pass = !natural && !reversed;
            out.measured = {{"natural", natural}, {"reversed", reversed}};
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "f7-gadget-union";
        c.anchor = "the six-triple gadget on one 7-edge is Q_{T3 u T3}-colorable under the "
                   "natural order";
        c.run = [](ClaimResult& out) {
            ThreeGraph f = f7_gadget();
            Palette qu = union_palette_of(transitive_tournament(3), transitive_tournament(3));
            auto phi = colorable_fixed_order(f, qu, natural_order(7));
            out.pass = phi.has_value();
            out.measured = {{"found", phi.has_value()}};
            if (phi) {
                ColoringWitness w{natural_order(7), *phi};
                out.measured["phi"] = witness_to_json(w)["phi"];
            }
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "f7-gadget-not-qr2";
        c.anchor = "the six-triple gadget is not Q_2-colorable under the natural or reversed order";
        c.run = [](ClaimResult& out) {
            ThreeGraph f = f7_gadget();
            bool natural = colorable_fixed_order(f, palette_qr(2), natural_order(7)).has_value();
            bool reversed = colorable_fixed_order(f, palette_qr(2), reversed_order(7)).has_value();
            out.pass = !natural && !reversed;
            out.measured = {{"natural", natural}, {"reversed", reversed}};
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- palettes ------------------------------------------------------------------------

Palette random_palette(std::mt19937_64& rng, int max_colors = 5, int max_triples = 8) {
    std::uniform_int_distribution<int> mdist(1, max_colors);
    int m = mdist(rng);
    std::uniform_int_distribution<int> cdist(0, m - 1);
    std::uniform_int_distribution<int> tdist(0, max_triples);
    int count = tdist(rng);
    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < count; ++i) triples.push_back({cdist(rng), cdist(rng), cdist(rng)});
    return Palette::from_triples(m, std::move(triples));
}

std::vector<Claim> suite_palettes() {
    std::vector<Claim> claims;
    {
        Claim c;
        c.id = "density-closed-forms";
        c.anchor = "d(Q_r) = (r-1)/r, d(Q^2_m) = ((m-1)/m)^2, d(Q^-_3) = 1/27, d(Q'^-_3) = 4/27";
        c.run = [](ClaimResult& out) {
            bool ok = true;
            json rows = json::array();
            for (int r = 2; r <= 8; ++r) {
                Rational d = density(palette_qr(r));
                bool good = d == Rational(r - 1, r);
                ok = ok && good;
                rows.push_back({{"palette", "Qr(" + std::to_string(r) + ")"},
                                {"density", rational_json(d)},
                                {"ok", good}});
            }
            for (int m = 2; m <= 8; ++m) {
                Rational d = density(palette_q2r(m));
                bool good = d == Rational((m - 1) * (m - 1), static_cast<long long>(m) * m);
                ok = ok && good;
                rows.push_back({{"palette", "Q2r(" + std::to_string(m) + ")"},
                                {"density", rational_json(d)},
                                {"ok", good}});
            }
            bool qm = density(palette_qminus3()) == Rational(1, 27);
            bool qpm = density(palette_qprime_minus3()) == Rational(4, 27);
            ok = ok && qm && qpm;
            rows.push_back({{"palette", "Qminus3"}, {"ok", qm}});
            rows.push_back({{"palette", "QprimeMinus3"}, {"ok", qpm}});
            out.pass = ok;
            out.measured = {{"rows", rows}};
        };
        claims.push_back(std::move(c));
    }
    for (int r : {3, 4}) {
        Claim c;
        c.id = "existence-r" + std::to_string(r);
        c.anchor = "Q_{T_r u T_r} is a subpalette of neither Q_{r-1} nor its reverse, so a "
                   "3-graph separating them exists";
        c.run = [r](ClaimResult& out) {
            Palette qu = union_palette_of(transitive_tournament(r), transitive_tournament(r));
            Palette target = palette_qr(r - 1);
            bool fwd = subpalette(qu, target).has_value();
            bool rev_ = subpalette(qu, reverse(target)).has_value();
            out.pass = existence_condition(qu, target) && !fwd && !rev_;
            out.measured = {{"r", r}, {"sub_forward", fwd}, {"sub_reverse", rev_}};
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "reverse-involution";
        c.anchor = "rev(rev(P)) = P";
        c.run = [](ClaimResult& out) {
            std::mt19937_64 rng(20240811);
            int cases = 200, failures = 0;
            for (int i = 0; i < cases; ++i) {
                Palette p = random_palette(rng);
                if (!(reverse(reverse(p)).triples == p.triples)) ++failures;
            }
            out.pass = failures == 0;
            out.measured = {{"cases", cases}, {"failures", failures}};
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "subpalette-reflexive";
        c.anchor = "P is a subpalette of itself";
        c.run = [](ClaimResult& out) {
            std::mt19937_64 rng(424243);
            int cases = 200, failures = 0;
            for (int i = 0; i < cases; ++i) {
                Palette p = random_palette(rng);
                auto hom = subpalette(p, p);
                if (!hom || !is_valid_hom(p, p, *hom)) ++failures;
            }
            out.pass = failures == 0;
            out.measured = {{"cases", cases}, {"failures", failures}};
        };
        claims.push_back(std::move(c));
    }
    {
        Claim c;
        c.id = "subpalette-compose";
        c.anchor = "witnesses for P1 <= P2 and P2 <= P3 compose to a witness for P1 <= P3";
        c.run = [](ClaimResult& out) {
            std::mt19937_64 rng(77210);
            int cases = 200, failures = 0, composed = 0;
            for (int i = 0; i < cases; ++i) {
                Palette p1 = random_palette(rng);
                Palette p2 = palette_union(p1, random_palette(rng));
                Palette p3 = palette_union(p2, random_palette(rng));
                auto h12 = subpalette(p1, p2);
                auto h23 = subpalette(p2, p3);
                if (!h12 || !h23) {
                    ++failures;  // both exist by construction
                    continue;
                }
                PaletteHom h13(p1.m);
                for (int col = 0; col < p1.m; ++col) h13[col] = (*h23)[(*h12)[col]];
                if (!is_valid_hom(p1, p3, h13)) ++failures;
                ++composed;
            }
            out.pass = failures == 0;
            out.measured = {{"cases", cases}, {"composed", composed}, {"failures", failures}};
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- d10-remark -----------------------------------------------------------------------

std::vector<Claim> suite_d10_remark() {
    std::vector<Claim> claims;
    {
        Claim c;
        c.id = "d10-free-n15";
        c.anchor = "the sum of five transitive tournaments on 15 vertices contains no "
                   "C3 (+) C3 (+) T'4";
        c.run = [](ClaimResult& out) {
            D10Options opts;
            opts.freeness_max = 20;
            D10Report r = d10_remark_check(15, opts);
            out.pass = r.freeness_checked && r.d10_free;
            out.measured = {{"n", r.n}, {"arcs", r.arcs}, {"d10_free", r.d10_free}};
        };
        claims.push_back(std::move(c));
    }
    for (int n : {50, 100, 1000}) {
        Claim c;
        c.id = "excess-n" + std::to_string(n);
        c.anchor = "arcs(D_n) strictly exceeds 2 ex(n, K_10)";
        c.run = [n](ClaimResult& out) {
            D10Report r = d10_remark_check(n);
            out.pass = r.headline;
            out.measured = {{"n", r.n},
                            {"arcs", r.arcs},
                            {"two_ex_n_k10", r.f_n_10},
                            {"bound_floor", rational_json(r.bound_floor)},
                            {"quadratic", rational_json(r.quadratic)},
                            {"eight_ninths", rational_json(r.eight_ninths)},
                            {"link_construction", r.link_construction},
                            {"link_quadratic", r.link_quadratic},
                            {"link_middle", r.link_middle},
                            {"link_middle_first_n", r.link_middle_first_n},
                            {"link_turan", r.link_turan}};
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

// --- prop-relation -----------------------------------------------------------------------

std::vector<Claim> suite_prop_relation() {
    Claim c;
    c.id = "identity-grid";
    c.anchor = "f(n1+n2,r) - f(n1,r) - f(n2,r) - 2 (r-2)/(r-1) n1 n2 equals 2 a1 a2/(r-1) when "
               "a1+a2 < r-1 and 2 (r-1-a1)(r-1-a2)/(r-1) otherwise";
    c.run = [](ClaimResult& out) {
        std::uint64_t checked = 0, failures = 0;
        json first_failure;
        for (int r = 2; r <= 12; ++r)
            for (int n1 = 0; n1 <= 40; ++n1)
                for (int n2 = 0; n2 <= 40; ++n2) {
                    RelationGap g = relation_gap(n1, n2, r);
                    ++checked;
                    if (g.lhs != g.rhs) {
                        ++failures;
                        if (first_failure.is_null())
                            first_failure = {{"n1", n1},
                                             {"n2", n2},
                                             {"r", r},
                                             {"lhs", g.lhs.str()},
                                             {"rhs", g.rhs.str()}};
                    }
                }
        out.pass = failures == 0;
        out.measured = {{"checked", checked}, {"failures", failures}};
        out.counterexample = first_failure;
    };
    return {c};
}

// --- oracle-equivalence ---------------------------------------------------------------------

std::vector<Claim> suite_oracle_equivalence() {
    Claim c;
    c.id = "solver-vs-oracle";
    c.anchor = "the order/coloring backtracking solver agrees with plain nested enumeration on "
               "every 3-graph with at most 4 vertices";
    c.run = [](ClaimResult& out) {
        std::vector<std::pair<std::string, Palette>> palettes{
            {"Qr(2)", palette_qr(2)},
            {"Qminus3", palette_qminus3()},
            {"Qplus2_5", palette_qplus2_5()},
            {"QprimeMinus3", palette_qprime_minus3()}};
        std::uint64_t checked = 0, disagreements = 0;
        json first_disagreement;
        for (const ThreeGraph& f : all_threegraphs_upto_iso(4)) {
            for (const auto& [name, p] : palettes) {
                bool solver = colorable(f, p, kSolver).has_value();
                bool oracle = brute_oracle(f, p, kOracle);
                ++checked;
                if (solver != oracle) {
                    ++disagreements;
                    if (first_disagreement.is_null())
                        first_disagreement = {{"palette", name},
                                              {"graph", threegraph_to_json(f)},
                                              {"solver", solver},
                                              {"oracle", oracle}};
                }
            }
        }
        out.pass = disagreements == 0;
        out.measured = {{"checked", checked}, {"disagreements", disagreements}};
        out.counterexample = first_disagreement;
    };
    return {c};
}

// --- turan-lower-bounds -------------------------------------------------------------------------

std::vector<Claim> suite_turan_lower_bounds() {
    std::vector<Claim> claims;
    for (int n = 11; n <= 15; ++n) {
        Claim c;
        c.id = "host-free-n" + std::to_string(n);
        c.anchor = "the bidirected Turan digraph on n vertices is T_4 (+) T_4 (+) T_3-free and "
                   "has f(n,11) arcs";
        c.run = [n](ClaimResult& out) {
            LowerBoundOptions opts;
            opts.slack = 4;
            bool ok = verify_lower_bound(4, 4, 3, n, opts);
            out.pass = ok;
            out.measured = {{"n", n},
                            {"r", 11},
                            {"host_arcs", bidirected_turan(n, 11).arc_count()},
                            {"f", turan_numbers(n, 11).f},
                            {"ok", ok}};
        };
        claims.push_back(std::move(c));
    }
    return claims;
}

std::vector<Claim> claims_for(const std::string& id) {
    if (id == "lemma-t6") return suite_lemma_t6();
    if (id == "moon-moser") return suite_moon_moser();
    if (id == "brown-harary") return suite_brown_harary();
    if (id == "degree-squared") return suite_degree_squared();
    if (id == "colorability") return suite_colorability();
    if (id == "palettes") return suite_palettes();
    if (id == "d10-remark") return suite_d10_remark();
    if (id == "prop-relation") return suite_prop_relation();
    if (id == "oracle-equivalence") return suite_oracle_equivalence();
    if (id == "turan-lower-bounds") return suite_turan_lower_bounds();
    throw std::invalid_argument("unknown suite '" + id + "'");
}

ClaimResult run_claim(const Claim& claim) {
    ClaimResult res;
    res.id = claim.id;
    res.anchor = claim.anchor;
    auto start = std::chrono::steady_clock::now();
    try {
        claim.run(res);
    } catch (const std::exception& e) {
        res.pass = false;
        res.measured = {{"error", e.what()}};
    }
    res.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return res;
}

}  // namespace

std::vector<std::string> suite_ids() {
    return {"lemma-t6",      "moon-moser", "brown-harary",       "degree-squared",
            "colorability",  "palettes",   "d10-remark",         "prop-relation",
            "oracle-equivalence", "turan-lower-bounds"};
}

VerifySuiteReport run_suite(const std::string& id, bool parallel) {
    std::vector<Claim> claims = claims_for(id);
    VerifySuiteReport report;
    report.suite = id;
    auto start = std::chrono::steady_clock::now();

    report.claims.resize(claims.size());
    if (parallel) {
        std::vector<std::future<ClaimResult>> futures;
        futures.reserve(claims.size());
        for (const Claim& c : claims)
            futures.push_back(std::async(std::launch::async, [&c] { return run_claim(c); }));
        for (std::size_t i = 0; i < futures.size(); ++i) report.claims[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < claims.size(); ++i) report.claims[i] = run_claim(claims[i]);
    }

    report.pass = std::all_of(report.claims.begin(), report.claims.end(),
                              [](const ClaimResult& c) { return c.pass; });
    report.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

nlohmann::json report_to_json(const VerifySuiteReport& report) {
    json claims = json::array();
    for (const ClaimResult& c : report.claims) {
        json jc = {{"id", c.id},
                   {"anchor", c.anchor},
                   {"status", c.pass ? "pass" : "fail"},
                   {"measured", c.measured},
                   {"runtime_ms", c.runtime_ms}};
        if (!c.counterexample.is_null()) jc["counterexample"] = c.counterexample;
        claims.push_back(std::move(jc));
    }
    return {{"schema", report.schema},
            {"suite", report.suite},
            {"pass", report.pass},
            {"claims", claims},
            {"runtime_ms", report.runtime_ms}};
}

std::string report_to_text(const VerifySuiteReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << "\n";
    for (const ClaimResult& c : report.claims) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.id << " (";
        out << static_cast<long long>(c.runtime_ms) << " ms)\n";
        if (!c.pass) {
            out << "         " << c.anchor << "\n";
            out << "         measured: " << c.measured.dump() << "\n";
            if (!c.counterexample.is_null())
                out << "         counterexample: " << c.counterexample.dump() << "\n";
        }
    }
    out << (report.pass ? "PASS" : "FAIL") << " (" << report.claims.size() << " claims, "
        << static_cast<long long>(report.runtime_ms) << " ms)\n";
    return out.str();
}

}  // namespace turan
