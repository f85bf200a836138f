#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "turan/palette.hpp"
#include "turan/solver.hpp"
#include "turan/threegraph.hpp"

using namespace turan;

namespace {

ThreeGraph f4_gadget() {
    LinearKGraph h(4, 4);
    h.add_edge({0, 1, 2, 3});
    return construct_from_linear(h, ExpansionScheme::F4);
}

VertexOrder natural(int n) {
    VertexOrder o(n);
    std::iota(o.begin(), o.end(), 0);
    return o;
}

VertexOrder reversed(int n) {
    VertexOrder o = natural(n);
    std::reverse(o.begin(), o.end());
    return o;
}

}  // namespace

TEST_CASE("single edge vs tiny palettes") {
    ThreeGraph single(3);
    single.add_edge(0, 1, 2);
    CHECK(colorable(single, palette_qminus3()).has_value());
    CHECK(brute_oracle(single, palette_qminus3()));

    Palette empty_admissible = Palette::from_triples(2, {});
    CHECK_FALSE(colorable(single, empty_admissible).has_value());
    CHECK_FALSE(brute_oracle(single, empty_admissible));

    // no edges: vacuously colorable
    CHECK(colorable(ThreeGraph(3), empty_admissible).has_value());
    CHECK(brute_oracle(ThreeGraph(3), empty_admissible));
}

TEST_CASE("complete 3-graph pigeonhole") {
    CHECK_FALSE(colorable(complete_threegraph(4), palette_qr(2)).has_value());
    CHECK(colorable(complete_threegraph(4), palette_qr(3)).has_value());
}

TEST_CASE("k4minus vs the left palette of T3") {
    Palette ql = side_palette(transitive_tournament(3), Side::left);
    auto witness = colorable(k4_minus(), ql);
    REQUIRE(witness.has_value());
    CHECK(validate_witness(k4_minus(), ql, *witness));
}

TEST_CASE("tight 5-cycle is not Qplus2-colorable") {
    ColorSearch r = colorable_search(tight_cycle(5), palette_qplus2_5());
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.orders_exhausted == 120);
    CHECK(r.nodes > 0);
}

TEST_CASE("fixed order: the F4 gadget against Qplus2_5") {
    auto phi = colorable_fixed_order(f4_gadget(), palette_qplus2_5(), natural(4));
    REQUIRE(phi.has_value());
    ShadowColoring expected{{{0, 1}, 3}, {{0, 2}, 0}, {{1, 2}, 4}, {{0, 3}, 1}, {{2, 3}, 2}};
    CHECK(*phi == expected);
}

TEST_CASE("fixed order: the F4 gadget against QprimeMinus3 fails both directions") {
    CHECK_FALSE(colorable_fixed_order(f4_gadget(), palette_qprime_minus3(), natural(4)).has_value());
    CHECK_FALSE(colorable_fixed_order(f4_gadget(), palette_qprime_minus3(), reversed(4)).has_value());
}

TEST_CASE("fixed order: full palette never binds") {
    std::vector<std::array<int, 3>> all;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z) all.push_back({x, y, z});
    Palette full = Palette::from_triples(2, all);
    VertexOrder order{2, 0, 3, 1};
    CHECK(colorable_fixed_order(complete_threegraph(4), full, order).has_value());
    CHECK(colorable_fixed_order(complete_threegraph(4), full, natural(4)).has_value());
}

TEST_CASE("fixed order validates the permutation") {
    ThreeGraph single(3);
    single.add_edge(0, 1, 2);
    CHECK_THROWS_AS(colorable_fixed_order(single, palette_qr(2), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(colorable_fixed_order(single, palette_qr(2), {0, 1, 1}),
                    std::invalid_argument);
}

TEST_CASE("witnesses are sound") {
    std::vector<std::pair<ThreeGraph, Palette>> cases{
        {k4_minus(), palette_qr(3)},
        {f5_star(), side_palette(transitive_tournament(3), Side::left)},
        {tight_cycle(5), palette_qr(2)},
    };
    for (const auto& [f, p] : cases) {
        auto w = colorable(f, p);
        if (w) CHECK(validate_witness(f, p, *w));
    }
}

TEST_CASE("solver bounds enforced") {
    SolverOptions opts;
    opts.n_max = 4;
    CHECK_THROWS_AS(colorable(tight_cycle(5), palette_qr(2), opts), std::invalid_argument);
    // n = 6 passes the oracle's vertex bound but its 15-pair shadow does not
    CHECK_THROWS_AS(brute_oracle(complete_threegraph(6), palette_qr(2)), std::invalid_argument);
    CHECK_THROWS_AS(brute_oracle(complete_threegraph(7), palette_qr(2)), std::invalid_argument);
}

TEST_CASE("oracle equals solver on all small graphs vs Qr(2)") {
    for (const ThreeGraph& f : all_threegraphs_upto_iso(4)) {
        bool s = colorable(f, palette_qr(2)).has_value();
        bool o = brute_oracle(f, palette_qr(2));
        CHECK(s == o);
    }
}

TEST_CASE("reverse symmetry") {
    CHECK(reverse_symmetry_check(k4_minus(), palette_qr(2)));
    CHECK(reverse_symmetry_check(tight_cycle(5), palette_qplus2_5()));
    CHECK(reverse_symmetry_check(f5_star(), palette_q2r(2)));
}

TEST_CASE("a witness maps to a reverse witness by reversing the order") {
    Palette ql = side_palette(transitive_tournament(3), Side::left);
    auto w = colorable(k4_minus(), ql);
    REQUIRE(w.has_value());
    ColoringWitness rev_w;
    rev_w.order = w->order;
    std::reverse(rev_w.order.begin(), rev_w.order.end());
    rev_w.phi = w->phi;
    CHECK(validate_witness(k4_minus(), reverse(ql), rev_w));
}

TEST_CASE("subpalette homomorphisms transport witnesses") {
    ThreeGraph single(3);
    single.add_edge(0, 1, 2);
    Palette qm = palette_qminus3();
    for (const Palette& target : {palette_qplus1_5(), palette_qr(2), palette_qr(3)}) {
        auto hom = subpalette(qm, target);
        REQUIRE(hom.has_value());
        auto w = colorable(single, qm);
        REQUIRE(w.has_value());
        ColoringWitness moved = apply_hom(*w, *hom);
        CHECK(validate_witness(single, target, moved));
    }
}

TEST_CASE("automorphism pruning agrees with the full enumeration") {
    std::vector<std::pair<ThreeGraph, Palette>> cases{
        {complete_threegraph(4), palette_qr(2)},
        {k4_minus(), palette_q2r(2)},
        {k4_minus(), side_palette(transitive_tournament(3), Side::left)},
        {tight_cycle(5), palette_qplus2_5()},
        {f5_star(), palette_qr(2)},
    };
    for (const auto& [f, p] : cases) {
        SolverOptions pruned;
        pruned.automorphism_prune = true;
        ColorSearch a = colorable_search(f, p);
        ColorSearch b = colorable_search(f, p, pruned);
        CHECK(a.witness.has_value() == b.witness.has_value());
        CHECK(b.orders_exhausted <= a.orders_exhausted);
    }
}

TEST_CASE("parallel order search agrees with sequential") {
    std::vector<std::pair<ThreeGraph, Palette>> cases{
        {complete_threegraph(4), palette_qr(2)},
        {k4_minus(), side_palette(transitive_tournament(3), Side::left)},
        {tight_cycle(5), palette_qplus2_5()},
    };
    for (const auto& [f, p] : cases) {
        SolverOptions par;
        par.threads = 4;
        ColorSearch a = colorable_search(f, p);
        ColorSearch b = colorable_search(f, p, par);
        CHECK(a.witness.has_value() == b.witness.has_value());
        if (b.witness) CHECK(validate_witness(f, p, *b.witness));
    }
}

TEST_CASE("absence reports count all orders") {
    ColorSearch r = colorable_search(complete_threegraph(4), palette_qr(2));
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.orders_exhausted == 24);
}
