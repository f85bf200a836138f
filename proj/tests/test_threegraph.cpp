#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "turan/threegraph.hpp"

using namespace turan;

namespace {

// naive oracle: walk all n! permutations outright
bool monotone_property_naive(const LinearKGraph& h) {
    int n = h.n();
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        bool any = false;
        for (const auto& e : h.edges()) {
            bool inc = true, dec = true;
            for (std::size_t i = 1; i < e.size(); ++i) {
                inc = inc && sigma[e[i - 1]] < sigma[e[i]];
                dec = dec && sigma[e[i - 1]] > sigma[e[i]];
            }
            if (inc || dec) {
                any = true;
                break;
            }
        }
        if (!any) return false;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return true;
}

LinearKGraph random_linear(std::mt19937& rng, int k, int n) {
    LinearKGraph h(k, n);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    for (int tries = 0; tries < 30; ++tries) {
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<int> edge(verts.begin(), verts.begin() + k);
        try {
            h.add_edge(edge);
        } catch (const std::invalid_argument&) {
        }
    }
    return h;
}

}  // namespace

TEST_CASE("threegraph invariants") {
    ThreeGraph f(4);
    f.add_edge(2, 0, 1);
    CHECK(f.has_edge(0, 1, 2));
    CHECK(f.edge_count() == 1);
    f.add_edge(1, 2, 0);  // duplicate
    CHECK(f.edge_count() == 1);
    CHECK_THROWS_AS(f.add_edge(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(f.add_edge(0, 1, 4), std::invalid_argument);
}

TEST_CASE("named 3-graphs") {
    CHECK(complete_threegraph(4).edge_count() == 4);
    CHECK(complete_threegraph(5).edge_count() == 10);

    ThreeGraph km = k4_minus();
    CHECK(km.edge_count() == 3);
    CHECK(km.has_edge(0, 1, 2));
    CHECK(km.has_edge(0, 1, 3));
    CHECK(km.has_edge(0, 2, 3));
    CHECK_FALSE(km.has_edge(1, 2, 3));

    ThreeGraph f5 = f5_star();
    CHECK(f5.n() == 5);
    CHECK(f5.edge_count() == 5);
    CHECK(f5.has_edge(0, 1, 4));
    CHECK(f5.has_edge(2, 3, 4));

    ThreeGraph c5 = tight_cycle(5);
    CHECK(c5.edge_count() == 5);
    std::vector<Triple> expected{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {0, 3, 4}, {0, 1, 4}};
    for (const Triple& e : expected) CHECK(c5.has_edge(e[0], e[1], e[2]));

    CHECK(tight_cycle(4) == complete_threegraph(4));
    CHECK_THROWS_AS(tight_cycle(3), std::invalid_argument);

    CHECK(named_threegraph("k4minus").has_value());
    CHECK(named_threegraph("cycle:5")->edge_count() == 5);
    CHECK_FALSE(named_threegraph("nonsense").has_value());
}

TEST_CASE("shadow") {
    ThreeGraph single(3);
    single.add_edge(0, 1, 2);
    CHECK(shadow(single).pairs.size() == 3);

    Shadow km = shadow(k4_minus());
    CHECK(km.pairs.size() == 6);  // all pairs of [0,4)
    CHECK(km.covers(1, 3));
    CHECK(km.covers(3, 1));

    CHECK(shadow(ThreeGraph(5)).pairs.empty());
}

TEST_CASE("linearity validation names both edges") {
    LinearKGraph h(3, 6);
    h.add_edge({0, 1, 2});
    try {
        h.add_edge({0, 1, 3});
        FAIL("expected linearity rejection");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("{0,1,2}") != std::string::npos);
        CHECK(msg.find("{0,1,3}") != std::string::npos);
    }
    h.add_edge({0, 3, 4});  // shares only vertex 0
    CHECK(h.edges().size() == 2);
    CHECK_THROWS_AS(LinearKGraph(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(h.add_edge({0, 1}), std::invalid_argument);
}

TEST_CASE("expansion schemes on a single edge") {
    LinearKGraph h4(4, 4);
    h4.add_edge({0, 1, 2, 3});
    ThreeGraph f4 = construct_from_linear(h4, ExpansionScheme::F4);
    CHECK(f4.edge_count() == 2);
    CHECK(f4.has_edge(0, 1, 2));
    CHECK(f4.has_edge(0, 2, 3));

    ThreeGraph fh = construct_from_linear(h4, ExpansionScheme::FH);  // r = 3
    CHECK(fh.edge_count() == 3);
    CHECK(fh.has_edge(0, 1, 2));
    CHECK(fh.has_edge(0, 1, 3));
    CHECK(fh.has_edge(0, 2, 3));

    LinearKGraph h7(7, 7);
    h7.add_edge({0, 1, 2, 3, 4, 5, 6});
    ThreeGraph f7 = construct_from_linear(h7, ExpansionScheme::F7);
    CHECK(f7.edge_count() == 6);
    for (Triple e : std::vector<Triple>{{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}})
        CHECK(f7.has_edge(e[0], e[1], e[2]));

    CHECK_THROWS_AS(construct_from_linear(h7, ExpansionScheme::F4), std::invalid_argument);
    LinearKGraph h3(3, 3);
    CHECK_THROWS_AS(construct_from_linear(h3, ExpansionScheme::FH), std::invalid_argument);
}

TEST_CASE("expansion edge counts scale with the source") {
    std::mt19937 rng(5);
    for (int it = 0; it < 10; ++it) {
        LinearKGraph h = random_linear(rng, 4, 13);
        CHECK(construct_from_linear(h, ExpansionScheme::F4).edge_count() == 2 * h.edges().size());
        CHECK(construct_from_linear(h, ExpansionScheme::FH).edge_count() == 3 * h.edges().size());
    }
    for (int it = 0; it < 5; ++it) {
        LinearKGraph h = random_linear(rng, 7, 21);
        CHECK(construct_from_linear(h, ExpansionScheme::F7).edge_count() == 6 * h.edges().size());
    }
}

TEST_CASE("monotone property: single edge fails with the first counterexample") {
    LinearKGraph h(3, 3);
    h.add_edge({0, 1, 2});
    MonotoneResult r = monotone_edge_property(h);
    CHECK_FALSE(r.holds);
    REQUIRE(r.counterexample.has_value());
    CHECK(*r.counterexample == std::vector<int>{0, 2, 1});
}

TEST_CASE("monotone property: empty hypergraph fails") {
    LinearKGraph h(3, 4);
    MonotoneResult r = monotone_edge_property(h);
    CHECK_FALSE(r.holds);
    CHECK(r.counterexample.has_value());
}

TEST_CASE("monotone property bound enforced") {
    LinearKGraph h(3, 12);
    CHECK_THROWS_AS(monotone_edge_property(h), std::invalid_argument);
    CHECK_NOTHROW(monotone_edge_property(LinearKGraph(3, 7)));
}

TEST_CASE("monotone property agrees with the naive oracle") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 25; ++it) {
        int n = static_cast<int>(rng() % 6) + 3;  // 3..8
        LinearKGraph h = random_linear(rng, 3, n);
        MonotoneResult r = monotone_edge_property(h, 8);
        CHECK(r.holds == monotone_property_naive(h));
        if (!r.holds) {
            // the counterexample really has no monotone edge
            const auto& sigma = *r.counterexample;
            for (const auto& e : h.edges()) {
                bool inc = true, dec = true;
                for (std::size_t i = 1; i < e.size(); ++i) {
                    inc = inc && sigma[e[i - 1]] < sigma[e[i]];
                    dec = dec && sigma[e[i - 1]] > sigma[e[i]];
                }
                CHECK_FALSE(inc);
                CHECK_FALSE(dec);
            }
        }
    }
}

TEST_CASE("witness search") {
    CHECK_FALSE(search_monotone_witness(3, 3, 100000).has_value());  // single edge fails
    CHECK_FALSE(search_monotone_witness(3, 8, 0).has_value());       // zero budget
    auto w = search_monotone_witness(3, 8, 200000);
    if (w) {
        CHECK(monotone_edge_property(*w).holds);
    }
}

TEST_CASE("threegraph isomorphism classes") {
    CHECK(threegraph_canonical_key(k4_minus()) ==
          threegraph_canonical_key(ThreeGraph::from_edges(
              4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 2}})));
    CHECK(threegraph_canonical_key(k4_minus()) !=
          threegraph_canonical_key(complete_threegraph(4)));

    // n = 4: edge counts 0..4 give exactly one class each; plus n <= 3 classes
    std::vector<ThreeGraph> reps = all_threegraphs_upto_iso(4);
    int n4 = 0;
    for (const ThreeGraph& f : reps)
        if (f.n() == 4) ++n4;
    CHECK(n4 == 5);
    std::set<std::string> keys;
    for (const ThreeGraph& f : reps) keys.insert(threegraph_canonical_key(f));
    CHECK(keys.size() == reps.size());
}
