#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "turan/digraph.hpp"
#include "turan/enumerate.hpp"

using namespace turan;

TEST_CASE("labeled enumeration counts") {
    CHECK(collect(3, EnumKind::tournaments, false).size() == 8);
    CHECK(collect(2, EnumKind::digraphs, false).size() == 4);
    CHECK(collect(0, EnumKind::tournaments, false).size() == 1);
    CHECK(enumeration_size(5, EnumKind::tournaments) == 1024);
    CHECK(enumeration_size(4, EnumKind::digraphs) == 4096);
}

TEST_CASE("enumeration bound errors name the bound") {
    EnumLimits limits;
    try {
        enumerate(8, EnumKind::tournaments, false, [](const Digraph&) { return true; }, limits);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("7") != std::string::npos);
    }
    CHECK_THROWS_AS(
        enumerate(6, EnumKind::digraphs, false, [](const Digraph&) { return true; }, limits),
        std::invalid_argument);
}

TEST_CASE("range partitions compose to the full stream") {
    std::vector<Digraph> full = collect(3, EnumKind::digraphs, false);
    std::vector<Digraph> pieced;
    std::uint64_t total = enumeration_size(3, EnumKind::digraphs);
    for (std::uint64_t lo = 0; lo < total; lo += 100)
        enumerate_range(3, EnumKind::digraphs, lo, std::min(lo + 100, total),
                        [&](const Digraph& d) {
                            pieced.push_back(d);
                            return true;
                        });
    REQUIRE(full.size() == pieced.size());
    for (std::size_t i = 0; i < full.size(); ++i) CHECK(full[i] == pieced[i]);
}

TEST_CASE("all labeled tournaments are tournaments") {
    enumerate(4, EnumKind::tournaments, false, [](const Digraph& d) {
        CHECK(is_tournament(d));
        return true;
    });
}

TEST_CASE("canonical enumeration of 3-vertex tournaments") {
    std::vector<Digraph> reps = collect(3, EnumKind::tournaments, true);
    CHECK(reps.size() == 2);  // the transitive one and the directed triangle
    std::set<CanonicalKey> keys;
    for (const Digraph& d : reps) keys.insert(canonical_key(d));
    CHECK(keys.size() == 2);
    CHECK(keys.count(canonical_key(directed_triangle())) == 1);
    CHECK(keys.count(canonical_key(transitive_tournament(3))) == 1);
}

TEST_CASE("canonical enumeration matches key-dedup counting") {
    // 4-vertex tournaments fall into 4 isomorphism classes
    std::set<CanonicalKey> keys;
    enumerate(4, EnumKind::tournaments, false, [&](const Digraph& d) {
        keys.insert(canonical_key(d));
        return true;
    });
    CHECK(keys.size() == 4);
    CHECK(collect(4, EnumKind::tournaments, true).size() == 4);

    // 2-vertex loop-free digraphs: none, one arc, both arcs
    CHECK(collect(2, EnumKind::digraphs, true).size() == 3);
}

TEST_CASE("labeled 3-vertex tournament keys collapse to 2 values") {
    std::set<CanonicalKey> keys;
    enumerate(3, EnumKind::tournaments, false, [&](const Digraph& d) {
        keys.insert(canonical_key(d));
        return true;
    });
    CHECK(keys.size() == 2);
}

TEST_CASE("canonical key is invariant under random relabelings") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 5; ++it) {
        int n = static_cast<int>(rng() % 5) + 1;
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 2) d.add_arc(u, v);
        CanonicalKey key = canonical_key(d);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int rep = 0; rep < 100; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_key(relabel(d, perm)) == key);
        }
    }
}

TEST_CASE("distinct structures get distinct keys") {
    CHECK(canonical_key(directed_triangle()) != canonical_key(transitive_tournament(3)));
    Digraph loopy(2, true);
    loopy.add_arc(0, 0);
    Digraph plain = Digraph::from_arcs(2, {{0, 1}});
    CHECK(canonical_key(loopy) != canonical_key(plain));
}

TEST_CASE("canonicalization bound is enforced") {
    CHECK_THROWS_AS(canonical_key(Digraph(11)), std::invalid_argument);
    CHECK_THROWS_AS(canonical_key(Digraph(3), 2), std::invalid_argument);
    CHECK_NOTHROW(canonical_key(Digraph(8)));
}

TEST_CASE("early stop works") {
    int seen = 0;
    bool completed = enumerate(3, EnumKind::tournaments, false, [&](const Digraph&) {
        return ++seen < 3;
    });
    CHECK_FALSE(completed);
    CHECK(seen == 3);
}
