#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "turan/digraph.hpp"
#include "turan/enumerate.hpp"

using namespace turan;

namespace {

// independent tiny oracle: try all injections of pattern into host
bool contains_by_all_injections(const Digraph& host, const Digraph& pattern) {
    if (pattern.n() > host.n()) return false;
    std::vector<int> hosts(host.n());
    for (int i = 0; i < host.n(); ++i) hosts[i] = i;
    std::sort(hosts.begin(), hosts.end());
    do {
        bool ok = true;
        for (auto [u, v] : pattern.arcs())
            if (!host.has_arc(hosts[u], hosts[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(hosts.begin(), hosts.end()));
    return false;
}

}  // namespace

TEST_CASE("digraph invariants") {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(0, 1);  // duplicate ignored
    CHECK(d.arc_count() == 1);
    CHECK_THROWS_AS(d.add_arc(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(d.add_arc(1, 1), std::invalid_argument);

    Digraph loopy(2, true);
    loopy.add_arc(1, 1);
    CHECK(loopy.arc_count() == 1);
    CHECK(loopy.has_arc(1, 1));
}

TEST_CASE("degrees and connection") {
    Digraph d = Digraph::from_arcs(4, {{0, 1}, {1, 0}, {0, 2}, {3, 0}});
    CHECK(d.out_degree(0) == 2);
    CHECK(d.in_degree(0) == 2);
    CHECK(d.degree(0) == 4);
    CHECK(d.connection(0, 1) == 2);
    CHECK(d.connection(0, 3) == 1);
    std::vector<int> group{1, 2, 3};
    CHECK(d.connection(0, group) == 4);
}

TEST_CASE("sum: smallest case") {
    Digraph t1(1);
    Digraph s = sum(t1, t1);
    CHECK(s.n() == 2);
    CHECK(s.arc_count() == 2);
    CHECK(s.has_arc(0, 1));
    CHECK(s.has_arc(1, 0));
}

TEST_CASE("sum: C3 (+) C3 arc count") {
    Digraph s = sum(directed_triangle(), directed_triangle());
    CHECK(s.n() == 6);
    CHECK(s.arc_count() == 3 + 3 + 2 * 3 * 3);
}

TEST_CASE("sum: arc count formula on random digraphs") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        int n1 = rng() % 4 + 1, n2 = rng() % 4 + 1;
        Digraph a(n1), b(n2);
        for (int u = 0; u < n1; ++u)
            for (int v = 0; v < n1; ++v)
                if (u != v && rng() % 2) a.add_arc(u, v);
        for (int u = 0; u < n2; ++u)
            for (int v = 0; v < n2; ++v)
                if (u != v && rng() % 2) b.add_arc(u, v);
        CHECK(sum(a, b).arc_count() == a.arc_count() + b.arc_count() + 2 * n1 * n2);
    }
}

TEST_CASE("sum rejects loop-permitting operands") {
    Digraph loopy(2, true);
    CHECK_THROWS_AS(sum(loopy, Digraph(1)), std::invalid_argument);
}

TEST_CASE("T2 (+) T2 contains every 4-vertex tournament") {
    Digraph t2 = transitive_tournament(2);
    Digraph host = sum(t2, t2);
    int count = 0;
    enumerate(4, EnumKind::tournaments, false, [&](const Digraph& t) {
        ++count;
        CHECK(contains(host, t));
        return true;
    });
    CHECK(count == 64);
}

TEST_CASE("bidirected Turan digraph") {
    Digraph t53 = bidirected_turan(5, 3);
    CHECK(t53.n() == 5);
    CHECK(t53.arc_count() == 12);
    CHECK(turan_part_sizes(5, 3) == std::vector<int>{3, 2});

    // n <= r-1 gives the complete digraph
    CHECK(bidirected_turan(3, 5) == complete_bidirected(3));

    Digraph t1211 = bidirected_turan(12, 11);
    auto sizes = turan_part_sizes(12, 11);
    CHECK(std::count(sizes.begin(), sizes.end(), 2) == 2);
    CHECK(std::count(sizes.begin(), sizes.end(), 1) == 8);
    CHECK(t1211.arc_count() == turan_numbers(12, 11).f);

    CHECK_THROWS_AS(bidirected_turan(5, 1), std::invalid_argument);
}

TEST_CASE("turan numbers closed form") {
    CHECK(turan_numbers(6, 3).ex_k == 9);
    CHECK(turan_numbers(6, 3).f == 18);
    CHECK(turan_numbers(4, 3).ex_k == 4);
    CHECK(turan_numbers(4, 3).f == 8);
    // n <= r-1: complete graph
    for (int n = 0; n <= 6; ++n)
        CHECK(turan_numbers(n, n + 2).ex_k == n * (n - 1) / 2);
    CHECK_THROWS_AS(turan_numbers(4, 1), std::invalid_argument);
}

TEST_CASE("closed form matches the constructed digraph") {
    for (int r = 2; r <= 7; ++r)
        for (int n = 0; n <= 13; ++n)
            CHECK(bidirected_turan(n, r).arc_count() == turan_numbers(n, r).f);
}

TEST_CASE("relation gap examples") {
    RelationGap g = relation_gap(1, 1, 3);
    CHECK(g.lhs == Rational(1));
    CHECK(g.rhs == Rational(1));

    g = relation_gap(3, 3, 4);
    CHECK(g.lhs == Rational(0));
    CHECK(g.rhs == Rational(0));

    for (int n = 0; n <= 10; ++n) {
        g = relation_gap(0, n, 5);
        CHECK(g.lhs == Rational(0));
        CHECK(g.rhs == Rational(0));
    }
}

TEST_CASE("relation gap identity on a grid") {
    for (int r = 2; r <= 8; ++r)
        for (int n1 = 0; n1 <= 12; ++n1)
            for (int n2 = 0; n2 <= 12; ++n2) {
                RelationGap g = relation_gap(n1, n2, r);
                CHECK(g.lhs == g.rhs);
            }
}

TEST_CASE("embedding: basic cases") {
    CHECK(contains(complete_bidirected(3), directed_triangle()));
    CHECK_FALSE(contains(directed_triangle(), transitive_tournament(3)));
    CHECK(contains_by_all_injections(complete_bidirected(3), directed_triangle()));
    CHECK_FALSE(contains_by_all_injections(directed_triangle(), transitive_tournament(3)));

    // pattern larger than host
    CHECK_FALSE(contains(directed_triangle(), complete_bidirected(4)));
}

TEST_CASE("embedding is reflexive and matches the injection oracle") {
    std::mt19937 rng(99);
    std::vector<Digraph> pool;
    for (int it = 0; it < 30; ++it) {
        int n = rng() % 4 + 1;
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && rng() % 3 == 0) d.add_arc(u, v);
        pool.push_back(d);
    }
    for (const Digraph& d : pool) CHECK(contains(d, d));
    for (const Digraph& h : pool)
        for (const Digraph& p : pool)
            CHECK(contains(h, p) == contains_by_all_injections(h, p));
}

TEST_CASE("embedding is monotone on sampled triples") {
    std::mt19937 rng(123);
    for (int it = 0; it < 40; ++it) {
        int n = rng() % 3 + 2;
        auto rand_digraph = [&](int size) {
            Digraph d(size);
            for (int u = 0; u < size; ++u)
                for (int v = 0; v < size; ++v)
                    if (u != v && rng() % 2) d.add_arc(u, v);
            return d;
        };
        Digraph h = rand_digraph(n + 2), p = rand_digraph(n + 1), q = rand_digraph(n);
        if (contains(h, p) && contains(p, q)) CHECK(contains(h, q));
    }
}

TEST_CASE("embedding validates the returned map") {
    Digraph host = bidirected_turan(6, 4);
    Digraph pattern = transitive_tournament(3);
    auto eta = find_embedding(host, pattern);
    REQUIRE(eta.has_value());
    std::set<int> images(eta->begin(), eta->end());
    CHECK(images.size() == eta->size());
    for (auto [u, v] : pattern.arcs()) CHECK(host.has_arc((*eta)[u], (*eta)[v]));
}

TEST_CASE("tournament validation") {
    CHECK(is_tournament(transitive_tournament(4)));
    CHECK(is_tournament(directed_triangle()));
    CHECK_FALSE(is_tournament(complete_bidirected(3)));
    CHECK_FALSE(is_tournament(Digraph(2)));
    CHECK_THROWS_AS(Tournament(complete_bidirected(2)), std::invalid_argument);
}

TEST_CASE("c3 count") {
    for (int n = 1; n <= 7; ++n) CHECK(count_c3(Tournament(transitive_tournament(n))) == 0);
    CHECK(count_c3(Tournament(directed_triangle())) == 1);
}

TEST_CASE("moon-moser bound values") {
    CHECK(moon_moser_bound(3) == 1);
    CHECK(moon_moser_bound(4) == 2);
    CHECK(moon_moser_bound(5) == 5);
    CHECK(moon_moser_bound(6) == 8);
    CHECK(moon_moser_bound(7) == 14);
}

TEST_CASE("max c3 over 6-vertex tournaments is 8") {
    long long best = 0;
    enumerate(6, EnumKind::tournaments, false, [&](const Digraph& d) {
        best = std::max(best, count_c3(Tournament(d)));
        return true;
    });
    CHECK(best == 8);
}

TEST_CASE("transitive partition of 6-vertex tournaments") {
    auto part = transitive_partition6(Tournament(transitive_tournament(6)));
    REQUIRE(part.has_value());
    CHECK(part->first == std::array<int, 3>{0, 1, 2});
    CHECK(part->second == std::array<int, 3>{3, 4, 5});

    // rotational-style tournament: for i < j, arc i->j iff j-i in {1,2,4}
    Digraph rot(6);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            int d = j - i;
            if (d == 1 || d == 2 || d == 4)
                rot.add_arc(i, j);
            else
                rot.add_arc(j, i);
        }
    CHECK(transitive_partition6(Tournament(rot)).has_value());

    CHECK_THROWS_AS(transitive_partition6(Tournament(transitive_tournament(5))),
                    std::invalid_argument);
}

TEST_CASE("gamma2") {
    for (int n = 1; n <= 5; ++n) {
        Gamma2 g = gamma2(complete_bidirected(n));
        CHECK(g.value == static_cast<long long>(n) * (n - 1) * (n - 1));
    }
    CHECK(gamma2(Digraph(4)).value == 0);
    CHECK(gamma2(bidirected_turan(4, 3)).value == 16);
    Digraph loopy(2, true);
    CHECK_THROWS_AS(gamma2(loopy), std::invalid_argument);
}

TEST_CASE("gamma2 of Turan digraphs from part sizes") {
    for (int r = 2; r <= 6; ++r)
        for (int n = 0; n <= 10; ++n) {
            Gamma2 g = gamma2(bidirected_turan(n, r));
            long long expected = 0;
            for (int s : turan_part_sizes(n, r))
                expected += static_cast<long long>(s) * (n - s) * (n - s);
            CHECK(g.out_sq == expected);
            CHECK(g.in_sq == expected);
        }
}

TEST_CASE("d10 family") {
    Digraph d15 = d10_family(15);
    CHECK(d15.n() == 15);
    CHECK(d15.arc_count() == 15 * 14 - 5 * 3);
    CHECK(d15.arc_count() == d10_family_arc_count(15));

    CHECK(d10_family(5) == complete_bidirected(5));
    CHECK_THROWS_AS(d10_family(4), std::invalid_argument);

    for (int n = 5; n <= 30; ++n) CHECK(d10_family(n).arc_count() == d10_family_arc_count(n));
}

TEST_CASE("the three 4-vertex tournaments with a C3") {
    for (auto kind : {C3Tournament4::strong, C3Tournament4::dominant, C3Tournament4::dominated}) {
        Digraph t = tournament4_with_c3(kind);
        CHECK(is_tournament(t));
        CHECK(contains(t, directed_triangle()));
    }
    // pairwise non-isomorphic
    CHECK(canonical_key(tournament4_with_c3(C3Tournament4::strong)) !=
          canonical_key(tournament4_with_c3(C3Tournament4::dominant)));
    CHECK(canonical_key(tournament4_with_c3(C3Tournament4::dominant)) !=
          canonical_key(tournament4_with_c3(C3Tournament4::dominated)));
    CHECK(canonical_key(tournament4_with_c3(C3Tournament4::strong)) !=
          canonical_key(tournament4_with_c3(C3Tournament4::dominated)));
}

TEST_CASE("d10 pattern structure") {
    Digraph d10 = d10_pattern();
    CHECK(d10.n() == 10);
    // underlying graph is K_10: every pair connected by at least one arc
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(d10.connection(u, v) >= 1);
}
