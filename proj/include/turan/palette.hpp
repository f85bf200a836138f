#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turan/digraph.hpp"
#include "turan/rational.hpp"

namespace turan {

// Palette: colors 0..m-1 plus a set of ordered admissible (left, top, right)
// triples. color_tags, when present, records where each color came from
// (vertex colors and pair colors of digraph-derived palettes).
struct Palette {
    int m = 0;
    std::vector<std::array<int, 3>> triples;  // sorted, unique
    std::vector<std::string> color_tags;      // empty or size m

    static Palette from_triples(int m, std::vector<std::array<int, 3>> triples);
    bool admissible(int x, int y, int z) const;
};

Rational density(const Palette& p);

// disjoint union; the second palette's colors are shifted by p1.m
Palette palette_union(const Palette& p1, const Palette& p2);

// rev(A) = {(z,y,x) : (x,y,z) in A}
Palette reverse(const Palette& p);

// Total map source color -> target color sending admissible triples to
// admissible triples componentwise.
using PaletteHom = std::vector<int>;

bool is_valid_hom(const Palette& src, const Palette& dst, const PaletteHom& f);

// Backtracking homomorphism search. Source colors are processed by
// descending occurrence count (ties by label); initial domains come from
// position-compatibility tables; absence means the search space is exhausted.
// Colors in no triple map to target color 0.
std::optional<PaletteHom> subpalette(const Palette& p1, const Palette& p2);

// Lemma-backed check: a 3-graph P1-colorable but not P2-colorable exists iff
// P1 is a subpalette of neither P2 nor rev(P2).
bool existence_condition(const Palette& p1, const Palette& p2);

struct PositionSets {
    std::vector<int> left, top, right;  // sorted color lists
};
PositionSets left_top_right_sets(const Palette& p);

// --- named palettes ------------------------------------------------------------

Palette palette_qr(int r);            // {(x,y,z) : x != y},          density (r-1)/r

// {(x,y,z) : x != y, y != z}, density ((r-1)/r)^2. Indexed by its own color
// count r; some conventions index this family one higher, so the palette of
// density ((r-2)/(r-1))^2 is palette_q2r(r-1) here.
Palette palette_q2r(int r);
Palette palette_qminus3();            // ([3], {(1,2,3)}) shifted 0-based
Palette palette_qplus1_5();           // ([5], {(1,2,3),(4,5,1)})
Palette palette_qplus2_5();           // ([5], {(1,2,3),(4,1,5)})
Palette palette_qprime_minus3();      // ([3], {(1,3,1),(1,3,2),(2,3,1),(2,3,2)})

// parses Qr(3), Q2r(2), Qminus3, Qplus1_5, Qplus2_5, QprimeMinus3
std::optional<Palette> named_palette(const std::string& name);

// --- digraph-derived palettes -----------------------------------------------------

enum class Side { left, right };

// Q^L_D / Q^R_D on r vertex colors plus all r^2 pair colors c_ab; one triple
// per arc: (a, b, c_ab) on the left side, (c_ab, a, b) on the right.
Palette side_palette(const Digraph& d, Side side);

int pair_color(int r, int a, int b);  // index of c_ab in a side palette

// Q_{D (u) D'} = Q^L_D (u) Q^R_D'
Palette union_palette_of(const Digraph& d, const Digraph& d_prime);

// Auxiliary digraph on the color set: left adds (a,b) when (a,b,c) is
// admissible for some c, right when (c,a,b) is. Loops permitted.
Digraph aux_digraph(const Palette& p, Side side);

// bijective color relabeling carrying triples onto triples
bool palette_isomorphic(const Palette& p1, const Palette& p2);

}  // namespace turan
