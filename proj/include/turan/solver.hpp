#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "turan/palette.hpp"
#include "turan/threegraph.hpp"

namespace turan {

// order[i] = the vertex at rank i under the linear order
using VertexOrder = std::vector<int>;

using ShadowColoring = std::map<std::pair<int, int>, int>;

// Certificate of P-colorability: for every edge {u,v,w} with u before v
// before w in the order, (phi(uv), phi(uw), phi(vw)) is admissible.
struct ColoringWitness {
    VertexOrder order;
    ShadowColoring phi;
};

bool validate_witness(const ThreeGraph& f, const Palette& p, const ColoringWitness& w);

// phi composed with a palette homomorphism: a p1-witness becomes a
// p2-witness whenever hom maps p1 into p2
ColoringWitness apply_hom(const ColoringWitness& w, const PaletteHom& hom);

struct SolverOptions {
    int n_max = 10;
    int shadow_max = 45;
    // enumerate one vertex order per orbit of Aut(F) (brute-forced for
    // n <= 8; the flag is ignored above that)
    bool automorphism_prune = false;
    // order blocks searched by independent workers; first witness wins,
    // absence waits for every block
    int threads = 1;
};

struct ColorSearch {
    std::optional<ColoringWitness> witness;
    std::uint64_t nodes = 0;
    std::uint64_t orders_exhausted = 0;
};

// Backtracking over shadow colorings inside every vertex order. Pairs are
// assigned most-constrained-first; once an edge has two colored pairs the
// third pair's domain comes from a precomputed directional index of the
// admissible set. Returned witnesses are re-validated.
ColorSearch colorable_search(const ThreeGraph& f, const Palette& p, const SolverOptions& opts = {});
std::optional<ColoringWitness> colorable(const ThreeGraph& f, const Palette& p,
                                         const SolverOptions& opts = {});

std::optional<ShadowColoring> colorable_fixed_order(const ThreeGraph& f, const Palette& p,
                                                    const VertexOrder& order);

// Plain nested enumeration over all orders and all m^|shadow| colorings,
// kept free of pruning so it can referee the solver.
struct OracleBounds {
    int n_max = 6;
    int shadow_max = 12;
};
bool brute_oracle(const ThreeGraph& f, const Palette& p, const OracleBounds& bounds = {});

// colorable(f, p) and colorable(f, rev(p)) always agree; returns that both
// runs did
bool reverse_symmetry_check(const ThreeGraph& f, const Palette& p, const SolverOptions& opts = {});

}  // namespace turan
