#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace turan {

using Triple = std::array<int, 3>;  // strictly increasing vertices

// 3-uniform hypergraph on vertices 0..n-1. Edges are kept sorted and unique.
class ThreeGraph {
public:
    ThreeGraph() = default;
    explicit ThreeGraph(int n);
    static ThreeGraph from_edges(int n, const std::vector<Triple>& edges);

    int n() const { return n_; }
    void add_edge(int a, int b, int c);
    bool has_edge(int a, int b, int c) const;
    const std::vector<Triple>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    bool operator==(const ThreeGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Triple> edges_;
};

// Vertex pairs covered by at least one edge.
struct Shadow {
    std::vector<std::pair<int, int>> pairs;  // sorted, u < v
    bool covers(int u, int v) const;
};

Shadow shadow(const ThreeGraph& f);

// --- named 3-graphs ----------------------------------------------------------

ThreeGraph complete_threegraph(int m);   // all C(m,3) triples
ThreeGraph k4_minus();                   // {012, 013, 023}
ThreeGraph f5_star();                    // k4minus + vertex 4 linked to {0,1} and {2,3}

// {i, i+1, i+2} mod length for length >= 4; length 4 collapses to the
// complete 3-graph on four vertices
ThreeGraph tight_cycle(int length);

// parses complete:4, k4minus, f5star, cycle:5
std::optional<ThreeGraph> named_threegraph(const std::string& name);

// --- linear k-graphs ---------------------------------------------------------

// k-uniform hypergraph in which any two edges share at most one vertex.
// Construction validates linearity and names both offending edges otherwise.
class LinearKGraph {
public:
    LinearKGraph(int k, int n);
    static LinearKGraph from_edges(int k, int n, const std::vector<std::vector<int>>& edges);

    int k() const { return k_; }
    int n() const { return n_; }
    void add_edge(std::vector<int> edge);  // sorted on insert
    const std::vector<std::vector<int>>& edges() const { return edges_; }

private:
    int k_ = 3;
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// Triples placed on each k-edge x_0 < x_1 < ... < x_{k-1}:
//   FH (k = r+1 >= 4): {x_0, x_i, x_j} for 1 <= i < j <= r
//   F4 (k = 4):        {x_0,x_1,x_2}, {x_0,x_2,x_3}
//   F7 (k = 7):        {x_0,x_1,x_3}, {x_1,x_2,x_3}, {x_0,x_2,x_3},
//                      {x_3,x_4,x_5}, {x_3,x_4,x_6}, {x_3,x_5,x_6}
enum class ExpansionScheme { FH, F4, F7 };

ThreeGraph construct_from_linear(const LinearKGraph& h, ExpansionScheme scheme);

// --- monotone-edge property ----------------------------------------------------

// Whether every permutation of [0,n) is monotone on at least one edge.
// The search walks permutation prefixes in lexicographic order and abandons a
// prefix as soon as some fully placed edge is monotone, so a returned
// counterexample is the lexicographically first one.
struct MonotoneResult {
    bool holds = false;
    std::optional<std::vector<int>> counterexample;  // sigma[v] = rank of vertex v
    std::uint64_t nodes = 0;
};

inline constexpr int kMonotoneDefaultMax = 11;

MonotoneResult monotone_edge_property(const LinearKGraph& h, int n_max = kMonotoneDefaultMax);

// Best-effort randomized greedy search for a linear k-graph with the
// monotone-edge property. Absence after budget exhaustion proves nothing.
std::optional<LinearKGraph> search_monotone_witness(int k, int n_max, std::uint64_t budget,
                                                    std::uint64_t seed = 0x5eed);

// --- brute-force isomorphism (n <= 8) ------------------------------------------

std::string threegraph_canonical_key(const ThreeGraph& f, int n_max = 8);
std::vector<ThreeGraph> all_threegraphs_upto_iso(int n_max);

}  // namespace turan
