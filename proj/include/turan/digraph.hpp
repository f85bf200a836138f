#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "turan/rational.hpp"

namespace turan {

// Labeled digraph on vertices 0..n-1. Arcs live in a row-major bitmask over
// the n*n cell grid, so membership tests and degree counts are popcounts.
// Values are immutable once built and safe to share across threads.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n, bool allow_loops = false);
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                             bool allow_loops = false);

    int n() const { return n_; }
    bool loops_allowed() const { return allow_loops_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(int u, int v) const {
        check_endpoint(u);
        check_endpoint(v);
        std::size_t cell = static_cast<std::size_t>(u) * n_ + v;
        return (bits_[cell >> 6] >> (cell & 63)) & 1u;
    }
    void add_arc(int u, int v);
    void remove_arc(int u, int v);

    std::vector<std::pair<int, int>> arcs() const;  // sorted (u,v)

    int out_degree(int v) const;
    int in_degree(int v) const;
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // total connection e(v,u) / e(v,U): arcs with one endpoint v, other in U
    int connection(int v, int u) const;
    int connection(int v, std::span<const int> group) const;

    bool operator==(const Digraph& other) const {
        return n_ == other.n_ && allow_loops_ == other.allow_loops_ && bits_ == other.bits_;
    }

private:
    void check_endpoint(int v) const;

    int n_ = 0;
    bool allow_loops_ = false;
    int arc_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Tournament: exactly one arc per unordered vertex pair, no loops.
// The constructor validates and throws std::invalid_argument otherwise.
class Tournament {
public:
    explicit Tournament(Digraph d);
    const Digraph& digraph() const { return d_; }
    int n() const { return d_.n(); }

private:
    Digraph d_;
};

bool is_tournament(const Digraph& d);

// --- constructions ---------------------------------------------------------

Digraph transitive_tournament(int r);       // arcs (i,j) for i<j
Digraph directed_triangle();                // C3: 0->1->2->0
Digraph complete_bidirected(int r);         // all arcs both ways
Digraph empty_digraph(int n);

// The three 4-vertex tournaments containing a directed triangle, by score
// sequence: strong (1,1,2,2), dominant (one vertex beating a C3: 3,1,1,1),
// dominated (a C3 beating one vertex: 2,2,2,0). dominant and dominated are
// each other's reversals but are not isomorphic.
enum class C3Tournament4 { strong, dominant, dominated };
Digraph tournament4_with_c3(C3Tournament4 kind = C3Tournament4::strong);

// all arcs turned around
Digraph reverse(const Digraph& d);

// sum D1 (+) D2: disjoint union plus all arcs in both directions across.
// Rejects loop-permitting inputs.
Digraph sum(const Digraph& a, const Digraph& b);
Digraph sum(std::span<const Digraph> parts);

// Balanced complete (r-1)-partite bidirected digraph on n vertices.
Digraph bidirected_turan(int n, int r);
std::vector<int> turan_part_sizes(long long n, int r);  // descending

struct TuranNumbers {
    long long ex_k;  // ex(n, K_r), closed form
    long long f;     // 2 * ex(n, K_r)
};
TuranNumbers turan_numbers(long long n, int r);

struct RelationGap {
    Rational lhs;  // f(n1+n2,r) - f(n1,r) - f(n2,r) - 2*(r-2)/(r-1)*n1*n2
    Rational rhs;  // residue case split
};
RelationGap relation_gap(long long n1, long long n2, int r);

// --- embedding -------------------------------------------------------------

// Injective map eta with (eta(u),eta(v)) a host arc for every pattern arc.
// Pattern vertices are tried in order of decreasing total degree (ties by
// label); candidates are pruned by degree compatibility and forward-checked
// domains. Host size is capped so domains fit one machine word.
inline constexpr int kEmbedHostMax = 64;

std::optional<std::vector<int>> find_embedding(const Digraph& host, const Digraph& pattern);
bool contains(const Digraph& host, const Digraph& pattern);

// --- tournament statistics --------------------------------------------------

long long count_c3(const Tournament& t);
long long moon_moser_bound(int n);

using TriplePartition = std::pair<std::array<int, 3>, std::array<int, 3>>;
std::optional<TriplePartition> transitive_partition6(const Tournament& t);

struct Gamma2 {
    long long out_sq;
    long long in_sq;
    long long value;  // max of the two
};
Gamma2 gamma2(const Digraph& d);

// --- the D10 remark family ---------------------------------------------------

// C3 (+) C3 (+) T'4 where T'4 is a 4-vertex tournament containing a C3.
Digraph d10_pattern(C3Tournament4 kind = C3Tournament4::strong);

// Sum of five transitive tournaments of sizes floor((n+i)/5), i = 0..4.
Digraph d10_family(int n);
long long d10_family_arc_count(long long n);

}  // namespace turan
