#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "turan/digraph.hpp"
#include "turan/enumerate.hpp"
#include "turan/rational.hpp"

namespace turan {

struct ExtremalResult {
    long long value = 0;
    std::vector<Digraph> witnesses;          // canonical class representatives
    std::vector<CanonicalKey> witness_keys;  // aligned with witnesses (or cache-only)
    std::uint64_t nodes = 0;
    bool exhaustive = false;
    bool from_cache = false;
};

// Persistent map "pattern-key-hex:n" -> {value, witness_keys, nodes}.
// Thread-safe for concurrent lookups/stores under one process.
class ExCache {
public:
    struct Entry {
        long long value = 0;
        std::vector<std::string> witness_keys;  // hex
        std::uint64_t nodes = 0;
    };

    std::optional<Entry> lookup(const std::string& key) const;
    void store(const std::string& key, Entry entry);

    void load_file(const std::string& path);  // missing file is an empty cache
    void save_file(const std::string& path) const;

    static std::string make_key(const CanonicalKey& pattern_key, int n);

private:
    mutable std::mutex mu_;
    std::map<std::string, Entry> entries_;
};

struct ExOptions {
    int n_general_max = 5;        // general patterns
    int n_small_pattern_max = 6;  // patterns on <= 4 vertices
    int witness_cap = 100;        // canonical classes kept per result
    int threads = 1;
    int frontier_depth = 3;       // pairs fixed per parallel subtree
    ExCache* cache = nullptr;
};

// Exact ex(n, pattern) by branch and bound over the 4^C(n,2) pair states
// (none / forward / backward / both), assigned in lexicographic pair order
// with the dense state first. Prunes on pattern copies among decided pairs
// and on the optimistic bound arcs + 2 * undecided.
ExtremalResult ex_exact(const Digraph& pattern, int n, const ExOptions& opts = {});

struct RGoodRow {
    int n;
    long long ex_value;
    long long f_value;  // 2 ex(n, K_r)
};
struct RGoodReport {
    bool good = false;
    std::vector<RGoodRow> rows;
};
// checks ex(n, d) = 2 ex(n, K_r) on the prefix n in [r, n_max]
RGoodReport is_r_good_upto(const Digraph& d, int n_max, const ExOptions& opts = {});

struct MaxGamma2 {
    long long value = 0;
    Digraph witness;
    std::uint64_t digraphs_scanned = 0;
};
// exact maximum of gamma2 over all forbidden-free loop-free digraphs on n
// vertices, by exhaustive enumeration; the forbidden tournament defaults to
// the transitive one
MaxGamma2 max_gamma2(int r, int n, const EnumLimits& limits = {});
MaxGamma2 max_gamma2(const Digraph& forbidden_tournament, int n, const EnumLimits& limits = {});

// Constructive side of the sum-of-three-tournaments theorem: the bidirected
// Turan digraph on n vertices is pattern-free and has f(n, r) arcs.
struct LowerBoundOptions {
    int slack = 4;  // embedding feasibility: n <= r + slack
};
bool verify_lower_bound(int r1, int r2, int r3, int n, const LowerBoundOptions& opts = {});
bool verify_lower_bound(const Digraph& t1, const Digraph& t2, const Digraph& t3, int n,
                        const LowerBoundOptions& opts = {});

// D_n = sum of five transitive tournaments vs the forbidden D10.
// Checks (exactly, in rationals):
//   arcs(D_n) > n(n-1) - 5*C((n+4)/5, 2) >= (9/10)n^2 - (3/2)n
//            [> (8/9)n^2 only for large n] >= 2 ex(n, K_10)
// plus the headline arcs(D_n) > 2 ex(n, K_10) and, when n is small enough
// to search, D10-freeness of D_n.
struct D10Report {
    int n = 0;
    long long arcs = 0;
    long long f_n_10 = 0;  // 2 ex(n, K_10)
    Rational bound_floor;  // n(n-1) - 5 C((n+4)/5, 2)
    Rational quadratic;    // (9/10) n^2 - (3/2) n
    Rational eight_ninths; // (8/9) n^2
    bool link_construction = false;  // arcs > bound_floor
    bool link_quadratic = false;     // bound_floor >= quadratic
    bool link_middle = false;        // quadratic > eight_ninths
    bool link_turan = false;         // eight_ninths >= f_n_10
    int link_middle_first_n = 0;     // least n where the middle link holds (136)
    bool headline = false;           // arcs > f_n_10; needs large n as well
    int headline_first_n = 0;        // least n >= 10 where the excess is strict
    bool freeness_checked = false;
    bool d10_free = false;
    bool ok = false;
};
struct D10Options {
    int freeness_max = 20;
    C3Tournament4 t4_kind = C3Tournament4::strong;
};
D10Report d10_remark_check(int n, const D10Options& opts = {});

}  // namespace turan
