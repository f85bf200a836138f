#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "turan/digraph.hpp"

namespace turan {

// Byte string identifying a digraph up to isomorphism: the lexicographically
// minimal row-major adjacency encoding over all vertex relabelings, prefixed
// by n and the loops flag. Equal keys iff isomorphic (within the bound).
struct CanonicalKey {
    std::string bytes;

    auto operator<=>(const CanonicalKey&) const = default;
    std::string hex() const;
};

inline constexpr int kCanonicalDefaultMax = 10;

Digraph relabel(const Digraph& d, const std::vector<int>& perm);
CanonicalKey canonical_key(const Digraph& d, int n_max = kCanonicalDefaultMax);

// true iff d is its own canonical representative (lex-minimal relabeling)
bool is_canonical_form(const Digraph& d, int n_max = kCanonicalDefaultMax);

enum class EnumKind { tournaments, digraphs };

struct EnumLimits {
    int tournament_max = 7;  // 2^21 labeled tournaments
    int digraph_max = 5;     // 4^10 labeled loop-free digraphs
};

// Number of labeled objects: 2^C(n,2) tournaments, 4^C(n,2) digraphs.
std::uint64_t enumeration_size(int n, EnumKind kind);

// Labeled object for a given index. Pairs (u,v), u<v, in lex order; for
// tournaments bit 0 means arc u->v, bit 1 means v->u; for digraphs the
// base-4 digit means none / u->v / v->u / both.
Digraph decode_labeled(int n, EnumKind kind, std::uint64_t index);

// Streams decode_labeled(n, kind, i) for i in [first, last); a false return
// from the callback stops the stream. Disjoint index ranges partition the
// space for concurrent workers.
using DigraphCallback = std::function<bool(const Digraph&)>;
bool enumerate_range(int n, EnumKind kind, std::uint64_t first, std::uint64_t last,
                     const DigraphCallback& cb, const EnumLimits& limits = {});

// Full stream; with canonical_only, exactly one representative per
// isomorphism class (the canonical form itself).
bool enumerate(int n, EnumKind kind, bool canonical_only, const DigraphCallback& cb,
               const EnumLimits& limits = {});

std::vector<Digraph> collect(int n, EnumKind kind, bool canonical_only,
                             const EnumLimits& limits = {});

}  // namespace turan
