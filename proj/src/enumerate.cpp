#include "turan/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace turan {

std::string CanonicalKey::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

Digraph relabel(const Digraph& d, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != d.n())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Digraph out(d.n(), d.loops_allowed());
    for (auto [u, v] : d.arcs()) out.add_arc(perm[u], perm[v]);
    return out;
}

namespace {

// adjacency bits of relabel(d, perm) in row-major order, one bool per cell
void encode_relabeled(const Digraph& d, const std::vector<int>& inv, std::vector<char>& out) {
    int n = d.n();
    out.assign(static_cast<std::size_t>(n) * n, 0);
    std::size_t cell = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++cell)
            if (d.has_arc(inv[i], inv[j])) out[cell] = 1;
}

// -1 / 0 / 1: encoding under inv versus best, bailing at the first difference
int compare_relabeled(const Digraph& d, const std::vector<int>& inv,
                      const std::vector<char>& best) {
    int n = d.n();
    std::size_t cell = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++cell) {
            char bit = d.has_arc(inv[i], inv[j]) ? 1 : 0;
            if (bit != best[cell]) return bit < best[cell] ? -1 : 1;
        }
    return 0;
}

std::string pack_key(const Digraph& d, const std::vector<char>& cells) {
    std::string bytes;
    bytes.push_back(static_cast<char>(d.n()));
    bytes.push_back(d.loops_allowed() ? 1 : 0);
    std::size_t header = bytes.size();
    bytes.resize(header + (cells.size() + 7) / 8, '\0');
    for (std::size_t cell = 0; cell < cells.size(); ++cell)
        if (cells[cell])
            bytes[header + (cell >> 3)] |= static_cast<char>(1 << (7 - (cell & 7)));
    return bytes;
}

}  // namespace

CanonicalKey canonical_key(const Digraph& d, int n_max) {
    if (d.n() > n_max)
        throw std::invalid_argument("canonical_key: n exceeds the canonicalization bound of " +
                                    std::to_string(n_max));
    int n = d.n();
    std::vector<int> inv(n);  // inv[i] = original vertex placed at position i
    std::iota(inv.begin(), inv.end(), 0);
    std::vector<char> best;
    encode_relabeled(d, inv, best);
    while (std::next_permutation(inv.begin(), inv.end()))
        if (compare_relabeled(d, inv, best) < 0) encode_relabeled(d, inv, best);
    return CanonicalKey{pack_key(d, best)};
}

bool is_canonical_form(const Digraph& d, int n_max) {
    if (d.n() > n_max)
        throw std::invalid_argument("is_canonical_form: n exceeds the canonicalization bound of " +
                                    std::to_string(n_max));
    int n = d.n();
    std::vector<int> inv(n);
    std::iota(inv.begin(), inv.end(), 0);
    std::vector<char> own;
    encode_relabeled(d, inv, own);
    std::iota(inv.begin(), inv.end(), 0);
    while (std::next_permutation(inv.begin(), inv.end()))
        if (compare_relabeled(d, inv, own) < 0) return false;
    return true;
}

std::uint64_t enumeration_size(int n, EnumKind kind) {
    int pairs = n * (n - 1) / 2;
    int bits = kind == EnumKind::tournaments ? pairs : 2 * pairs;
    if (bits >= 64) throw std::invalid_argument("enumeration_size: space exceeds 2^63");
    return std::uint64_t{1} << bits;
}

Digraph decode_labeled(int n, EnumKind kind, std::uint64_t index) {
    Digraph d(n);
    std::uint64_t rest = index;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (kind == EnumKind::tournaments) {
                if (rest & 1)
                    d.add_arc(v, u);
                else
                    d.add_arc(u, v);
                rest >>= 1;
            } else {
                switch (rest & 3) {
                    case 1: d.add_arc(u, v); break;
                    case 2: d.add_arc(v, u); break;
                    case 3: d.add_arc(u, v); d.add_arc(v, u); break;
                    default: break;
                }
                rest >>= 2;
            }
        }
    return d;
}

namespace {

void check_enum_bound(int n, EnumKind kind, const EnumLimits& limits) {
    int bound = kind == EnumKind::tournaments ? limits.tournament_max : limits.digraph_max;
    if (n < 0) throw std::invalid_argument("enumerate: negative n");
    if (n > bound)
        throw std::invalid_argument(
            "enumerate: n=" + std::to_string(n) + " exceeds the feasibility bound of " +
            std::to_string(bound) +
            (kind == EnumKind::tournaments ? " for tournaments" : " for digraphs"));
}

}  // namespace

bool enumerate_range(int n, EnumKind kind, std::uint64_t first, std::uint64_t last,
                     const DigraphCallback& cb, const EnumLimits& limits) {
    check_enum_bound(n, kind, limits);
    last = std::min(last, enumeration_size(n, kind));
    for (std::uint64_t i = first; i < last; ++i)
        if (!cb(decode_labeled(n, kind, i))) return false;
    return true;
}

bool enumerate(int n, EnumKind kind, bool canonical_only, const DigraphCallback& cb,
               const EnumLimits& limits) {
    if (!canonical_only)
        return enumerate_range(n, kind, 0, enumeration_size(n, kind), cb, limits);
    check_enum_bound(n, kind, limits);
    std::uint64_t total = enumeration_size(n, kind);
    for (std::uint64_t i = 0; i < total; ++i) {
        Digraph d = decode_labeled(n, kind, i);
        if (!is_canonical_form(d, std::max(n, kCanonicalDefaultMax))) continue;
        if (!cb(d)) return false;
    }
    return true;
}

std::vector<Digraph> collect(int n, EnumKind kind, bool canonical_only,
                             const EnumLimits& limits) {
    std::vector<Digraph> out;
    enumerate(n, kind, canonical_only, [&](const Digraph& d) {
        out.push_back(d);
        return true;
    }, limits);
    return out;
}

}  // namespace turan
