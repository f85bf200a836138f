#include "turan/digraph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace turan {

Digraph::Digraph(int n, bool allow_loops) : n_(n), allow_loops_(allow_loops) {
    if (n < 0) throw std::invalid_argument("digraph: negative vertex count");
    bits_.assign((static_cast<std::size_t>(n) * n + 63) / 64, 0);
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs,
                           bool allow_loops) {
    Digraph d(n, allow_loops);
    for (auto [u, v] : arcs) d.add_arc(u, v);
    return d;
}

void Digraph::check_endpoint(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("digraph: vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n_) + ")");
}

void Digraph::add_arc(int u, int v) {
    check_endpoint(u);
    check_endpoint(v);
    if (u == v && !allow_loops_)
        throw std::invalid_argument("digraph: loop " + std::to_string(u) +
                                    " on a loop-free digraph");
    std::size_t cell = static_cast<std::size_t>(u) * n_ + v;
    std::uint64_t mask = std::uint64_t{1} << (cell & 63);
    if (!(bits_[cell >> 6] & mask)) {
        bits_[cell >> 6] |= mask;
        ++arc_count_;
    }
}

void Digraph::remove_arc(int u, int v) {
    check_endpoint(u);
    check_endpoint(v);
    std::size_t cell = static_cast<std::size_t>(u) * n_ + v;
    std::uint64_t mask = std::uint64_t{1} << (cell & 63);
    if (bits_[cell >> 6] & mask) {
        bits_[cell >> 6] &= ~mask;
        --arc_count_;
    }
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

int Digraph::out_degree(int v) const {
    check_endpoint(v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (has_arc(v, u)) ++d;
    return d;
}

int Digraph::in_degree(int v) const {
    check_endpoint(v);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (has_arc(u, v)) ++d;
    return d;
}

int Digraph::connection(int v, int u) const {
    return (has_arc(v, u) ? 1 : 0) + (has_arc(u, v) ? 1 : 0);
}

int Digraph::connection(int v, std::span<const int> group) const {
    int e = 0;
    for (int u : group) e += connection(v, u);
    return e;
}

// --- tournaments -------------------------------------------------------------

bool is_tournament(const Digraph& d) {
    if (d.loops_allowed()) return false;
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

Tournament::Tournament(Digraph d) : d_(std::move(d)) {
    if (!is_tournament(d_))
        throw std::invalid_argument(
            "tournament: input must have exactly one arc per vertex pair");
}

// --- constructions -----------------------------------------------------------

Digraph transitive_tournament(int r) {
    Digraph d(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) d.add_arc(i, j);
    return d;
}

Digraph directed_triangle() {
    return Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
}

Digraph complete_bidirected(int r) {
    Digraph d(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) d.add_arc(i, j);
    return d;
}

Digraph empty_digraph(int n) { return Digraph(n); }

Digraph tournament4_with_c3(C3Tournament4 kind) {
    switch (kind) {
        case C3Tournament4::strong:
            // 0->1->2->0 with 3 beating 0 and losing to 1,2; scores 1,1,2,2
            return Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {1, 3}, {2, 3}});
        case C3Tournament4::dominant:
            return Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
        case C3Tournament4::dominated:
            return Digraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    }
    throw std::invalid_argument("tournament4_with_c3: unknown kind");
}

Digraph reverse(const Digraph& d) {
    Digraph out(d.n(), d.loops_allowed());
    for (auto [u, v] : d.arcs()) out.add_arc(v, u);
    return out;
}

Digraph sum(const Digraph& a, const Digraph& b) {
    if (a.loops_allowed() || b.loops_allowed())
        throw std::invalid_argument("sum: loop-permitting operands are not supported");
    Digraph out(a.n() + b.n());
    for (auto [u, v] : a.arcs()) out.add_arc(u, v);
    for (auto [u, v] : b.arcs()) out.add_arc(a.n() + u, a.n() + v);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) {
            out.add_arc(u, a.n() + v);
            out.add_arc(a.n() + v, u);
        }
    return out;
}

Digraph sum(std::span<const Digraph> parts) {
    Digraph acc(0);
    for (const Digraph& p : parts) acc = sum(acc, p);
    return acc;
}

std::vector<int> turan_part_sizes(long long n, int r) {
    if (r < 2) throw std::invalid_argument("turan: r must be at least 2");
    if (n < 0) throw std::invalid_argument("turan: negative n");
    long long parts = r - 1;
    long long q = n / parts, alpha = n % parts;
    std::vector<int> sizes;
    for (long long i = 0; i < parts; ++i)
        sizes.push_back(static_cast<int>(q + (i < alpha ? 1 : 0)));
    return sizes;
}

Digraph bidirected_turan(int n, int r) {
    auto sizes = turan_part_sizes(n, r);
    Digraph d(n);
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        for (int i = 0; i < sizes[p]; ++i) part_of[v++] = static_cast<int>(p);
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (u != w && part_of[u] != part_of[w]) d.add_arc(u, w);
    return d;
}

TuranNumbers turan_numbers(long long n, int r) {
    if (r < 2) throw std::invalid_argument("turan: r must be at least 2");
    if (n < 0) throw std::invalid_argument("turan: negative n");
    long long parts = r - 1;
    long long alpha = n % parts;
    // ex(n,K_r) = (r-2)/(2(r-1)) n^2 - (r-1-alpha) alpha / (2(r-1)), exact
    long long numerator = (r - 2) * n * n - (parts - alpha) * alpha;
    if (numerator % (2 * parts) != 0)
        throw std::logic_error("turan: closed form is not integral");
    TuranNumbers t;
    t.ex_k = numerator / (2 * parts);
    t.f = 2 * t.ex_k;
    return t;
}

RelationGap relation_gap(long long n1, long long n2, int r) {
    if (r < 2) throw std::invalid_argument("relation_gap: r must be at least 2");
    long long parts = r - 1;
    Rational f12(turan_numbers(n1 + n2, r).f);
    Rational f1(turan_numbers(n1, r).f);
    Rational f2(turan_numbers(n2, r).f);
    Rational cross(2 * (r - 2) * n1 * n2, parts);
    RelationGap g;
    g.lhs = f12 - f1 - f2 - cross;
    long long a1 = n1 % parts, a2 = n2 % parts;
    if (a1 + a2 < parts)
        g.rhs = Rational(2 * a1 * a2, parts);
    else
        g.rhs = Rational(2 * (parts - a1) * (parts - a2), parts);
    return g;
}

// --- embedding ---------------------------------------------------------------

namespace {

struct EmbedState {
    const Digraph* host;
    const Digraph* pattern;
    int hn, pn;
    std::vector<int> order;                  // pattern vertices, by search rank
    std::vector<std::uint64_t> host_out, host_in;
    std::vector<int> host_outdeg, host_indeg;
    std::vector<int> assign;                 // pattern vertex -> host vertex
    std::uint64_t used = 0;
};

bool embed_rec(EmbedState& st, std::size_t depth, std::span<const std::uint64_t> domains) {
    if (depth == st.order.size()) return true;

    // Hall-style count prune: remaining pattern vertices need distinct hosts
    std::uint64_t future_union = 0;
    for (std::size_t i = depth; i < st.order.size(); ++i) future_union |= domains[i];
    if (static_cast<std::size_t>(std::popcount(future_union)) < st.order.size() - depth)
        return false;

    int pv = st.order[depth];
    std::uint64_t cands = domains[depth];
    while (cands) {
        int hv = std::countr_zero(cands);
        cands &= cands - 1;

        // narrow later domains against arcs between pv and later pattern vertices
        std::vector<std::uint64_t> next(domains.begin(), domains.end());
        bool feasible = true;
        for (std::size_t i = depth + 1; i < st.order.size() && feasible; ++i) {
            int pw = st.order[i];
            std::uint64_t dom = next[i] & ~(std::uint64_t{1} << hv);
            if (st.pattern->has_arc(pv, pw)) dom &= st.host_out[hv];
            if (st.pattern->has_arc(pw, pv)) dom &= st.host_in[hv];
            next[i] = dom;
            feasible = dom != 0;
        }
        if (!feasible) continue;

        st.assign[pv] = hv;
        st.used |= std::uint64_t{1} << hv;
        if (embed_rec(st, depth + 1, next)) return true;
        st.used &= ~(std::uint64_t{1} << hv);
        st.assign[pv] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_embedding(const Digraph& host, const Digraph& pattern) {
    if (pattern.loops_allowed())
        throw std::invalid_argument("find_embedding: pattern must be loop-free");
    if (host.n() > kEmbedHostMax)
        throw std::invalid_argument("find_embedding: host exceeds the supported bound of " +
                                    std::to_string(kEmbedHostMax) + " vertices");
    if (pattern.n() > host.n()) return std::nullopt;
    if (pattern.n() == 0) return std::vector<int>{};

    EmbedState st;
    st.host = &host;
    st.pattern = &pattern;
    st.hn = host.n();
    st.pn = pattern.n();
    st.host_out.assign(st.hn, 0);
    st.host_in.assign(st.hn, 0);
    st.host_outdeg.assign(st.hn, 0);
    st.host_indeg.assign(st.hn, 0);
    for (int u = 0; u < st.hn; ++u)
        for (int v = 0; v < st.hn; ++v)
            if (u != v && host.has_arc(u, v)) {
                st.host_out[u] |= std::uint64_t{1} << v;
                st.host_in[v] |= std::uint64_t{1} << u;
                ++st.host_outdeg[u];
                ++st.host_indeg[v];
            }

    st.order.resize(st.pn);
    for (int i = 0; i < st.pn; ++i) st.order[i] = i;
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        int da = pattern.degree(a), db = pattern.degree(b);
        return da != db ? da > db : a < b;
    });

    std::vector<std::uint64_t> domains(st.pn, 0);
    for (int i = 0; i < st.pn; ++i) {
        int pv = st.order[i];
        int po = pattern.out_degree(pv), pi = pattern.in_degree(pv);
        for (int hv = 0; hv < st.hn; ++hv)
            if (st.host_outdeg[hv] >= po && st.host_indeg[hv] >= pi)
                domains[i] |= std::uint64_t{1} << hv;
    }

    st.assign.assign(st.pn, -1);
    if (embed_rec(st, 0, domains)) return st.assign;
    return std::nullopt;
}

bool contains(const Digraph& host, const Digraph& pattern) {
    return find_embedding(host, pattern).has_value();
}

// --- tournament statistics -----------------------------------------------------

long long count_c3(const Tournament& t) {
    const Digraph& d = t.digraph();
    long long n = d.n();
    long long transitive = 0;
    for (int v = 0; v < n; ++v) {
        long long od = d.out_degree(v);
        transitive += od * (od - 1) / 2;  // v dominates each transitive triple once
    }
    return n * (n - 1) * (n - 2) / 6 - transitive;
}

long long moon_moser_bound(int n) {
    if (n < 0) throw std::invalid_argument("moon_moser_bound: negative n");
    long long nn = n;
    return n % 2 == 0 ? nn * (nn * nn - 4) / 24 : nn * (nn * nn - 1) / 24;
}

namespace {

bool triple_transitive(const Digraph& d, int a, int b, int c) {
    // a cyclic triple has all three out-degrees equal to 1 inside the triple
    int oa = (d.has_arc(a, b) ? 1 : 0) + (d.has_arc(a, c) ? 1 : 0);
    int ob = (d.has_arc(b, a) ? 1 : 0) + (d.has_arc(b, c) ? 1 : 0);
    int oc = (d.has_arc(c, a) ? 1 : 0) + (d.has_arc(c, b) ? 1 : 0);
    return !(oa == 1 && ob == 1 && oc == 1);
}

}  // namespace

std::optional<TriplePartition> transitive_partition6(const Tournament& t) {
    if (t.n() != 6)
        throw std::invalid_argument("transitive_partition6: tournament must have 6 vertices");
    const Digraph& d = t.digraph();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) {
                if (!triple_transitive(d, a, b, c)) continue;
                std::array<int, 3> rest{};
                int k = 0;
                for (int v = 0; v < 6; ++v)
                    if (v != a && v != b && v != c) rest[k++] = v;
                if (triple_transitive(d, rest[0], rest[1], rest[2]))
                    return TriplePartition{{a, b, c}, rest};
            }
    return std::nullopt;
}

Gamma2 gamma2(const Digraph& d) {
    if (d.loops_allowed())
        throw std::invalid_argument("gamma2: loop-permitting digraphs are not supported");
    Gamma2 g{0, 0, 0};
    for (int v = 0; v < d.n(); ++v) {
        long long od = d.out_degree(v), id = d.in_degree(v);
        g.out_sq += od * od;
        g.in_sq += id * id;
    }
    g.value = std::max(g.out_sq, g.in_sq);
    return g;
}

// --- D10 remark family -----------------------------------------------------------

Digraph d10_pattern(C3Tournament4 kind) {
    std::array<Digraph, 3> parts{directed_triangle(), directed_triangle(),
                                 tournament4_with_c3(kind)};
    return sum(std::span<const Digraph>(parts));
}

Digraph d10_family(int n) {
    if (n < 5) throw std::invalid_argument("d10_family: n must be at least 5");
    std::vector<Digraph> parts;
    for (int i = 0; i < 5; ++i) parts.push_back(transitive_tournament((n + i) / 5));
    return sum(std::span<const Digraph>(parts));
}

long long d10_family_arc_count(long long n) {
    long long within = 0;
    for (long long i = 0; i < 5; ++i) {
        long long s = (n + i) / 5;
        within += s * (s - 1) / 2;
    }
    return n * (n - 1) - within;
}

}  // namespace turan
