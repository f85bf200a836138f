#include "turan/palette.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace turan {

namespace {

void check_color(int c, int m) {
    if (c < 0 || c >= m)
        throw std::invalid_argument("palette: color " + std::to_string(c) +
                                    " out of range [0," + std::to_string(m) + ")");
}

}  // namespace

Palette Palette::from_triples(int m, std::vector<std::array<int, 3>> triples) {
    if (m < 0) throw std::invalid_argument("palette: negative color count");
    for (const auto& t : triples)
        for (int c : t) check_color(c, m);
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    Palette p;
    p.m = m;
    p.triples = std::move(triples);
    return p;
}

bool Palette::admissible(int x, int y, int z) const {
    return std::binary_search(triples.begin(), triples.end(), std::array<int, 3>{x, y, z});
}

Rational density(const Palette& p) {
    if (p.m < 1) throw std::invalid_argument("density: palette needs at least one color");
    long long m = p.m;
    return Rational(static_cast<long long>(p.triples.size()), m * m * m);
}

Palette palette_union(const Palette& p1, const Palette& p2) {
    std::vector<std::array<int, 3>> triples = p1.triples;
    for (const auto& t : p2.triples)
        triples.push_back({t[0] + p1.m, t[1] + p1.m, t[2] + p1.m});
    Palette out = Palette::from_triples(p1.m + p2.m, std::move(triples));
    if (!p1.color_tags.empty() || !p2.color_tags.empty()) {
        auto tags_of = [](const Palette& p) {
            if (!p.color_tags.empty()) return p.color_tags;
            std::vector<std::string> t(p.m);
            for (int c = 0; c < p.m; ++c) t[c] = std::to_string(c);
            return t;
        };
        out.color_tags = tags_of(p1);
        for (const std::string& t : tags_of(p2)) out.color_tags.push_back(t + "'");
    }
    return out;
}

Palette reverse(const Palette& p) {
    std::vector<std::array<int, 3>> triples;
    triples.reserve(p.triples.size());
    for (const auto& t : p.triples) triples.push_back({t[2], t[1], t[0]});
    Palette out = Palette::from_triples(p.m, std::move(triples));
    out.color_tags = p.color_tags;
    return out;
}

bool is_valid_hom(const Palette& src, const Palette& dst, const PaletteHom& f) {
    if (static_cast<int>(f.size()) != src.m) return false;
    for (int c : f)
        if (c < 0 || c >= dst.m) return false;
    for (const auto& t : src.triples)
        if (!dst.admissible(f[t[0]], f[t[1]], f[t[2]])) return false;
    return true;
}

namespace {

struct HomSearch {
    const Palette* src;
    const Palette* dst;
    std::vector<int> used_colors;                  // source colors in some triple
    std::vector<std::vector<int>> domains;         // aligned with used_colors
    std::vector<int> assign;                       // source color -> target or -1
    std::vector<std::array<int, 3>> triples;

    bool consistent(int color) const {
        for (const auto& t : triples) {
            if (t[0] != color && t[1] != color && t[2] != color) continue;
            int x = assign[t[0]], y = assign[t[1]], z = assign[t[2]];
            if (x < 0 || y < 0 || z < 0) continue;
            if (!dst->admissible(x, y, z)) return false;
        }
        return true;
    }

    // forward check: every triple with exactly one unassigned color must
    // still admit some completion
    bool lookahead(int color) const {
        for (const auto& t : triples) {
            if (t[0] != color && t[1] != color && t[2] != color) continue;
            int unassigned = -1, count = 0;
            for (int c : t)
                if (assign[c] < 0) { unassigned = c; ++count; }
            if (count != 1) continue;
            bool any = false;
            for (const auto& d : dst->triples) {
                bool match = true;
                for (int pos = 0; pos < 3 && match; ++pos) {
                    if (t[pos] == unassigned) continue;
                    if (assign[t[pos]] != d[pos]) match = false;
                }
                if (match) { any = true; break; }
            }
            if (!any) return false;
        }
        return true;
    }

    bool solve(std::size_t depth) {
        if (depth == used_colors.size()) return true;
        int color = used_colors[depth];
        for (int target : domains[depth]) {
            assign[color] = target;
            if (consistent(color) && lookahead(color) && solve(depth + 1)) return true;
            assign[color] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<PaletteHom> subpalette(const Palette& p1, const Palette& p2) {
    if (!p1.triples.empty() && p2.triples.empty()) return std::nullopt;
    if (p2.m == 0) {
        if (p1.m == 0) return PaletteHom{};
        return std::nullopt;  // no target color to map to
    }

    HomSearch s;
    s.src = &p1;
    s.dst = &p2;
    s.triples = p1.triples;
    s.assign.assign(p1.m, -1);

    std::vector<int> occ(p1.m, 0);
    std::array<std::vector<bool>, 3> src_pos;
    src_pos.fill(std::vector<bool>(p1.m, false));
    for (const auto& t : p1.triples)
        for (int pos = 0; pos < 3; ++pos) {
            ++occ[t[pos]];
            src_pos[pos][t[pos]] = true;
        }
    std::array<std::vector<bool>, 3> dst_pos;
    dst_pos.fill(std::vector<bool>(p2.m, false));
    for (const auto& t : p2.triples)
        for (int pos = 0; pos < 3; ++pos) dst_pos[pos][t[pos]] = true;

    for (int c = 0; c < p1.m; ++c)
        if (occ[c] > 0) s.used_colors.push_back(c);
    std::stable_sort(s.used_colors.begin(), s.used_colors.end(),
                     [&](int a, int b) { return occ[a] != occ[b] ? occ[a] > occ[b] : a < b; });

    // position-compatibility domains: a color used in some position can only
    // map to a target color used in that position
    for (int c : s.used_colors) {
        std::vector<int> dom;
        for (int t = 0; t < p2.m; ++t) {
            bool ok = true;
            for (int pos = 0; pos < 3 && ok; ++pos)
                if (src_pos[pos][c] && !dst_pos[pos][t]) ok = false;
            if (ok) dom.push_back(t);
        }
        if (dom.empty()) return std::nullopt;
        s.domains.push_back(std::move(dom));
    }

    if (!s.solve(0)) return std::nullopt;
    PaletteHom f(p1.m, 0);  // unused colors map to target color 0
    for (int c : s.used_colors) f[c] = s.assign[c];
    return f;
}

bool existence_condition(const Palette& p1, const Palette& p2) {
    return !subpalette(p1, p2).has_value() && !subpalette(p1, reverse(p2)).has_value();
}

PositionSets left_top_right_sets(const Palette& p) {
    std::set<int> l, t, r;
    for (const auto& tr : p.triples) {
        l.insert(tr[0]);
        t.insert(tr[1]);
        r.insert(tr[2]);
    }
    return PositionSets{{l.begin(), l.end()}, {t.begin(), t.end()}, {r.begin(), r.end()}};
}

// --- named palettes -----------------------------------------------------------------

Palette palette_qr(int r) {
    if (r < 1) throw std::invalid_argument("Qr: r must be at least 1");
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                if (x != y) triples.push_back({x, y, z});
    return Palette::from_triples(r, std::move(triples));
}

Palette palette_q2r(int r) {
    if (r < 1) throw std::invalid_argument("Q2r: r must be at least 1");
    std::vector<std::array<int, 3>> triples;
    for (int x = 0; x < r; ++x)
        for (int y = 0; y < r; ++y)
            for (int z = 0; z < r; ++z)
                if (x != y && y != z) triples.push_back({x, y, z});
    return Palette::from_triples(r, std::move(triples));
}

Palette palette_qminus3() { return Palette::from_triples(3, {{0, 1, 2}}); }

Palette palette_qplus1_5() { return Palette::from_triples(5, {{0, 1, 2}, {3, 4, 0}}); }

Palette palette_qplus2_5() { return Palette::from_triples(5, {{0, 1, 2}, {3, 0, 4}}); }

Palette palette_qprime_minus3() {
    return Palette::from_triples(3, {{0, 2, 0}, {0, 2, 1}, {1, 2, 0}, {1, 2, 1}});
}

std::optional<Palette> named_palette(const std::string& name) {
    if (name == "Qminus3") return palette_qminus3();
    if (name == "Qplus1_5") return palette_qplus1_5();
    if (name == "Qplus2_5") return palette_qplus2_5();
    if (name == "QprimeMinus3") return palette_qprime_minus3();
    auto open = name.find('(');
    if (open != std::string::npos && name.back() == ')') {
        std::string head = name.substr(0, open);
        int arg;
        try {
            arg = std::stoi(name.substr(open + 1, name.size() - open - 2));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (head == "Qr") return palette_qr(arg);
        if (head == "Q2r") return palette_q2r(arg);
    }
    return std::nullopt;
}

// --- digraph-derived palettes ----------------------------------------------------------

int pair_color(int r, int a, int b) { return r + a * r + b; }

Palette side_palette(const Digraph& d, Side side) {
    if (d.loops_allowed())
        throw std::invalid_argument("side_palette: loop-permitting digraphs are not supported");
    int r = d.n();
    std::vector<std::array<int, 3>> triples;
    for (auto [a, b] : d.arcs()) {
        int c = pair_color(r, a, b);
        if (side == Side::left)
            triples.push_back({a, b, c});
        else
            triples.push_back({c, a, b});
    }
    Palette p = Palette::from_triples(r + r * r, std::move(triples));
    p.color_tags.resize(p.m);
    for (int v = 0; v < r; ++v) p.color_tags[v] = std::to_string(v);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            p.color_tags[pair_color(r, a, b)] =
                "c_{" + std::to_string(a) + "," + std::to_string(b) + "}";
    return p;
}

Palette union_palette_of(const Digraph& d, const Digraph& d_prime) {
    return palette_union(side_palette(d, Side::left), side_palette(d_prime, Side::right));
}

Digraph aux_digraph(const Palette& p, Side side) {
    Digraph g(p.m, /*allow_loops=*/true);
    for (const auto& t : p.triples) {
        if (side == Side::left)
            g.add_arc(t[0], t[1]);
        else
            g.add_arc(t[1], t[2]);
    }
    return g;
}

// --- palette isomorphism ------------------------------------------------------------------

namespace {

// match triples of p1 to triples of p2, growing a partial color bijection
bool iso_rec(const std::vector<std::array<int, 3>>& t1, const std::vector<std::array<int, 3>>& t2,
             std::size_t depth, std::vector<int>& fwd, std::vector<int>& bwd,
             std::vector<bool>& taken) {
    if (depth == t1.size()) return true;
    const auto& a = t1[depth];
    for (std::size_t j = 0; j < t2.size(); ++j) {
        if (taken[j]) continue;
        const auto& b = t2[j];
        std::vector<std::pair<int, int>> added;
        bool ok = true;
        for (int pos = 0; pos < 3 && ok; ++pos) {
            int x = a[pos], y = b[pos];
            if (fwd[x] == -1 && bwd[y] == -1) {
                fwd[x] = y;
                bwd[y] = x;
                added.emplace_back(x, y);
            } else if (fwd[x] != y) {
                ok = false;
            }
        }
        if (ok) {
            taken[j] = true;
            if (iso_rec(t1, t2, depth + 1, fwd, bwd, taken)) return true;
            taken[j] = false;
        }
        for (auto [x, y] : added) {
            fwd[x] = -1;
            bwd[y] = -1;
        }
    }
    return false;
}

}  // namespace

bool palette_isomorphic(const Palette& p1, const Palette& p2) {
    if (p1.m != p2.m || p1.triples.size() != p2.triples.size()) return false;
    std::vector<int> fwd(p1.m, -1), bwd(p2.m, -1);
    std::vector<bool> taken(p2.triples.size(), false);
    // used colors must biject; unused colors pad both sides equally since m matches
    std::set<int> used1, used2;
    for (const auto& t : p1.triples) used1.insert(t.begin(), t.end());
    for (const auto& t : p2.triples) used2.insert(t.begin(), t.end());
    if (used1.size() != used2.size()) return false;
    return iso_rec(p1.triples, p2.triples, 0, fwd, bwd, taken);
}

}  // namespace turan
