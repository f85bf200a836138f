#include "turan/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace turan {

namespace {

// dynamic bitset over palette colors
struct ColorSet {
    std::vector<std::uint64_t> words;

    explicit ColorSet(int m = 0, bool full = false) : words((m + 63) / 64, 0) {
        if (full) {
            for (int c = 0; c < m; ++c) set(c);
        }
    }
    void set(int c) { words[c >> 6] |= std::uint64_t{1} << (c & 63); }
    bool test(int c) const { return words[c >> 6] >> (c & 63) & 1; }
    void intersect(const ColorSet& o) {
        for (std::size_t i = 0; i < words.size(); ++i) words[i] &= o.words[i];
    }
    bool empty() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }
    template <typename Fn>
    bool for_each(Fn&& fn) const {  // ascending; fn returns false to stop
        for (std::size_t i = 0; i < words.size(); ++i) {
            std::uint64_t w = words[i];
            while (w) {
                int c = static_cast<int>(i * 64) + std::countr_zero(w);
                w &= w - 1;
                if (!fn(c)) return false;
            }
        }
        return true;
    }
};

// (left,top)->rights, (left,right)->tops, (top,right)->lefts
struct PaletteIndex {
    int m;
    std::vector<ColorSet> right_of, top_of, left_of;  // m*m each

    explicit PaletteIndex(const Palette& p) : m(p.m) {
        right_of.assign(static_cast<std::size_t>(m) * m, ColorSet(m));
        top_of.assign(static_cast<std::size_t>(m) * m, ColorSet(m));
        left_of.assign(static_cast<std::size_t>(m) * m, ColorSet(m));
        for (const auto& t : p.triples) {
            right_of[static_cast<std::size_t>(t[0]) * m + t[1]].set(t[2]);
            top_of[static_cast<std::size_t>(t[0]) * m + t[2]].set(t[1]);
            left_of[static_cast<std::size_t>(t[1]) * m + t[2]].set(t[0]);
        }
    }

    // allowed colors for slot `pos` of an edge whose other two slots hold a, b
    const ColorSet& complete(int pos, int a, int b) const {
        switch (pos) {
            case 0: return left_of[static_cast<std::size_t>(a) * m + b];   // a=top, b=right
            case 1: return top_of[static_cast<std::size_t>(a) * m + b];    // a=left, b=right
            default: return right_of[static_cast<std::size_t>(a) * m + b]; // a=left, b=top
        }
    }
};

struct FixedOrderSolver {
    int m;
    const PaletteIndex* index;
    std::vector<std::pair<int, int>> pairs;          // shadow pairs
    std::vector<std::array<int, 3>> edge_pairs;      // edge -> pair ids (left, top, right)
    std::vector<std::vector<std::pair<int, int>>> incident;  // pair -> (edge, slot)
    std::vector<int> color;                          // pair -> assigned color or -1
    std::uint64_t nodes = 0;

    // incident edges whose other two pairs are colored
    int constrained_count(int pid) const {
        int k = 0;
        for (auto [e, slot] : incident[pid]) {
            const auto& ep = edge_pairs[e];
            if (color[ep[(slot + 1) % 3]] >= 0 && color[ep[(slot + 2) % 3]] >= 0) ++k;
        }
        return k;
    }

    int pick_next() const {
        int best = -1, best_score = -1;
        for (std::size_t pid = 0; pid < pairs.size(); ++pid) {
            if (color[pid] >= 0) continue;
            int score = constrained_count(static_cast<int>(pid));
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(pid);
            }
        }
        return best;  // ties resolved by lexicographic pair via scan order
    }

    ColorSet candidates(int pid) const {
        ColorSet cands(m, true);
        for (auto [e, slot] : incident[pid]) {
            const auto& ep = edge_pairs[e];
            int a = color[ep[slot == 0 ? 1 : 0]];
            int b = color[ep[slot == 2 ? 1 : 2]];
            if (a >= 0 && b >= 0) cands.intersect(index->complete(slot, a, b));
        }
        return cands;
    }

    bool propagate_ok(int pid) const {
        for (auto [e, slot] : incident[pid]) {
            const auto& ep = edge_pairs[e];
            int open = -1, assigned = 0;
            for (int s = 0; s < 3; ++s) {
                if (color[ep[s]] >= 0)
                    ++assigned;
                else
                    open = ep[s];
            }
            if (assigned == 2 && candidates(open).empty()) return false;
        }
        return true;
    }

    bool solve() {
        int pid = pick_next();
        if (pid < 0) return true;
        ColorSet cands = candidates(pid);
        bool found = false;
        cands.for_each([&](int c) {
            ++nodes;
            color[pid] = c;
            if (propagate_ok(pid) && solve()) {
                found = true;
                return false;
            }
            color[pid] = -1;
            return true;
        });
        return found;
    }
};

FixedOrderSolver make_fixed_solver(const ThreeGraph& f, const PaletteIndex& index,
                                   const VertexOrder& order) {
    FixedOrderSolver s;
    s.m = index.m;
    s.index = &index;

    Shadow sh = shadow(f);
    s.pairs = sh.pairs;
    std::map<std::pair<int, int>, int> pair_id;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) pair_id[s.pairs[i]] = static_cast<int>(i);

    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

    auto pid_of = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return pair_id.at({a, b});
    };
    for (const Triple& e : f.edges()) {
        std::array<int, 3> v = e;
        std::sort(v.begin(), v.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        s.edge_pairs.push_back({pid_of(v[0], v[1]), pid_of(v[0], v[2]), pid_of(v[1], v[2])});
    }
    s.incident.assign(s.pairs.size(), {});
    for (std::size_t e = 0; e < s.edge_pairs.size(); ++e)
        for (int slot = 0; slot < 3; ++slot)
            s.incident[s.edge_pairs[e][slot]].emplace_back(static_cast<int>(e), slot);
    s.color.assign(s.pairs.size(), -1);
    return s;
}

void check_order(const ThreeGraph& f, const VertexOrder& order) {
    if (static_cast<int>(order.size()) != f.n())
        throw std::invalid_argument("vertex order: wrong length");
    std::vector<bool> seen(f.n(), false);
    for (int v : order) {
        if (v < 0 || v >= f.n() || seen[v])
            throw std::invalid_argument("vertex order: not a permutation of the vertices");
        seen[v] = true;
    }
}

void check_solver_bounds(const ThreeGraph& f, const SolverOptions& opts) {
    if (f.n() > opts.n_max)
        throw std::invalid_argument("colorable: n exceeds the solver bound of " +
                                    std::to_string(opts.n_max));
    std::size_t sh = shadow(f).pairs.size();
    if (sh > static_cast<std::size_t>(opts.shadow_max))
        throw std::invalid_argument("colorable: shadow exceeds the solver bound of " +
                                    std::to_string(opts.shadow_max) + " pairs");
}

std::vector<std::vector<int>> brute_automorphisms(const ThreeGraph& f) {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(f.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Triple& e : f.edges()) {
            if (!f.has_edge(perm[e[0]], perm[e[1]], perm[e[2]])) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool orbit_minimal(const VertexOrder& order, const std::vector<std::vector<int>>& auts) {
    for (const auto& a : auts) {
        VertexOrder mapped(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) mapped[i] = a[order[i]];
        if (mapped < order) return false;
    }
    return true;
}

}  // namespace

bool validate_witness(const ThreeGraph& f, const Palette& p, const ColoringWitness& w) {
    try {
        check_order(f, w.order);
    } catch (const std::invalid_argument&) {
        return false;
    }
    Shadow sh = shadow(f);
    for (const auto& pr : sh.pairs) {
        auto it = w.phi.find(pr);
        if (it == w.phi.end() || it->second < 0 || it->second >= p.m) return false;
    }
    std::vector<int> rank(f.n());
    for (std::size_t i = 0; i < w.order.size(); ++i) rank[w.order[i]] = static_cast<int>(i);
    auto phi = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return w.phi.at({a, b});
    };
    for (const Triple& e : f.edges()) {
        std::array<int, 3> v = e;
        std::sort(v.begin(), v.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        if (!p.admissible(phi(v[0], v[1]), phi(v[0], v[2]), phi(v[1], v[2]))) return false;
    }
    return true;
}

ColoringWitness apply_hom(const ColoringWitness& w, const PaletteHom& hom) {
    ColoringWitness out;
    out.order = w.order;
    for (const auto& [pr, c] : w.phi) out.phi[pr] = hom.at(c);
    return out;
}

std::optional<ShadowColoring> colorable_fixed_order(const ThreeGraph& f, const Palette& p,
                                                    const VertexOrder& order) {
    check_order(f, order);
    PaletteIndex index(p);
    FixedOrderSolver s = make_fixed_solver(f, index, order);
    if (!s.solve()) return std::nullopt;
    ShadowColoring phi;
    for (std::size_t i = 0; i < s.pairs.size(); ++i) phi[s.pairs[i]] = s.color[i];
    return phi;
}

namespace {

struct OrderBlockResult {
    std::optional<ColoringWitness> witness;
    std::uint64_t nodes = 0;
    std::uint64_t orders = 0;
};

OrderBlockResult search_order_block(const ThreeGraph& f, const PaletteIndex& index,
                                    VertexOrder order, std::uint64_t count,
                                    const std::vector<std::vector<int>>* auts,
                                    const std::atomic<bool>* stop) {
    OrderBlockResult res;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (stop && stop->load(std::memory_order_relaxed)) return res;
        if (!auts || orbit_minimal(order, *auts)) {
            FixedOrderSolver s = make_fixed_solver(f, index, order);
            bool ok = s.solve();
            res.nodes += s.nodes;
            ++res.orders;
            if (ok) {
                ColoringWitness w;
                w.order = order;
                for (std::size_t pid = 0; pid < s.pairs.size(); ++pid)
                    w.phi[s.pairs[pid]] = s.color[pid];
                res.witness = std::move(w);
                return res;
            }
        }
        if (!std::next_permutation(order.begin(), order.end())) break;
    }
    return res;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// permutation of 0..n-1 with the given lexicographic rank
VertexOrder unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 0);
    VertexOrder out;
    std::uint64_t fact = factorial(n);
    for (int i = n; i >= 1; --i) {
        fact /= i;
        std::size_t idx = static_cast<std::size_t>(rank / fact);
        rank %= fact;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + static_cast<long>(idx));
    }
    return out;
}

}  // namespace

ColorSearch colorable_search(const ThreeGraph& f, const Palette& p, const SolverOptions& opts) {
    check_solver_bounds(f, opts);
    ColorSearch result;
    PaletteIndex index(p);

    std::vector<std::vector<int>> auts;
    bool use_auts = opts.automorphism_prune && f.n() <= 8;
    if (use_auts) auts = brute_automorphisms(f);

    std::uint64_t total = factorial(std::max(f.n(), 1));
    int threads = std::max(1, opts.threads);
    if (threads == 1) {
        VertexOrder order(f.n());
        std::iota(order.begin(), order.end(), 0);
        OrderBlockResult r =
            search_order_block(f, index, order, total, use_auts ? &auts : nullptr, nullptr);
        result.nodes = r.nodes;
        result.orders_exhausted = r.orders;
        result.witness = std::move(r.witness);
    } else {
        std::atomic<bool> stop{false};
        std::mutex mu;
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t first = std::min<std::uint64_t>(total, t * chunk);
            std::uint64_t last = std::min<std::uint64_t>(total, first + chunk);
            if (first >= last) break;
            pool.emplace_back([&, first, last] {
                OrderBlockResult r =
                    search_order_block(f, index, unrank_permutation(f.n(), first), last - first,
                                       use_auts ? &auts : nullptr, &stop);
                std::lock_guard<std::mutex> lock(mu);
                result.nodes += r.nodes;
                result.orders_exhausted += r.orders;
                if (r.witness && !result.witness) {
                    result.witness = std::move(r.witness);
                    stop.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    if (result.witness && !validate_witness(f, p, *result.witness))
        throw std::logic_error("colorable: produced witness failed re-validation");
    return result;
}

std::optional<ColoringWitness> colorable(const ThreeGraph& f, const Palette& p,
                                         const SolverOptions& opts) {
    return colorable_search(f, p, opts).witness;
}

bool brute_oracle(const ThreeGraph& f, const Palette& p, const OracleBounds& bounds) {
    if (f.n() > bounds.n_max)
        throw std::invalid_argument("brute_oracle: n exceeds the oracle bound of " +
                                    std::to_string(bounds.n_max));
    Shadow sh = shadow(f);
    if (sh.pairs.size() > static_cast<std::size_t>(bounds.shadow_max))
        throw std::invalid_argument("brute_oracle: shadow exceeds the oracle bound of " +
                                    std::to_string(bounds.shadow_max) + " pairs");
    if (f.edges().empty()) return true;
    if (p.m == 0 || p.triples.empty()) return false;

    std::map<std::pair<int, int>, int> pair_slot;
    for (std::size_t i = 0; i < sh.pairs.size(); ++i) pair_slot[sh.pairs[i]] = static_cast<int>(i);

    VertexOrder order(f.n());
    std::iota(order.begin(), order.end(), 0);
    do {
        std::vector<int> rank(f.n());
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
        std::vector<int> phi(sh.pairs.size(), 0);
        while (true) {
            bool all_ok = true;
            for (const Triple& e : f.edges()) {
                std::array<int, 3> v = e;
                std::sort(v.begin(), v.end(), [&](int a, int b) { return rank[a] < rank[b]; });
                auto slot = [&](int a, int b) {
                    if (a > b) std::swap(a, b);
                    return pair_slot.at({a, b});
                };
                if (!p.admissible(phi[slot(v[0], v[1])], phi[slot(v[0], v[2])],
                                  phi[slot(v[1], v[2])])) {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) return true;
            std::size_t i = 0;  // odometer over colorings
            while (i < phi.size() && ++phi[i] == p.m) phi[i++] = 0;
            if (i == phi.size()) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool reverse_symmetry_check(const ThreeGraph& f, const Palette& p, const SolverOptions& opts) {
    bool straight = colorable(f, p, opts).has_value();
    bool reversed = colorable(f, reverse(p), opts).has_value();
    return straight == reversed;
}

}  // namespace turan
