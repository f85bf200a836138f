#include "turan/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace turan {

// --- cache -------------------------------------------------------------------

std::optional<ExCache::Entry> ExCache::lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ExCache::store(const std::string& key, Entry entry) {
    std::lock_guard<std::mutex> lock(mu_);
    entries_[key] = std::move(entry);
}

void ExCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json j;
    in >> j;
    std::lock_guard<std::mutex> lock(mu_);
    for (auto it = j.begin(); it != j.end(); ++it) {
        Entry e;
        e.value = it.value().at("value").get<long long>();
        e.nodes = it.value().value("nodes", std::uint64_t{0});
        for (const auto& k : it.value().value("witness_keys", nlohmann::json::array()))
            e.witness_keys.push_back(k.get<std::string>());
        entries_[it.key()] = std::move(e);
    }
}

void ExCache::save_file(const std::string& path) const {
    nlohmann::json j = nlohmann::json::object();
    {
        std::lock_guard<std::mutex> lock(mu_);
        for (const auto& [key, e] : entries_) {
            j[key] = {{"value", e.value}, {"nodes", e.nodes}, {"witness_keys", e.witness_keys}};
        }
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string ExCache::make_key(const CanonicalKey& pattern_key, int n) {
    return pattern_key.hex() + ":" + std::to_string(n);
}

// --- branch and bound ----------------------------------------------------------

namespace {

struct PairState {
    int u, v;
};

struct SearchShared {
    const Digraph* pattern;
    int n;
    int witness_cap;
    std::atomic<long long> best{-1};
    std::mutex witness_mu;
    std::map<CanonicalKey, Digraph> witnesses;
    std::atomic<std::uint64_t> nodes{0};
};

struct SearchWorker {
    SearchShared* shared;
    std::vector<PairState> pairs;
    Digraph current;
    std::uint64_t nodes = 0;

    // state order: both, forward, backward, none (dense first)
    static constexpr int kStates[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};

    void apply(const PairState& p, int s) {
        if (kStates[s][0]) current.add_arc(p.u, p.v);
        if (kStates[s][1]) current.add_arc(p.v, p.u);
    }
    void undo(const PairState& p, int s) {
        if (kStates[s][0]) current.remove_arc(p.u, p.v);
        if (kStates[s][1]) current.remove_arc(p.v, p.u);
    }

    void record_leaf() {
        long long arcs = current.arc_count();
        long long best = shared->best.load(std::memory_order_relaxed);
        if (arcs < best) return;
        std::lock_guard<std::mutex> lock(shared->witness_mu);
        best = shared->best.load(std::memory_order_relaxed);
        if (arcs < best) return;
        if (arcs > best) {
            shared->best.store(arcs, std::memory_order_relaxed);
            shared->witnesses.clear();
        }
        if (static_cast<int>(shared->witnesses.size()) < shared->witness_cap) {
            CanonicalKey key = canonical_key(current, std::max(current.n(), kCanonicalDefaultMax));
            shared->witnesses.emplace(std::move(key), current);
        }
    }

    // pattern among decided arcs persists to every completion, so prune; the
    // check runs when the pairs inside {0..v} are complete, and the leaf
    // check (v = n-1) covers the final digraph
    bool prefix_blocked(int depth) const {
        const PairState& p = pairs[depth];
        if (p.u != p.v - 1) return false;
        if (shared->pattern->n() > p.v + 1) return false;
        return contains(current, *shared->pattern);
    }

    void run(std::size_t depth) {
        if (depth == pairs.size()) {
            record_leaf();
            return;
        }
        long long remaining = 2 * static_cast<long long>(pairs.size() - depth);
        for (int s = 0; s < 4; ++s) {
            ++nodes;
            apply(pairs[depth], s);
            long long optimistic = current.arc_count() + remaining - 2;
            // strict: assignments tying the incumbent still yield witnesses
            if (optimistic >= shared->best.load(std::memory_order_relaxed) &&
                !prefix_blocked(static_cast<int>(depth)))
                run(depth + 1);
            undo(pairs[depth], s);
        }
    }
};

std::vector<PairState> lex_pairs(int n) {
    std::vector<PairState> ps;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) ps.push_back({u, v});
    return ps;
}

}  // namespace

ExtremalResult ex_exact(const Digraph& pattern, int n, const ExOptions& opts) {
    if (pattern.loops_allowed())
        throw std::invalid_argument("ex_exact: loop-permitting patterns are not supported");
    if (pattern.arc_count() == 0 && pattern.n() <= n)
        throw std::invalid_argument(
            "ex_exact: a pattern with no arcs embeds in every digraph; no free digraph exists");
    int bound = pattern.n() <= 4 ? opts.n_small_pattern_max : opts.n_general_max;
    if (n < 0 || n > bound)
        throw std::invalid_argument("ex_exact: n=" + std::to_string(n) +
                                    " exceeds the feasibility bound of " + std::to_string(bound));

    CanonicalKey pattern_key = canonical_key(pattern, std::max(pattern.n(), kCanonicalDefaultMax));
    std::string cache_key = ExCache::make_key(pattern_key, n);
    if (opts.cache) {
        if (auto hit = opts.cache->lookup(cache_key)) {
            ExtremalResult r;
            r.value = hit->value;
            r.nodes = hit->nodes;
            for (const auto& hex : hit->witness_keys) {
                CanonicalKey k;
                for (std::size_t i = 0; i + 1 < hex.size(); i += 2)
                    k.bytes.push_back(
                        static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
                r.witness_keys.push_back(std::move(k));
            }
            r.exhaustive = true;
            r.from_cache = true;
            return r;
        }
    }

    SearchShared shared;
    shared.pattern = &pattern;
    shared.n = n;
    shared.witness_cap = opts.witness_cap;

    std::vector<PairState> pairs = lex_pairs(n);
    int threads = std::max(1, opts.threads);
    if (threads == 1 || pairs.size() <= static_cast<std::size_t>(opts.frontier_depth)) {
        SearchWorker w;
        w.shared = &shared;
        w.pairs = pairs;
        w.current = Digraph(n);
        w.run(0);
        shared.nodes += w.nodes;
    } else {
        // fix the first frontier_depth pairs, farm out the subtrees
        int fd = opts.frontier_depth;
        std::uint64_t tasks = std::uint64_t{1} << (2 * fd);
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                SearchWorker w;
                w.shared = &shared;
                w.pairs = pairs;
                for (std::uint64_t task = next.fetch_add(1); task < tasks;
                     task = next.fetch_add(1)) {
                    w.current = Digraph(n);
                    bool blocked = false;
                    for (int d = 0; d < fd; ++d) {
                        int s = static_cast<int>(task >> (2 * d) & 3);
                        w.apply(pairs[d], s);
                        if (w.prefix_blocked(d)) {
                            blocked = true;
                            break;
                        }
                    }
                    if (!blocked) w.run(static_cast<std::size_t>(fd));
                }
                shared.nodes += w.nodes;
            });
        }
        for (auto& th : pool) th.join();
    }

    ExtremalResult result;
    result.value = std::max<long long>(0, shared.best.load());
    result.nodes = shared.nodes.load();
    result.exhaustive = true;
    for (auto& [key, d] : shared.witnesses) {
        result.witness_keys.push_back(key);
        result.witnesses.push_back(d);
    }
    if (opts.cache) {
        ExCache::Entry e;
        e.value = result.value;
        e.nodes = result.nodes;
        for (const auto& k : result.witness_keys) e.witness_keys.push_back(k.hex());
        opts.cache->store(cache_key, std::move(e));
    }
    return result;
}

RGoodReport is_r_good_upto(const Digraph& d, int n_max, const ExOptions& opts) {
    int r = d.n();
    if (r < 2) throw std::invalid_argument("is_r_good_upto: digraph needs at least 2 vertices");
    RGoodReport report;
    report.good = true;
    for (int n = r; n <= n_max; ++n) {
        long long ex_value = ex_exact(d, n, opts).value;
        long long f_value = turan_numbers(n, r).f;
        report.rows.push_back({n, ex_value, f_value});
        if (ex_value != f_value) report.good = false;
    }
    return report;
}

MaxGamma2 max_gamma2(const Digraph& forbidden_tournament, int n, const EnumLimits& limits) {
    Tournament forbidden(forbidden_tournament);  // validates
    MaxGamma2 best;
    best.value = -1;
    enumerate(n, EnumKind::digraphs, false, [&](const Digraph& d) {
        ++best.digraphs_scanned;
        if (contains(d, forbidden.digraph())) return true;
        long long g = gamma2(d).value;
        if (g > best.value) {
            best.value = g;
            best.witness = d;
        }
        return true;
    }, limits);
    if (best.value < 0) throw std::logic_error("max_gamma2: empty enumeration");
    return best;
}

MaxGamma2 max_gamma2(int r, int n, const EnumLimits& limits) {
    return max_gamma2(transitive_tournament(r), n, limits);
}

bool verify_lower_bound(const Digraph& t1, const Digraph& t2, const Digraph& t3, int n,
                        const LowerBoundOptions& opts) {
    for (const Digraph* t : {&t1, &t2, &t3})
        if (t->n() > 0 && !is_tournament(*t))
            throw std::invalid_argument("verify_lower_bound: parts must be tournaments");
    int r = t1.n() + t2.n() + t3.n();
    if (r < 2) throw std::invalid_argument("verify_lower_bound: r must be at least 2");
    if (n > r + opts.slack)
        throw std::invalid_argument("verify_lower_bound: n=" + std::to_string(n) +
                                    " exceeds the feasibility bound of r+" +
                                    std::to_string(opts.slack));
    Digraph pattern = sum(sum(t1, t2), t3);
    Digraph host = bidirected_turan(n, r);
    if (host.arc_count() != turan_numbers(n, r).f) return false;
    return !contains(host, pattern);
}

bool verify_lower_bound(int r1, int r2, int r3, int n, const LowerBoundOptions& opts) {
    if (r1 < 0 || r2 < 0 || r3 < 0)
        throw std::invalid_argument("verify_lower_bound: negative part size");
    return verify_lower_bound(transitive_tournament(r1), transitive_tournament(r2),
                              transitive_tournament(r3), n, opts);
}

namespace {

Rational d10_bound_floor(long long n) {
    // n(n-1) - 5 C((n+4)/5, 2), with (n+4)/5 taken exactly
    Rational x(n + 4, 5);
    Rational c2 = x * (x - Rational(1)) / Rational(2);
    return Rational(n * (n - 1)) - Rational(5) * c2;
}

Rational d10_quadratic(long long n) {
    return Rational(9 * n * n, 10) - Rational(3 * n, 2);
}

Rational d10_eight_ninths(long long n) { return Rational(8 * n * n, 9); }

int first_n_where(bool (*link)(long long), int cap = 100000) {
    for (int n = 1; n <= cap; ++n)
        if (link(n)) return n;
    return -1;
}

}  // namespace

D10Report d10_remark_check(int n, const D10Options& opts) {
    if (n < 10) throw std::invalid_argument("d10_remark_check: n must be at least 10");
    D10Report rep;
    rep.n = n;
    rep.arcs = d10_family_arc_count(n);
    rep.f_n_10 = turan_numbers(n, 10).f;
    rep.bound_floor = d10_bound_floor(n);
    rep.quadratic = d10_quadratic(n);
    rep.eight_ninths = d10_eight_ninths(n);

    rep.link_construction = Rational(rep.arcs) > rep.bound_floor;
    rep.link_quadratic = rep.bound_floor >= rep.quadratic;
    rep.link_middle = rep.quadratic > rep.eight_ninths;
    rep.link_turan = rep.eight_ninths >= Rational(rep.f_n_10);
    rep.link_middle_first_n =
        first_n_where([](long long k) { return d10_quadratic(k) > d10_eight_ninths(k); });
    rep.headline = rep.arcs > rep.f_n_10;
    for (int k = 10; k <= 100000; ++k)
        if (d10_family_arc_count(k) > turan_numbers(k, 10).f) {
            rep.headline_first_n = k;
            break;
        }

    if (n <= opts.freeness_max) {
        rep.freeness_checked = true;
        rep.d10_free = !contains(d10_family(n), d10_pattern(opts.t4_kind));
    }
    rep.ok = rep.headline && (!rep.freeness_checked || rep.d10_free);
    return rep;
}

}  // namespace turan
