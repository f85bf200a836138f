#include "turan/threegraph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace turan {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}

std::string edge_str(const std::vector<int>& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s + "}";
}

}  // namespace

ThreeGraph::ThreeGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("3-graph: negative vertex count");
}

ThreeGraph ThreeGraph::from_edges(int n, const std::vector<Triple>& edges) {
    ThreeGraph f(n);
    for (const Triple& e : edges) f.add_edge(e[0], e[1], e[2]);
    return f;
}

void ThreeGraph::add_edge(int a, int b, int c) {
    Triple e{a, b, c};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2])
        throw std::invalid_argument("3-graph: edge {" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) +
                                    "} has repeated vertices");
    for (int v : e) check_vertex(v, n_, "3-graph");
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool ThreeGraph::has_edge(int a, int b, int c) const {
    Triple e{a, b, c};
    std::sort(e.begin(), e.end());
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool Shadow::covers(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(u, v));
}

Shadow shadow(const ThreeGraph& f) {
    std::set<std::pair<int, int>> ps;
    for (const Triple& e : f.edges()) {
        ps.emplace(e[0], e[1]);
        ps.emplace(e[0], e[2]);
        ps.emplace(e[1], e[2]);
    }
    return Shadow{{ps.begin(), ps.end()}};
}

ThreeGraph complete_threegraph(int m) {
    ThreeGraph f(m);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) f.add_edge(a, b, c);
    return f;
}

ThreeGraph k4_minus() {
    return ThreeGraph::from_edges(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
}

ThreeGraph f5_star() {
    // new vertex 4 whose link is the matching {0,1},{2,3}
    return ThreeGraph::from_edges(5, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {0, 1, 4}, {2, 3, 4}});
}

ThreeGraph tight_cycle(int length) {
    if (length < 4)
        throw std::invalid_argument("tight_cycle: length must be at least 4");
    ThreeGraph f(length);
    for (int i = 0; i < length; ++i)
        f.add_edge(i, (i + 1) % length, (i + 2) % length);
    return f;
}

std::optional<ThreeGraph> named_threegraph(const std::string& name) {
    if (name == "k4minus") return k4_minus();
    if (name == "f5star") return f5_star();
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        std::string head = name.substr(0, colon);
        int arg;
        try {
            arg = std::stoi(name.substr(colon + 1));
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (head == "complete") return complete_threegraph(arg);
        if (head == "cycle") return tight_cycle(arg);
    }
    return std::nullopt;
}

// --- linear k-graphs -------------------------------------------------------------

LinearKGraph::LinearKGraph(int k, int n) : k_(k), n_(n) {
    if (k < 3) throw std::invalid_argument("k-graph: uniformity must be at least 3");
    if (n < 0) throw std::invalid_argument("k-graph: negative vertex count");
}

LinearKGraph LinearKGraph::from_edges(int k, int n, const std::vector<std::vector<int>>& edges) {
    LinearKGraph h(k, n);
    for (const auto& e : edges) h.add_edge(e);
    return h;
}

void LinearKGraph::add_edge(std::vector<int> edge) {
    std::sort(edge.begin(), edge.end());
    if (static_cast<int>(edge.size()) != k_ ||
        std::adjacent_find(edge.begin(), edge.end()) != edge.end())
        throw std::invalid_argument("k-graph: edge " + edge_str(edge) + " is not a " +
                                    std::to_string(k_) + "-set");
    for (int v : edge) check_vertex(v, n_, "k-graph");
    for (const auto& other : edges_) {
        std::vector<int> common;
        std::set_intersection(edge.begin(), edge.end(), other.begin(), other.end(),
                              std::back_inserter(common));
        if (common.size() >= 2)
            throw std::invalid_argument("k-graph: edges " + edge_str(other) + " and " +
                                        edge_str(edge) + " share " +
                                        std::to_string(common.size()) +
                                        " vertices, violating linearity");
        if (common.size() == edge.size()) return;  // duplicate (k >= 3 implies caught above)
    }
    edges_.push_back(std::move(edge));
}

ThreeGraph construct_from_linear(const LinearKGraph& h, ExpansionScheme scheme) {
    int k = h.k();
    switch (scheme) {
        case ExpansionScheme::FH:
            if (k < 4)
                throw std::invalid_argument("FH scheme needs uniformity k = r+1 >= 4, got k=" +
                                            std::to_string(k));
            break;
        case ExpansionScheme::F4:
            if (k != 4)
                throw std::invalid_argument("F4 scheme needs uniformity 4, got k=" +
                                            std::to_string(k));
            break;
        case ExpansionScheme::F7:
            if (k != 7)
                throw std::invalid_argument("F7 scheme needs uniformity 7, got k=" +
                                            std::to_string(k));
            break;
    }
    ThreeGraph f(h.n());
    for (const auto& e : h.edges()) {
        switch (scheme) {
            case ExpansionScheme::FH: {
                int r = k - 1;
                for (int i = 1; i <= r; ++i)
                    for (int j = i + 1; j <= r; ++j) f.add_edge(e[0], e[i], e[j]);
                break;
            }
            case ExpansionScheme::F4:
                f.add_edge(e[0], e[1], e[2]);
                f.add_edge(e[0], e[2], e[3]);
                break;
            case ExpansionScheme::F7:
                f.add_edge(e[0], e[1], e[3]);
                f.add_edge(e[1], e[2], e[3]);
                f.add_edge(e[0], e[2], e[3]);
                f.add_edge(e[3], e[4], e[5]);
                f.add_edge(e[3], e[4], e[6]);
                f.add_edge(e[3], e[5], e[6]);
                break;
        }
    }
    return f;
}

// --- monotone-edge property --------------------------------------------------------

namespace {

struct MonotoneSearch {
    const LinearKGraph* h;
    int n;
    std::vector<int> sigma;       // vertex -> rank, -1 while unplaced
    std::vector<bool> rank_used;
    std::uint64_t nodes = 0;

    // -1 unknown (some vertex unplaced), 0 decided non-monotone, 1 monotone
    int edge_status(const std::vector<int>& e) const {
        bool inc = true, dec = true;
        int prev = -1;
        bool complete = true;
        for (int v : e) {
            int s = sigma[v];
            if (s < 0) { complete = false; continue; }
            if (prev >= 0) {
                inc = inc && prev < s;
                dec = dec && prev > s;
            }
            prev = s;
        }
        if (!inc && !dec) return 0;
        return complete ? 1 : -1;
    }

    // places vertices 0..n-1 in index order, ranks in ascending order per level,
    // so complete permutations appear lexicographically
    bool find_counterexample(int vertex) {
        ++nodes;
        if (vertex == n) return true;  // no edge went monotone along the way
        for (int rank = 0; rank < n; ++rank) {
            if (rank_used[rank]) continue;
            sigma[vertex] = rank;
            rank_used[rank] = true;
            bool pruned = false;
            for (const auto& e : h->edges()) {
                if (std::find(e.begin(), e.end(), vertex) == e.end()) continue;
                if (edge_status(e) == 1) { pruned = true; break; }
            }
            if (!pruned && find_counterexample(vertex + 1)) return true;
            rank_used[rank] = false;
            sigma[vertex] = -1;
        }
        return false;
    }
};

}  // namespace

MonotoneResult monotone_edge_property(const LinearKGraph& h, int n_max) {
    if (h.n() > n_max)
        throw std::invalid_argument("monotone_edge_property: n exceeds the search bound of " +
                                    std::to_string(n_max));
    MonotoneSearch s;
    s.h = &h;
    s.n = h.n();
    s.sigma.assign(s.n, -1);
    s.rank_used.assign(s.n, false);
    MonotoneResult res;
    if (s.find_counterexample(0)) {
        res.holds = false;
        res.counterexample = s.sigma;
    } else {
        res.holds = true;
    }
    res.nodes = s.nodes;
    return res;
}

std::optional<LinearKGraph> search_monotone_witness(int k, int n_max, std::uint64_t budget,
                                                    std::uint64_t seed) {
    if (k < 3) throw std::invalid_argument("search_monotone_witness: k must be at least 3");
    if (n_max < k) return std::nullopt;
    std::mt19937_64 rng(seed);
    std::uint64_t spent = 0;
    while (spent < budget) {
        for (int n = k; n <= n_max && spent < budget; ++n) {
            // random maximal linear k-graph: shuffle all k-subsets, add greedily
            std::vector<std::vector<int>> candidates;
            std::vector<int> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                candidates.push_back(pick);
                int i = k - 1;
                while (i >= 0 && pick[i] == n - k + i) --i;
                if (i < 0) break;
                ++pick[i];
                for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            }
            std::shuffle(candidates.begin(), candidates.end(), rng);
            LinearKGraph h(k, n);
            for (const auto& e : candidates) {
                try {
                    h.add_edge(e);
                } catch (const std::invalid_argument&) {
                    // intersects an accepted edge in >= 2 vertices; skip
                }
            }
            if (n > kMonotoneDefaultMax) { spent += 1; continue; }
            MonotoneResult r = monotone_edge_property(h);
            spent += std::max<std::uint64_t>(r.nodes, 1);
            if (r.holds) return h;
        }
    }
    return std::nullopt;
}

// --- brute-force isomorphism ---------------------------------------------------------

std::string threegraph_canonical_key(const ThreeGraph& f, int n_max) {
    if (f.n() > n_max)
        throw std::invalid_argument("threegraph_canonical_key: n exceeds the brute-force bound of " +
                                    std::to_string(n_max));
    int n = f.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::vector<Triple> mapped;
        mapped.reserve(f.edge_count());
        for (const Triple& e : f.edges()) {
            Triple t{perm[e[0]], perm[e[1]], perm[e[2]]};
            std::sort(t.begin(), t.end());
            mapped.push_back(t);
        }
        std::sort(mapped.begin(), mapped.end());
        std::string enc;
        enc.push_back(static_cast<char>(n));
        for (const Triple& t : mapped)
            for (int v : t) enc.push_back(static_cast<char>(v));
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) {
        best.push_back(static_cast<char>(n));
    }
    return best;
}

std::vector<ThreeGraph> all_threegraphs_upto_iso(int n_max) {
    std::vector<ThreeGraph> out;
    std::set<std::string> seen;
    for (int n = 0; n <= n_max; ++n) {
        std::vector<Triple> all;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
        if (all.size() > 20)
            throw std::invalid_argument("all_threegraphs_upto_iso: too many labeled edge sets");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
            ThreeGraph f(n);
            for (std::size_t i = 0; i < all.size(); ++i)
                if (mask >> i & 1) f.add_edge(all[i][0], all[i][1], all[i][2]);
            if (seen.insert(threegraph_canonical_key(f)).second) out.push_back(f);
        }
    }
    return out;
}

}  // namespace turan
