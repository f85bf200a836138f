#include "turan/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace turan {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
    return lines;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::vector<long long> out;
    std::stringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        }
    }
    return out;
}

// header like "digraph n=5 loops" or "kgraph k=4 n=9"
struct Header {
    std::string kind;
    std::map<std::string, long long> fields;
    bool loops = false;
};

Header parse_header(const std::string& line, const std::string& expect_kind) {
    Header h;
    std::stringstream ss(line);
    ss >> h.kind;
    if (h.kind != expect_kind)
        throw ParseError(1, "expected '" + expect_kind + "' header, got '" + h.kind + "'");
    std::string tok;
    while (ss >> tok) {
        if (tok == "loops") {
            h.loops = true;
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw ParseError(1, "bad header field '" + tok + "'");
        try {
            h.fields[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError(1, "bad header field '" + tok + "'");
        }
    }
    return h;
}

long long header_field(const Header& h, const std::string& name) {
    auto it = h.fields.find(name);
    if (it == h.fields.end()) throw ParseError(1, "missing header field '" + name + "='");
    return it->second;
}

}  // namespace

// --- text writers ------------------------------------------------------------

std::string to_text(const Digraph& d) {
    std::ostringstream out;
    out << "digraph n=" << d.n();
    if (d.loops_allowed()) out << " loops";
    out << "\n";
    for (auto [u, v] : d.arcs()) out << u << " " << v << "\n";
    return out.str();
}

std::string to_text(const ThreeGraph& f) {
    std::ostringstream out;
    out << "3graph n=" << f.n() << "\n";
    for (const Triple& e : f.edges()) out << e[0] << " " << e[1] << " " << e[2] << "\n";
    return out.str();
}

std::string to_text(const LinearKGraph& h) {
    std::ostringstream out;
    out << "kgraph k=" << h.k() << " n=" << h.n() << "\n";
    auto edges = h.edges();
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
    return out.str();
}

std::string to_text(const Palette& p) {
    std::ostringstream out;
    out << "palette m=" << p.m << "\n";
    for (const auto& t : p.triples) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
}

// --- text readers --------------------------------------------------------------

Digraph digraph_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    Header h = parse_header(lines[0], "digraph");
    long long n = header_field(h, "n");
    Digraph d(static_cast<int>(n), h.loops);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i], static_cast<int>(i + 1));
        if (vals.empty()) continue;
        if (vals.size() != 2)
            throw ParseError(static_cast<int>(i + 1), "expected 'u v', got " +
                                                          std::to_string(vals.size()) + " numbers");
        try {
            int before = d.arc_count();
            d.add_arc(static_cast<int>(vals[0]), static_cast<int>(vals[1]));
            if (d.arc_count() == before)
                throw std::invalid_argument("duplicate arc " + std::to_string(vals[0]) + " " +
                                            std::to_string(vals[1]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(static_cast<int>(i + 1), e.what());
        }
    }
    return d;
}

Tournament tournament_from_text(const std::string& text) {
    Digraph d = digraph_from_text(text);
    return Tournament(std::move(d));  // throws if some pair is unordered or doubled
}

ThreeGraph threegraph_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    Header h = parse_header(lines[0], "3graph");
    ThreeGraph f(static_cast<int>(header_field(h, "n")));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i], static_cast<int>(i + 1));
        if (vals.empty()) continue;
        if (vals.size() != 3)
            throw ParseError(static_cast<int>(i + 1), "expected 'a b c', got " +
                                                          std::to_string(vals.size()) + " numbers");
        try {
            f.add_edge(static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                       static_cast<int>(vals[2]));
        } catch (const std::invalid_argument& e) {
            throw ParseError(static_cast<int>(i + 1), e.what());
        }
    }
    return f;
}

LinearKGraph kgraph_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    Header h = parse_header(lines[0], "kgraph");
    LinearKGraph g(static_cast<int>(header_field(h, "k")),
                   static_cast<int>(header_field(h, "n")));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i], static_cast<int>(i + 1));
        if (vals.empty()) continue;
        try {
            g.add_edge(std::vector<int>(vals.begin(), vals.end()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(static_cast<int>(i + 1), e.what());
        }
    }
    return g;
}

Palette palette_from_text(const std::string& text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    Header h = parse_header(lines[0], "palette");
    int m = static_cast<int>(header_field(h, "m"));
    std::vector<std::array<int, 3>> triples;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto vals = parse_ints(lines[i], static_cast<int>(i + 1));
        if (vals.empty()) continue;
        if (vals.size() != 3)
            throw ParseError(static_cast<int>(i + 1), "expected 'x y z', got " +
                                                          std::to_string(vals.size()) + " numbers");
        triples.push_back({static_cast<int>(vals[0]), static_cast<int>(vals[1]),
                           static_cast<int>(vals[2])});
    }
    try {
        return Palette::from_triples(m, std::move(triples));
    } catch (const std::invalid_argument& e) {
        throw ParseError(2, e.what());
    }
}

// --- json ------------------------------------------------------------------------

nlohmann::json digraph_to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
    return {{"n", d.n()}, {"arcs", arcs}, {"loops", d.loops_allowed()}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
    Digraph d(j.at("n").get<int>(), j.value("loops", false));
    for (const auto& a : j.at("arcs")) d.add_arc(a.at(0).get<int>(), a.at(1).get<int>());
    return d;
}

nlohmann::json threegraph_to_json(const ThreeGraph& f) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Triple& e : f.edges()) edges.push_back({e[0], e[1], e[2]});
    return {{"n", f.n()}, {"edges", edges}};
}

ThreeGraph threegraph_from_json(const nlohmann::json& j) {
    ThreeGraph f(j.at("n").get<int>());
    for (const auto& e : j.at("edges"))
        f.add_edge(e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>());
    return f;
}

nlohmann::json kgraph_to_json(const LinearKGraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : h.edges()) edges.push_back(e);
    return {{"k", h.k()}, {"n", h.n()}, {"edges", edges}};
}

LinearKGraph kgraph_from_json(const nlohmann::json& j) {
    LinearKGraph h(j.at("k").get<int>(), j.at("n").get<int>());
    for (const auto& e : j.at("edges")) h.add_edge(e.get<std::vector<int>>());
    return h;
}

nlohmann::json palette_to_json(const Palette& p) {
    nlohmann::json triples = nlohmann::json::array();
    for (const auto& t : p.triples) triples.push_back({t[0], t[1], t[2]});
    nlohmann::json j = {{"m", p.m}, {"triples", triples}};
    if (!p.color_tags.empty()) j["tags"] = p.color_tags;
    return j;
}

Palette palette_from_json(const nlohmann::json& j) {
    std::vector<std::array<int, 3>> triples;
    for (const auto& t : j.at("triples"))
        triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    Palette p = Palette::from_triples(j.at("m").get<int>(), std::move(triples));
    if (j.contains("tags")) p.color_tags = j.at("tags").get<std::vector<std::string>>();
    return p;
}

nlohmann::json witness_to_json(const ColoringWitness& w) {
    nlohmann::json phi = nlohmann::json::object();
    for (const auto& [pr, c] : w.phi)
        phi[std::to_string(pr.first) + "," + std::to_string(pr.second)] = c;
    return {{"order", w.order}, {"phi", phi}};
}

ColoringWitness witness_from_json(const nlohmann::json& j) {
    ColoringWitness w;
    w.order = j.at("order").get<std::vector<int>>();
    for (auto it = j.at("phi").begin(); it != j.at("phi").end(); ++it) {
        auto comma = it.key().find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("witness: bad pair key '" + it.key() + "'");
        int u = std::stoi(it.key().substr(0, comma));
        int v = std::stoi(it.key().substr(comma + 1));
        w.phi[{u, v}] = it.value().get<int>();
    }
    return w;
}

// --- files and name resolution -------------------------------------------------------

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

namespace {

bool looks_like_json_path(const std::string& s) {
    return s.size() > 5 && s.substr(s.size() - 5) == ".json";
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) parts.push_back(tok);
    return parts;
}

std::optional<Digraph> named_digraph_atom(const std::string& name) {
    if (name == "c3") return directed_triangle();
    if (name == "t4strong") return tournament4_with_c3(C3Tournament4::strong);
    if (name == "t4dominant") return tournament4_with_c3(C3Tournament4::dominant);
    if (name == "t4dominated") return tournament4_with_c3(C3Tournament4::dominated);
    if (name == "d10") return d10_pattern();
    auto parts = split(name, ':');
    try {
        if (parts.size() == 2 && parts[0] == "tstar") return transitive_tournament(std::stoi(parts[1]));
        if (parts.size() == 2 && parts[0] == "bik") return complete_bidirected(std::stoi(parts[1]));
        if (parts.size() == 2 && parts[0] == "empty") return empty_digraph(std::stoi(parts[1]));
        if (parts.size() == 2 && parts[0] == "dn") return d10_family(std::stoi(parts[1]));
        if (parts.size() == 2 && parts[0] == "d10") {
            if (parts[1] == "strong") return d10_pattern(C3Tournament4::strong);
            if (parts[1] == "dominant") return d10_pattern(C3Tournament4::dominant);
            if (parts[1] == "dominated") return d10_pattern(C3Tournament4::dominated);
            return std::nullopt;
        }
        if (parts.size() == 3 && parts[0] == "turan")
            return bidirected_turan(std::stoi(parts[1]), std::stoi(parts[2]));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

Digraph resolve_digraph(const std::string& name_or_path) {
    auto atoms = split(name_or_path, '+');
    if (!atoms.empty()) {
        std::vector<Digraph> parts;
        bool all_named = true;
        for (const auto& a : atoms) {
            auto d = named_digraph_atom(a);
            if (!d) {
                all_named = false;
                break;
            }
            parts.push_back(std::move(*d));
        }
        if (all_named) {
            if (parts.size() == 1) return parts[0];
            return sum(std::span<const Digraph>(parts));
        }
    }
    std::string text = read_file(name_or_path);
    if (looks_like_json_path(name_or_path))
        return digraph_from_json(nlohmann::json::parse(text));
    return digraph_from_text(text);
}

ThreeGraph resolve_threegraph(const std::string& name_or_path) {
    if (auto f = named_threegraph(name_or_path)) return *f;
    std::string text = read_file(name_or_path);
    if (looks_like_json_path(name_or_path))
        return threegraph_from_json(nlohmann::json::parse(text));
    return threegraph_from_text(text);
}

Palette resolve_palette(const std::string& name_or_path) {
    if (auto p = named_palette(name_or_path)) return *p;
    if (name_or_path.rfind("QL:", 0) == 0)
        return side_palette(resolve_digraph(name_or_path.substr(3)), Side::left);
    if (name_or_path.rfind("QR:", 0) == 0)
        return side_palette(resolve_digraph(name_or_path.substr(3)), Side::right);
    if (name_or_path.rfind("QU:", 0) == 0) {
        auto parts = split(name_or_path.substr(3), ',');
        if (parts.size() != 2)
            throw std::invalid_argument("QU: expects two digraph names separated by a comma");
        return union_palette_of(resolve_digraph(parts[0]), resolve_digraph(parts[1]));
    }
    std::string text = read_file(name_or_path);
    if (looks_like_json_path(name_or_path))
        return palette_from_json(nlohmann::json::parse(text));
    return palette_from_text(text);
}

}  // namespace turan
