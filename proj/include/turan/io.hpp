#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "turan/digraph.hpp"
#include "turan/palette.hpp"
#include "turan/solver.hpp"
#include "turan/threegraph.hpp"

namespace turan {

// input with a position: message already names the offending element
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Canonical text forms: a header line, then one sorted element per line.
//   digraph n=<n> [loops]   then  u v
//   3graph n=<n>            then  a b c
//   kgraph k=<k> n=<n>      then  v1 ... vk
//   palette m=<m>           then  x y z
// save(load(x)) is byte-identical on these forms.
std::string to_text(const Digraph& d);
std::string to_text(const ThreeGraph& f);
std::string to_text(const LinearKGraph& h);
std::string to_text(const Palette& p);

Digraph digraph_from_text(const std::string& text);
Tournament tournament_from_text(const std::string& text);
ThreeGraph threegraph_from_text(const std::string& text);
LinearKGraph kgraph_from_text(const std::string& text);
Palette palette_from_text(const std::string& text);

nlohmann::json digraph_to_json(const Digraph& d);
nlohmann::json threegraph_to_json(const ThreeGraph& f);
nlohmann::json kgraph_to_json(const LinearKGraph& h);
nlohmann::json palette_to_json(const Palette& p);
nlohmann::json witness_to_json(const ColoringWitness& w);

Digraph digraph_from_json(const nlohmann::json& j);
ThreeGraph threegraph_from_json(const nlohmann::json& j);
LinearKGraph kgraph_from_json(const nlohmann::json& j);
Palette palette_from_json(const nlohmann::json& j);
ColoringWitness witness_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Name expressions for the CLI: atoms joined by '+' are summed.
//   tstar:<r>  c3  bik:<r>  turan:<n>:<r>  empty:<n>
//   t4strong  t4dominant  t4dominated  d10[:kind]  dn:<n>
// Anything that is not a name is treated as a path (.json or text).
Digraph resolve_digraph(const std::string& name_or_path);
ThreeGraph resolve_threegraph(const std::string& name_or_path);

// Named palettes as listed for named_palette, plus QL:<digraph>, QR:<digraph>
// and QU:<digraph>,<digraph> for the digraph-derived ones.
Palette resolve_palette(const std::string& name_or_path);

}  // namespace turan
