#pragma once

#include <string>

#include "json.hpp"

#include "apath/development.hpp"
#include "apath/gallery.hpp"
#include "apath/groupoid.hpp"
#include "apath/homotopy.hpp"
#include "apath/period.hpp"
#include "apath/weinstein.hpp"

namespace apath {

// Stable field order everywhere: reports must be byte-identical for
// identical configs and seeds.
using Json = nlohmann::ordered_json;

Json report_to_json(const Report& rep);

// Algebroid spec document:
//   {"family": "lie_algebra"|"tangent"|"twisted_surface"|"custom",
//    "m": int, "n": int,
//    "structure": preset name or nested arrays c[k][i][j],
//    "omega": {"factors": k, "d": 2, "lambdas": [["p/q","r/s"], ...]},
//    "connection": "zero" | "random(seed)" | nested arrays}
struct ParsedAlgebroid {
    SpecPtr spec;
    ConnectionSpec connection;
    std::optional<TwistedSpec> twisted;  // set for the twisted family
};
ParsedAlgebroid parse_algebroid(const Json& j);

TwistedSpec parse_twisted(const Json& j);
Json twisted_to_json(const TwistedSpec& t);

Json path_to_json(const APath& p);
APath parse_path(const Json& j, SpecPtr spec);

Json sheet_to_json(const HomotopySheet& s);
HomotopySheet parse_sheet(const Json& j, SpecPtr spec);

Json matrix_to_json(const CMat& m);

// Groupoid document:
//   {"objects": [...], "arrows": [{"id","src","tgt"}...],
//    "mult": [["a","b","c"]...], "unit": {"x": "a", ...},
//    "inv": {"a": "b", ...}}
FiniteGroupoid parse_groupoid(const Json& j);
Json groupoid_to_json(const FiniteGroupoid& g);

// Homomorphism document: {"from": <groupoid|preset>, "to": <groupoid|preset>,
//  "obj": {"x":"y",...}, "arr": {"a":"b",...}}
GroupoidHom parse_hom(const Json& j, const FiniteGroupoid& from, const FiniteGroupoid& to);

// Bibundle document with explicit action tables:
//   {"total": ["e", ...], "jg": {"e": "x", ...}, "jh": {"e": "y", ...},
//    "left": [["g", "e", "e'"], ...], "right": [["e", "h", "e'"], ...]}
// Left triples read g.e = e', right triples e.h = e'; anything not listed is
// non-composable and the construction enumerates all the axioms.
Bibundle parse_bibundle(const Json& j, const FiniteGroupoid& g, const FiniteGroupoid& h);

// Named groupoid presets for the CLI.
FiniteGroupoid groupoid_preset(const std::string& name);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, bool pretty);

}  // namespace apath
