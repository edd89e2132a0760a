#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hk/modules.hpp"

namespace hk {

using json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Weyl words are written with 1-based letters; the identity is [].
json word_to_json(const RootDatum& d, WeylElt w);
WeylElt weyl_from_json(const RootDatum& d, const json& j, const std::string& field);
/// "e" or "s2s1"
std::string word_key(const RootDatum& d, WeylElt w);

json datum_to_json(const RootDatum& d);
RootDatumPtr datum_from_json(const json& j);
/// A preset expression, a JSON file path, or inline JSON.
RootDatumPtr load_datum(const std::string& spec);

json levi_to_json(const LeviSet& l);
LeviSet levi_from_json(const RootDatum& d, const json& j, const std::string& field);
/// "1,2" (1-based), "all", "" or "none".
LeviSet parse_levi(const RootDatum& d, const std::string& text);

json coweight_to_json(const Coweight& mu);
Coweight coweight_from_json(const RootDatum& d, const json& j, const std::string& field);

json ext_to_json(const RootDatum& d, const ExtElt& x);
ExtElt ext_from_json(const RootDatum& d, const json& j);

/// [[exponent, "num/den"], ...], highest exponent first.
json laurent_to_json(const Laurent& c);
/// Also accepts an integer or an expression string such as "v^2 - 1".
Laurent laurent_from_json(const json& j, const std::string& field);

json element_to_json(const HeckeElt& h);
/// Checks the "datum" field (if present) against alg's datum name.
HeckeElt element_from_json(const HeckePtr& alg, const json& j);

json kvalue_to_json(const RationalFunction& x);
RationalFunction kvalue_from_json(const json& j, const std::string& field);
json matrix_to_json(const KMatrix& m);
KMatrix matrix_from_json(const json& j, const std::string& field);

json module_to_json(const HModule& v);
HModule module_from_json(const HeckePtr& alg, const json& j);
json module_map_to_json(const ModuleMap& m);

/// Comma-separated basis values, e.g. "2,3*v,1/2".
UnramifiedCharacter parse_character(const RootDatum& d, const std::string& text);
json character_to_json(const UnramifiedCharacter& chi);

/// Parses a JSON document, reporting syntax errors as InputError.
json parse_json_text(const std::string& text, const std::string& source);

}  // namespace hk
