#include "hk/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hk {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::vector<int> int_list(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(field, "expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Weyl words, Levis, lattice vectors

json word_to_json(const RootDatum& d, WeylElt w) {
  json a = json::array();
  for (int i : d.reduced_word(w)) a.push_back(i + 1);
  return a;
}

WeylElt weyl_from_json(const RootDatum& d, const json& j, const std::string& field) {
  std::vector<int> word = int_list(j, field);
  for (int& i : word) {
    if (i < 1 || i > d.num_simple()) bad(field, "letter " + std::to_string(i) + " out of range");
    --i;
  }
  return d.from_word(word);
}

std::string word_key(const RootDatum& d, WeylElt w) {
  const auto& word = d.reduced_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

json levi_to_json(const LeviSet& l) {
  json a = json::array();
  for (int i : l.indices()) a.push_back(i + 1);
  return json{{"levi", a}};
}

LeviSet levi_from_json(const RootDatum& d, const json& j, const std::string& field) {
  std::vector<int> idx = int_list(j, field);
  for (int& i : idx) {
    if (i < 1 || i > d.num_simple()) bad(field, "index " + std::to_string(i) + " out of range");
    --i;
  }
  return LeviSet(idx);
}

LeviSet parse_levi(const RootDatum& d, const std::string& text) {
  if (text == "all" || text == "full") return d.full_levi();
  if (text.empty() || text == "none" || text == "{}") return LeviSet{};
  std::vector<int> idx;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int i = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      if (i < 1 || i > d.num_simple()) bad("--levi", "index " + item + " out of range");
      idx.push_back(i - 1);
    } catch (const std::logic_error&) {
      bad("--levi", "cannot parse '" + item + "'");
    }
  }
  return LeviSet(idx);
}

json coweight_to_json(const Coweight& mu) { return json(mu.to_vector()); }

Coweight coweight_from_json(const RootDatum& d, const json& j, const std::string& field) {
  std::vector<int> v = int_list(j, field);
  if (v.size() != static_cast<std::size_t>(d.rank()))
    bad(field, "expected " + std::to_string(d.rank()) + " coordinates, got " + std::to_string(v.size()));
  return Coweight(v);
}

json ext_to_json(const RootDatum& d, const ExtElt& x) {
  return json{{"mu", coweight_to_json(x.mu)}, {"w", word_to_json(d, x.w)}};
}

ExtElt ext_from_json(const RootDatum& d, const json& j) {
  return ExtElt{coweight_from_json(d, require(j, "mu", ""), "mu"), weyl_from_json(d, require(j, "w", ""), "w")};
}

// ---------------------------------------------------------------------------
// root data

json datum_to_json(const RootDatum& d) {
  json roots = json::array(), coroots = json::array();
  for (const auto& a : d.simple_roots()) roots.push_back(a.to_vector());
  for (const auto& a : d.simple_coroots()) coroots.push_back(a.to_vector());
  return json{{"name", d.name()}, {"rank", d.rank()}, {"simple_roots", roots}, {"simple_coroots", coroots}};
}

RootDatumPtr datum_from_json(const json& j) {
  const json& name = require(j, "name", "");
  if (!name.is_string()) bad("name", "expected a string");
  const json& rank = require(j, "rank", "");
  if (!rank.is_number_integer() || rank.get<int>() < 0) bad("rank", "expected a natural number");
  const int r = rank.get<int>();
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;
  const json& jr = require(j, "simple_roots", "");
  const json& jc = require(j, "simple_coroots", "");
  if (!jr.is_array()) bad("simple_roots", "expected an array");
  if (!jc.is_array()) bad("simple_coroots", "expected an array");
  for (std::size_t k = 0; k < jr.size(); ++k) {
    auto v = int_list(jr[k], "simple_roots[" + std::to_string(k) + "]");
    if (v.size() != static_cast<std::size_t>(r)) bad("simple_roots[" + std::to_string(k) + "]", "wrong length");
    roots.emplace_back(v);
  }
  for (std::size_t k = 0; k < jc.size(); ++k) {
    auto v = int_list(jc[k], "simple_coroots[" + std::to_string(k) + "]");
    if (v.size() != static_cast<std::size_t>(r)) bad("simple_coroots[" + std::to_string(k) + "]", "wrong length");
    coroots.emplace_back(v);
  }
  try {
    return RootDatum::create(name.get<std::string>(), r, std::move(roots), std::move(coroots));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("datum: ") + e.what());
  }
}

RootDatumPtr load_datum(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return datum_from_json(parse_json_text(spec, "--datum"));
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot open datum file " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return datum_from_json(parse_json_text(ss.str(), spec));
  }
  try {
    return RootDatum::preset(spec);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--datum: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// coefficients and elements

json laurent_to_json(const Laurent& c) {
  json a = json::array();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) a.push_back(json::array({it->first, it->second.str()}));
  return a;
}

Laurent laurent_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Laurent(j.get<std::int64_t>());
  if (j.is_string()) {
    RationalFunction f;
    try {
      f = RationalFunction::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      bad(field, e.what());
    }
    if (!f.is_laurent()) bad(field, "not a Laurent polynomial");
    return f.numerator();
  }
  if (!j.is_array()) bad(field, "expected [[exponent, \"num/den\"], ...]");
  std::vector<Laurent::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) bad(field, "expected [exponent, \"num/den\"] pairs");
    Rational c;
    if (t[1].is_number_integer()) {
      c = Rational(t[1].get<std::int64_t>());
    } else if (t[1].is_string()) {
      try {
        c = Rational::parse(t[1].get<std::string>());
      } catch (const std::exception& e) {
        bad(field, e.what());
      }
    } else {
      bad(field, "coefficient must be a string or integer");
    }
    terms.emplace_back(t[0].get<int>(), c);
  }
  return Laurent::from_terms(std::move(terms));
}

json element_to_json(const HeckeElt& h) {
  const RootDatum& d = h.rd();
  json terms = json::array();
  for (const auto& t : h.terms())
    terms.push_back(json{{"mu", coweight_to_json(t.mu)}, {"w", word_to_json(d, t.w)}, {"coeff", laurent_to_json(t.coeff)}});
  return json{{"datum", d.name()}, {"terms", terms}};
}

HeckeElt element_from_json(const HeckePtr& alg, const json& j) {
  const RootDatum& d = alg->rd();
  if (!j.is_object()) bad("element", "expected an object");
  if (auto it = j.find("datum"); it != j.end()) {
    if (!it->is_string()) bad("datum", "expected a string");
    if (it->get<std::string>() != d.name())
      throw InputError("datum mismatch: element is over " + it->get<std::string>() + ", expected " + d.name());
  }
  const json& terms = require(j, "terms", "");
  if (!terms.is_array()) bad("terms", "expected an array");
  std::vector<HeckeTerm> out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string f = "terms[" + std::to_string(k) + "]";
    const json& t = terms[k];
    if (!t.is_object()) bad(f, "expected an object");
    Coweight mu = t.contains("mu") ? coweight_from_json(d, t["mu"], f + ".mu") : Coweight(static_cast<std::size_t>(d.rank()));
    WeylElt w = t.contains("w") ? weyl_from_json(d, t["w"], f + ".w") : d.identity();
    Laurent c = t.contains("coeff") ? laurent_from_json(t["coeff"], f + ".coeff") : Laurent(1);
    out.push_back(HeckeTerm{std::move(mu), w, std::move(c)});
  }
  return HeckeElt(alg, std::move(out));
}

// ---------------------------------------------------------------------------
// modules

json kvalue_to_json(const RationalFunction& x) {
  if (x.is_laurent()) return x.numerator().str();
  return "(" + x.numerator().str() + ")/(" + x.denominator().str() + ")";
}

RationalFunction kvalue_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return RationalFunction(j.get<std::int64_t>());
  if (!j.is_string()) bad(field, "expected a rational function string");
  try {
    return RationalFunction::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad(field, e.what());
  }
}

json matrix_to_json(const KMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(kvalue_to_json(m(i, c)));
    rows.push_back(r);
  }
  return rows;
}

KMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of rows");
  std::vector<std::vector<RationalFunction>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) bad(field, "row " + std::to_string(i + 1) + " is not an array");
    std::vector<RationalFunction> r;
    for (std::size_t c = 0; c < j[i].size(); ++c)
      r.push_back(kvalue_from_json(j[i][c], field + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
    if (!rows.empty() && r.size() != rows.front().size()) bad(field, "ragged rows");
    rows.push_back(std::move(r));
  }
  return KMatrix::from_rows(rows);
}

json module_to_json(const HModule& v) {
  json t = json::object(), th = json::object();
  for (const auto& [i, m] : v.t_mats()) t[std::to_string(i + 1)] = matrix_to_json(m);
  for (std::size_t j = 0; j < v.theta_mats().size(); ++j) th[std::to_string(j + 1)] = matrix_to_json(v.theta(j));
  return json{{"datum", v.rd().name()}, {"levi", levi_to_json(v.levi())["levi"]}, {"dim", v.dim()}, {"T", t}, {"Theta", th}};
}

HModule module_from_json(const HeckePtr& alg, const json& j) {
  const RootDatum& d = alg->rd();
  if (!j.is_object()) bad("module", "expected an object");
  if (auto it = j.find("datum"); it != j.end() && it->is_string() && it->get<std::string>() != d.name())
    throw InputError("datum mismatch: module is over " + it->get<std::string>() + ", expected " + d.name());
  const LeviSet levi = levi_from_json(d, require(j, "levi", ""), "levi");
  const json& dim = require(j, "dim", "");
  if (!dim.is_number_integer() || dim.get<int>() < 1) bad("dim", "expected a positive integer");
  const std::size_t n = dim.get<std::size_t>();
  auto square = [&](const json& m, const std::string& f) {
    KMatrix k = matrix_from_json(m, f);
    if (k.rows() != n || k.cols() != n) bad(f, "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return k;
  };
  std::map<int, KMatrix> t;
  const json& jt = require(j, "T", "");
  if (!jt.is_object()) bad("T", "expected an object keyed by simple index");
  for (const auto& [key, m] : jt.items()) {
    int i = 0;
    try {
      i = std::stoi(key);
    } catch (const std::exception&) {
      bad("T", "bad key '" + key + "'");
    }
    if (!levi.contains(i - 1)) bad("T." + key, "index not in the Levi");
    t.emplace(i - 1, square(m, "T." + key));
  }
  for (int i : levi.indices())
    if (!t.count(i)) bad("T", "missing matrix for index " + std::to_string(i + 1));
  std::vector<KMatrix> th;
  const json& jth = require(j, "Theta", "");
  if (!jth.is_object()) bad("Theta", "expected an object keyed by lattice coordinate");
  for (int k = 1; k <= d.rank(); ++k) {
    const std::string key = std::to_string(k);
    if (!jth.contains(key)) bad("Theta", "missing matrix for coordinate " + key);
    th.push_back(square(jth[key], "Theta." + key));
  }
  return HModule(alg, levi, n, std::move(t), std::move(th));
}

json module_map_to_json(const ModuleMap& m) {
  return json{{"matrix", matrix_to_json(m.matrix)}, {"verified", m.verified}};
}

UnramifiedCharacter parse_character(const RootDatum& d, const std::string& text) {
  std::vector<RationalFunction> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      vals.push_back(RationalFunction::parse(item));
    } catch (const std::exception& e) {
      bad("--chi", "cannot parse '" + item + "': " + e.what());
    }
  }
  if (vals.size() != static_cast<std::size_t>(d.rank()))
    bad("--chi", "expected " + std::to_string(d.rank()) + " values, got " + std::to_string(vals.size()));
  try {
    return UnramifiedCharacter(std::move(vals));
  } catch (const std::invalid_argument& e) {
    bad("--chi", e.what());
  }
}

json character_to_json(const UnramifiedCharacter& chi) {
  json a = json::array();
  for (const auto& x : chi.values()) a.push_back(kvalue_to_json(x));
  return a;
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

}  // namespace hk
