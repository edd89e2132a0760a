// hk: command-line front end.  Every command writes one JSON document.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hk/suites.hpp"

using namespace hk;

namespace {

struct Options {
  std::string datum = "A1";
  std::string levi;
  bool levi_set = false;
  std::string chi;
  std::string seed;
  std::string orientation = "auto";
  std::string out;
  std::string side = "left";
  int samples = 0;
  std::vector<std::string> files;
  std::vector<std::string> suites;
};

std::string read_all(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  if (path == "-") return parse_json_text(read_all(std::cin), "stdin");
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_json_text(read_all(in), path);
}

// The inputs of a command: the file arguments, or stdin holding one
// document (or an array of documents when several are needed).
std::vector<json> inputs(const Options& o, std::size_t want) {
  std::vector<json> docs;
  if (o.files.empty()) {
    json j = read_json("-");
    if (want > 1 && j.is_array())
      for (auto& x : j) docs.push_back(x);
    else
      docs.push_back(std::move(j));
  } else {
    for (const auto& f : o.files) docs.push_back(read_json(f));
  }
  if (want && docs.size() < want)
    throw InputError("expected " + std::to_string(want) + " JSON inputs, got " + std::to_string(docs.size()));
  return docs;
}

std::uint64_t seed_of(const Options& o) {
  std::string s = o.seed;
  if (s.empty())
    if (const char* env = std::getenv("HK_SEED")) s = env;
  if (s.empty()) return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw InputError("--seed: cannot parse '" + s + "'");
  }
}

LeviSet levi_of(const Options& o, const RootDatum& d, const LeviSet& fallback) {
  return o.levi_set ? parse_levi(d, o.levi) : fallback;
}

json map_report_json(const ModuleMap& m, const MapReport& r) {
  json rep{{"well_defined", r.well_defined}, {"equivariant", r.equivariant}, {"bijective", r.bijective},
           {"rank", r.rank}, {"pass", r.pass()}};
  if (!r.failure.empty()) rep["failure"] = r.failure;
  return json{{"map", module_map_to_json(m)}, {"report", rep}};
}

void emit(const Options& o, const json& j) {
  const std::string text = j.dump() + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
  }
}

HeckePtr algebra(const Options& o) { return Hecke::create(load_datum(o.datum)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in Iwahori-Hecke algebras (Bernstein presentation)"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--datum", o.datum, "preset (A1, GL2, A2, GL3, B2, G2, products like A1xGL2), JSON file or inline JSON");
    c->add_option("--out", o.out, "write the JSON result here instead of stdout");
  };
  auto levi = [&](CLI::App* c) {
    c->add_option_function<std::string>(
        "--levi", [&](const std::string& s) { o.levi = s, o.levi_set = true; }, "simple indices, e.g. 1,2; all; none");
  };

  auto* datum = app.add_subcommand("datum", "list presets or show a root datum");
  datum->require_subcommand(1);
  auto* datum_list = datum->add_subcommand("list", "preset names");
  auto* datum_show = datum->add_subcommand("show", "simple roots, coroots and Weyl group data");
  common(datum_show);

  auto* mul = app.add_subcommand("mul", "product of the input elements, left to right");
  common(mul);
  mul->add_option("files", o.files, "element JSON files (default: a JSON array on stdin)");

  auto* star = app.add_subcommand("star", "opposition of an element");
  std::string star_kind;
  star->add_option("kind", star_kind, "im or b")->required()->check(CLI::IsMember({"im", "b"}));
  common(star);
  levi(star);
  star->add_option("files", o.files, "element JSON file (default: stdin)");

  auto* im = app.add_subcommand("im", "Iwahori-Matsumoto element T_x for x = {\"mu\", \"w\"}");
  common(im);
  levi(im);
  im->add_option("files", o.files, "extended affine Weyl element JSON (default: stdin)");

  auto* decompose = app.add_subcommand("decompose", "decomposition over R or over a Levi subalgebra");
  std::string dec_kind;
  decompose->add_option("kind", dec_kind, "R or levi")->required()->check(CLI::IsMember({"R", "levi"}));
  common(decompose);
  levi(decompose);
  decompose->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  decompose->add_option("files", o.files, "element JSON file (default: stdin)");

  auto* ps = app.add_subcommand("ps", "principal series of an unramified character");
  common(ps);
  levi(ps);
  ps->add_option("--chi", o.chi, "values on the lattice basis, e.g. 2,3*v")->required();

  auto* induce = app.add_subcommand("induce", "parabolic induction of a module");
  common(induce);
  induce->add_option("files", o.files, "module JSON file (default: stdin)");

  auto* restrict = app.add_subcommand("restrict", "restriction of a module to a Levi subalgebra");
  common(restrict);
  levi(restrict);
  restrict->add_option("files", o.files, "module JSON file (default: stdin)");

  auto* reeder = app.add_subcommand("reeder", "the map h (x) 1 -> t_{w0} h^* and its verification");
  common(reeder);
  reeder->add_option("--chi", o.chi, "values on the lattice basis")->required();

  auto* jantzen = app.add_subcommand("jantzen", "the map h (x) v -> v (x) T_{w0'} h^* and its verification");
  common(jantzen);
  levi(jantzen);
  jantzen->add_option("--chi", o.chi, "values on the lattice basis (V = principal series of the Levi)");
  jantzen->add_option("files", o.files, "module JSON file for V instead of --chi");

  auto* check = app.add_subcommand("check", "seeded verification suites");
  check->add_option("suites", o.suites, "suite names, or all")->required();
  check->add_option("--datum", o.datum, "comma-separated presets (default: all)");
  check->add_option("--seed", o.seed, "64-bit seed (fallback: HK_SEED, then 1)");
  check->add_option("--samples", o.samples, "override the per-suite sample count");
  check->add_option("--orientation", o.orientation, "auto, as-written or mirrored");
  check->add_option("--out", o.out, "write the report here instead of stdout");
  bool datum_given = false;
  check->preparse_callback([&](std::size_t) {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  datum_given = check->count("--datum") > 0;

  try {
    if (*datum_list) {
      emit(o, json(RootDatum::preset_names()));
      return 0;
    }
    if (*datum_show) {
      const auto d = load_datum(o.datum);
      json j = datum_to_json(*d);
      json pos = json::array();
      for (std::size_t k = 0; k < d->num_positive_roots(); ++k) pos.push_back(d->positive_root(k).to_vector());
      j["positive_roots"] = pos;
      j["weyl_order"] = d->weyl_order();
      j["longest_element"] = word_to_json(*d, d->longest_element(d->full_levi()));
      emit(o, j);
      return 0;
    }
    if (*mul) {
      const HeckePtr alg = algebra(o);
      const auto docs = inputs(o, 2);
      HeckeElt p = alg->one();
      for (const auto& j : docs) p *= element_from_json(alg, j);
      emit(o, element_to_json(p));
      return 0;
    }
    if (*star) {
      const HeckePtr alg = algebra(o);
      const LeviSet l = levi_of(o, alg->rd(), alg->rd().full_levi());
      const HeckeElt h = element_from_json(alg, inputs(o, 1).front());
      emit(o, element_to_json(apply_star(h, parse_star(star_kind), l)));
      return 0;
    }
    if (*im) {
      const HeckePtr alg = algebra(o);
      const LeviSet l = levi_of(o, alg->rd(), alg->rd().full_levi());
      const ExtElt x = ext_from_json(alg->rd(), inputs(o, 1).front());
      emit(o, element_to_json(im_element(alg, x, l)));
      return 0;
    }
    if (*decompose) {
      const HeckePtr alg = algebra(o);
      const RootDatum& d = alg->rd();
      const HeckeElt h = element_from_json(alg, inputs(o, 1).front());
      json pieces = json::object();
      if (dec_kind == "R") {
        for (const auto& [w, coeffs] : decompose_R(h)) {
          json arr = json::array();
          for (const auto& [mu, c] : coeffs) arr.push_back(json{{"mu", coweight_to_json(mu)}, {"coeff", laurent_to_json(c)}});
          pieces[word_key(d, d.elements()[w])] = arr;
        }
        emit(o, json{{"datum", d.name()}, {"pieces", pieces}});
      } else {
        if (!o.levi_set) throw InputError("--levi is required");
        const LeviSet l = parse_levi(d, o.levi);
        const Side side = o.side == "left" ? Side::left : Side::right;
        for (const auto& p : decompose_over_levi(h, l, side)) pieces[word_key(d, p.rep)] = element_to_json(p.coeff);
        emit(o, json{{"datum", d.name()}, {"levi", levi_to_json(l)["levi"]}, {"side", o.side}, {"pieces", pieces}});
      }
      return 0;
    }
    if (*ps) {
      const HeckePtr alg = algebra(o);
      const LeviSet l = levi_of(o, alg->rd(), alg->rd().full_levi());
      emit(o, module_to_json(principal_series(alg, parse_character(alg->rd(), o.chi), l)));
      return 0;
    }
    if (*induce) {
      const HeckePtr alg = algebra(o);
      const HModule v = module_from_json(alg, inputs(o, 1).front());
      const ModuleReport r = validate_module(v);
      if (!r.pass) throw InputError("module: " + r.failure);
      emit(o, module_to_json(hk::induce(v, ParabolicCtx::make(alg->datum(), v.levi()))));
      return 0;
    }
    if (*restrict) {
      const HeckePtr alg = algebra(o);
      if (!o.levi_set) throw InputError("--levi is required");
      const HModule v = module_from_json(alg, inputs(o, 1).front());
      const LeviSet l = parse_levi(alg->rd(), o.levi);
      if (!l.subset_of(v.levi())) throw InputError("--levi: not contained in the module's Levi");
      emit(o, module_to_json(restrict_levi(v, l)));
      return 0;
    }
    if (*reeder) {
      const HeckePtr alg = algebra(o);
      const auto [m, r] = reeder_check(alg, parse_character(alg->rd(), o.chi));
      emit(o, map_report_json(m, r));
      return r.pass() ? 0 : 1;
    }
    if (*jantzen) {
      const HeckePtr alg = algebra(o);
      const RootDatum& d = alg->rd();
      HModule v = [&] {
        if (!o.chi.empty()) return principal_series(alg, parse_character(d, o.chi), levi_of(o, d, d.full_levi()));
        return module_from_json(alg, inputs(o, 1).front());
      }();
      if (o.levi_set && !(parse_levi(d, o.levi) == v.levi())) throw InputError("--levi: differs from the module's Levi");
      const ModuleReport vr = validate_module(v);
      if (!vr.pass) throw InputError("module: " + vr.failure);
      const auto [m, r] = jantzen_check(v, ParabolicCtx::make(alg->datum(), v.levi()));
      emit(o, map_report_json(m, r));
      return r.pass() ? 0 : 1;
    }
    if (*check) {
      SuiteConfig cfg;
      if (datum_given) {
        std::stringstream ss(o.datum);
        std::string item;
        while (std::getline(ss, item, ',')) {
          load_datum(item);  // validate the name early
          cfg.presets.push_back(item);
        }
      }
      cfg.seed = seed_of(o);
      cfg.samples = o.samples;
      cfg.orientation = o.orientation;
      cfg.parabolic_orientation();
      std::vector<std::string> names = o.suites;
      if (names.size() == 1 && names[0] == "all") names = suite_names();
      const auto known = suite_names();
      for (const auto& n : names)
        if (n != "bernstein" && std::find(known.begin(), known.end(), n) == known.end())
          throw InputError("unknown suite '" + n + "'");
      json results = json::array();
      bool pass = true;
      for (const auto& n : names) {
        const SuiteResult r = run_suite(n, cfg);
        pass = pass && r.pass;
        json j{{"suite", r.name}, {"pass", r.pass}};
        if (n == "conventions")
          j["report"] = r.detail;
        else
          j["presets"] = r.detail["presets"];
        results.push_back(j);
      }
      emit(o, json{{"seed", std::to_string(cfg.seed)}, {"pass", pass}, {"suites", results}});
      return pass ? 0 : 1;
    }
  } catch (const InputError& e) {
    std::cerr << "hk: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hk: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "hk: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
