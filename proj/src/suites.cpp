#include "hk/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>

#include "hk/sampling.hpp"

namespace hk {

namespace {

// The orientation the convention suite finds for parabolic opposition and
// the twisted Jacquet action; "auto" uses it and the convention suite fails
// if the measured assignment ever differs.
constexpr Orientation kParabolicOrientation = Orientation::as_written;

// Pinned bounds for the exhaustive and sampled families.
constexpr int kCrossPairingBound = 5;  // |<alpha, mu>| in the cross relation
constexpr int kImLength = 4;           // Iwahori-Matsumoto elements up to this length
constexpr int kImBox = 2;              // ... with |mu|_inf <= kImBox
constexpr int kModulusBox = 4;
constexpr int kSandwichBox = 2;
constexpr int kOracleBox = 1;             // star_im(Theta_mu) against its IM construction
constexpr int kSplitBox = 16;             // search box for the oracle's dominant split
constexpr int kSmallTerms = 3;         // random Levi elements
constexpr int kSmallBox = 2;
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

Laurent q_minus_one() { return Laurent::q() - Laurent(1); }

// Counts per named check plus the first failure.
class Tally {
 public:
  bool check(const std::string& key, bool ok, const std::function<json()>& witness = {}) {
    auto& c = counts_[key];
    ++c.first;
    if (!ok) {
      ++c.second;
      if (witness_.is_null()) {
        witness_ = json{{"check", key}};
        if (witness) witness_["input"] = witness();
      }
    }
    return ok;
  }
  void note(const std::string& key, json value) { notes_[key] = std::move(value); }
  bool pass() const { return witness_.is_null(); }

  json to_json(const std::string& preset) const {
    json checks = json::object();
    for (const auto& [k, c] : counts_) checks[k] = json{{"checked", c.first}, {"failed", c.second}};
    json j{{"preset", preset}, {"pass", pass()}, {"checks", checks}};
    for (const auto& [k, v] : notes_) j[k] = v;
    if (!pass()) j["witness"] = witness_;
    return j;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts_;
  std::map<std::string, json> notes_;
  json witness_;
};

std::vector<Coweight> box_points(int rank, int box) {
  std::vector<Coweight> out;
  Coweight mu(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) mu[static_cast<std::size_t>(k)] = -box;
  while (true) {
    out.push_back(mu);
    int k = 0;
    while (k < rank && mu[static_cast<std::size_t>(k)] == box) mu[static_cast<std::size_t>(k++)] = -box;
    if (k == rank) break;
    ++mu[static_cast<std::size_t>(k)];
  }
  return out;
}

std::vector<LeviSet> all_levis(const RootDatum& d) {
  std::vector<LeviSet> out;
  const int n = d.num_simple();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    out.emplace_back(idx);
  }
  return out;
}

Coweight unit(int rank, int j, int sign) {
  Coweight mu(static_cast<std::size_t>(rank));
  mu[static_cast<std::size_t>(j)] = sign;
  return mu;
}

// T_s for s in levi and Theta_{+-e_j}.
std::vector<HeckeElt> generators(const HeckePtr& alg, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  std::vector<HeckeElt> g;
  for (int i : levi.indices()) g.push_back(alg->t(d.simple_reflection(i)));
  for (int j = 0; j < d.rank(); ++j)
    for (int sign : {1, -1}) g.push_back(alg->theta(unit(d.rank(), j, sign)));
  return g;
}

int braid_order(const RootDatum& d, int i, int j) {
  switch (d.cartan(i, j) * d.cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

// chi(alpha^vee) avoids 1 and q^{+-1} on every positive coroot.
bool is_generic(const RootDatum& d, const UnramifiedCharacter& chi) {
  const RationalFunction one(1), q(Laurent::q()), qi(Laurent::v_power(-2));
  for (std::size_t k = 0; k < d.num_positive_roots(); ++k) {
    const RationalFunction x = chi.value(d.positive_coroot(k));
    if (x == one || x == q || x == qi) return false;
  }
  return true;
}

UnramifiedCharacter generic_character(Sampler& s, const RootDatum& d) {
  while (true) {
    std::vector<RationalFunction> vals;
    for (int j = 0; j < d.rank(); ++j) vals.push_back(s.generic_value());
    UnramifiedCharacter chi(std::move(vals));
    if (is_generic(d, chi)) return chi;
  }
}

json pair_json(const HeckeElt& a, const HeckeElt& b) { return json{{"a", element_to_json(a)}, {"b", element_to_json(b)}}; }

using GroupKey = std::pair<Coweight, std::uint32_t>;
std::map<GroupKey, Rational> group_map(const std::vector<GroupTerm>& ts) {
  std::map<GroupKey, Rational> m;
  for (const auto& t : ts) {
    Rational& c = m[{t.x.mu, t.x.w.id}];
    c += t.coeff;
    if (c.is_zero()) m.erase({t.x.mu, t.x.w.id});
  }
  return m;
}

// star_im(Theta_mu) from Iwahori-Matsumoto elements only: for dominant nu,
// star_im(Theta_nu) = v^{-<2rho,nu>} T_{pi^{-nu}}; extend through
// mu = mu+ - mu-.
// Dominant lambda with mu + lambda dominant and <2rho, lambda> minimal,
// searched in a box; the canonical decomposition is the fallback.  Small
// translations keep the Iwahori-Matsumoto elements below cheap.
std::pair<Coweight, Coweight> small_dominant_split(const RootDatum& d, const Coweight& mu, const Weight& two_rho) {
  std::optional<Coweight> best;
  for (const Coweight& lam : box_points(d.rank(), kSplitBox)) {
    if (!d.is_dominant(lam) || !d.is_dominant(mu + lam)) continue;
    if (!best || pairing(two_rho, lam) < pairing(two_rho, *best)) best = lam;
  }
  if (!best) return d.dominant_decomposition(mu);
  return {mu + *best, *best};
}

HeckeElt star_im_theta_oracle(const HeckePtr& alg, const Coweight& mu) {
  const RootDatum& d = *alg->datum();
  const Weight two_rho = d.two_rho(d.full_levi());
  const auto [plus, minus] = small_dominant_split(d, mu, two_rho);
  const int ep = static_cast<int>(pairing(two_rho, plus)), em = static_cast<int>(pairing(two_rho, minus));
  const HeckeElt a = im_element(alg, ExtElt{-plus, d.identity()}).scaled(Laurent::v_power(-ep));
  const HeckeElt b = im_inverse(alg, ExtElt{-minus, d.identity()}, d.full_levi()).scaled(Laurent::v_power(em));
  return b * a;
}

// ---------------------------------------------------------------------------
// per-preset bodies

using Body = std::function<void(const HeckePtr&, Sampler&, Tally&, const SuiteConfig&)>;

void presentation(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig&) {
  const RootDatum& d = alg->rd();
  const int n = d.num_simple();
  const Laurent q = Laurent::q(), qm = q_minus_one();
  for (int i = 0; i < n; ++i) {
    const HeckeElt ts = alg->t(d.simple_reflection(i));
    t.check("quadratic", ts * ts == alg->scalar(q) + ts.scaled(qm), [&] { return json{{"s", i + 1}}; });
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = braid_order(d, i, j);
      HeckeElt a = alg->one(), b = alg->one();
      for (int k = 0; k < m; ++k) {
        a *= alg->t(d.simple_reflection(k % 2 ? j : i));
        b *= alg->t(d.simple_reflection(k % 2 ? i : j));
      }
      t.check("braid", a == b, [&] { return json{{"s", i + 1}, {"t", j + 1}}; });
    }
  for (WeylElt w : d.elements()) {
    HeckeElt p = alg->one();
    for (int i : d.reduced_word(w)) p *= alg->t(d.simple_reflection(i));
    t.check("reduced-word-product", p == alg->t(w), [&] { return json{{"w", word_to_json(d, w)}}; });
  }
  // Theta is a homomorphism on the unit vectors and random pairs.
  std::vector<std::pair<Coweight, Coweight>> pairs;
  for (int a = 0; a < d.rank(); ++a)
    for (int b = 0; b < d.rank(); ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) pairs.emplace_back(unit(d.rank(), a, sa), unit(d.rank(), b, sb));
  for (int k = 0; k < 100; ++k) pairs.emplace_back(s.coweight(d.rank(), 3), s.coweight(d.rank(), 3));
  for (const auto& [mu, eta] : pairs)
    t.check("theta-homomorphism", alg->theta(mu) * alg->theta(eta) == alg->theta(mu + eta),
            [&] { return json{{"mu", coweight_to_json(mu)}, {"eta", coweight_to_json(eta)}}; });
  // Cross relation: exhaustive over a box, restricted to |<alpha, mu>| <= 5.
  const int box = d.rank() <= 2 ? 5 : 3;
  t.note("cross_box", box);
  for (int i = 0; i < n; ++i) {
    const WeylElt si = d.simple_reflection(i);
    const HeckeElt ts = alg->t(si);
    const HeckeElt one_minus = alg->one() - alg->theta(-d.simple_coroots()[static_cast<std::size_t>(i)]);
    for (const Coweight& mu : box_points(d.rank(), box)) {
      const std::int64_t p = pairing(d.simple_roots()[static_cast<std::size_t>(i)], mu);
      if (p > kCrossPairingBound || p < -kCrossPairingBound) continue;
      const HeckeElt prod = ts * alg->theta(mu);
      const Coweight smu = d.act(si, mu);
      auto wit = [&] { return json{{"s", i + 1}, {"mu", coweight_to_json(mu)}}; };
      t.check("cross-vs-mul", prod == alg->cross(i, mu), wit);
      // (1 - Theta_{-alpha^vee}) (T_s Theta_mu - Theta_{s mu} T_s) = (q-1)(Theta_mu - Theta_{s mu})
      t.check("cross-cleared", one_minus * (prod - alg->theta(smu) * ts) == (alg->theta(mu) - alg->theta(smu)).scaled(qm),
              wit);
    }
  }
}

void associativity(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const int n = cfg.samples > 0 ? cfg.samples : 500;
  const LeviSet full = alg->rd().full_levi();
  for (int k = 0; k < n; ++k) {
    const HeckeElt a = s.element(alg, full, cfg.max_terms, cfg.box), b = s.element(alg, full, cfg.max_terms, cfg.box),
                   c = s.element(alg, full, cfg.max_terms, cfg.box);
    t.check("associativity", (a * b) * c == a * (b * c), [&] {
      json j = pair_json(a, b);
      j["c"] = element_to_json(c);
      return j;
    });
  }
}

void iwahori_matsumoto(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const LeviSet full = d.full_levi();
  const auto xs = d.ext_elements_up_to(full, kImLength, kImBox);
  t.note("elements", xs.size());
  std::vector<HeckeElt> ims;
  for (const auto& x : xs) {
    ims.push_back(im_element(alg, x));
    const HeckeElt& a = ims.back();
    auto wit = [&] { return ext_to_json(d, x); };
    t.check("descent-construction", a == im_by_descent(alg, x, full), wit);
    const auto sp = specialize_at_one(a);
    t.check("specializes-to-group-element", sp.size() == 1 && sp[0].x == x && sp[0].coeff.is_one(), wit);
    t.check("inverse", im_inverse(alg, x, full) * a == alg->one(), wit);
  }
  // Coherence on sampled length-additive pairs.
  const int want = cfg.samples > 0 ? cfg.samples : 200;
  int found = 0;
  for (int draws = 0; found < want && draws < 50 * want; ++draws) {
    const ExtElt& x = s.pick(xs);
    const ExtElt& y = s.pick(xs);
    const ExtElt xy = d.ext_mul(x, y);
    if (d.ext_length(xy) != d.ext_length(x) + d.ext_length(y)) continue;
    ++found;
    t.check("coherence", im_element(alg, x) * im_element(alg, y) == im_element(alg, xy),
            [&] { return json{{"x", ext_to_json(d, x)}, {"y", ext_to_json(d, y)}}; });
  }
  t.note("additive_pairs", found);
  t.check("enough-additive-pairs", found == want);
  // Linear independence: full rank modulo a prime implies full rank.
  std::map<GroupKey, std::size_t> col;
  for (const auto& a : ims)
    for (const auto& term : a.terms()) col.emplace(GroupKey{term.mu, term.w.id}, 0);
  std::size_t c = 0;
  for (auto& [k, v] : col) v = c++;
  std::vector<std::vector<Laurent>> rows(ims.size(), std::vector<Laurent>(col.size()));
  for (std::size_t r = 0; r < ims.size(); ++r)
    for (const auto& term : ims[r].terms()) rows[r][col.at({term.mu, term.w.id})] = term.coeff;
  std::size_t rank = 0;
  for (std::uint64_t point : {1234567ULL, 7654321ULL, 99991ULL}) {
    rank = rank_mod_p(rows, kPrime, point);
    if (rank == ims.size()) break;
  }
  t.note("independence_rank", rank);
  t.check("linear-independence", rank == ims.size());
  // v -> 1 is a ring map onto the group algebra.
  for (int k = 0; k < 100; ++k) {
    const HeckeElt a = s.element(alg, full, kSmallTerms, kSmallBox), b = s.element(alg, full, kSmallTerms, kSmallBox);
    t.check("specialization-multiplicative",
            group_map(specialize_at_one(a * b)) ==
                group_map(group_algebra_mul(d, specialize_at_one(a), specialize_at_one(b))),
            [&] { return pair_json(a, b); });
  }
}

void modulus(const HeckePtr& alg, Sampler&, Tally& t, const SuiteConfig&) {
  const RootDatum& d = alg->rd();
  const Weight two_rho = d.two_rho(d.full_levi());
  for (const Coweight& mu : box_points(d.rank(), kModulusBox)) {
    if (!d.is_dominant(mu)) continue;
    const ExtElt x{mu, d.identity()};
    const int e = delta_half_exp(d, mu, d.full_levi());
    auto wit = [&] { return json{{"mu", coweight_to_json(mu)}}; };
    // delta^{-1}(pi^mu) = v^{-2e} must equal q^{l(pi^mu)} = v^{2l}.
    t.check("modulus-vs-length", -e == d.ext_length(x), wit);
    t.check("modulus-vs-two-rho", -e == pairing(two_rho, mu), wit);
    t.check("theta-normalization", im_element(alg, x).scaled(Laurent::v_power(e)) == alg->theta(mu), wit);
  }
}

void opposition(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const LeviSet full = d.full_levi();
  for (int k = 0; k < 100; ++k) {
    const HeckeElt a = s.element(alg, full, kSmallTerms, kSmallBox), b = s.element(alg, full, kSmallTerms, kSmallBox);
    t.check("star_im-involution", star_im(star_im(a)) == a, [&] { return element_to_json(a); });
    t.check("star_im-anti-multiplicative", star_im(a * b) == star_im(b) * star_im(a), [&] { return pair_json(a, b); });
  }
  for (const auto& x : d.ext_elements_up_to(full, kImLength, kImBox))
    t.check("star_im-on-im-basis", star_im(im_element(alg, x)) == im_element(alg, d.ext_inv(x)),
            [&] { return ext_to_json(d, x); });
  const int pairs = cfg.samples > 0 ? cfg.samples : 200;
  for (int k = 0; k < pairs; ++k) {
    const HeckeElt a = s.element(alg, full, kSmallTerms, kSmallBox), b = s.element(alg, full, kSmallTerms, kSmallBox);
    t.check("star_b-anti-multiplicative", star_b(a * b) == star_b(b) * star_b(a), [&] { return pair_json(a, b); });
  }
  for (WeylElt w : d.elements()) {
    t.check("star_b-on-T", star_b(alg->t(w)) == alg->t(d.inverse(w)), [&] { return word_to_json(d, w); });
    t.check("star_im-on-T", star_im(alg->t(w)) == alg->t(d.inverse(w)), [&] { return word_to_json(d, w); });
  }
  // Sandwich rule for Theta_mu in both orientations.
  const WeylElt w0 = d.longest_element(full);
  bool b_as = true, b_mir = true, im_as = true, im_mir = true;
  for (const Coweight& mu : box_points(d.rank(), kSandwichBox)) {
    const HeckeElt mid = alg->theta(-d.act(w0, mu));
    const HeckeElt as = sandwich(mid, w0, Orientation::as_written), mir = sandwich(mid, w0, Orientation::mirrored);
    const HeckeElt sb = star_b(alg->theta(mu));
    b_as = b_as && sb == as;
    b_mir = b_mir && sb == mir;
    // Both sides are multiplicative in mu, so a box containing +-e_j decides it.
    if (mu.linf_norm() > kOracleBox) continue;
    const HeckeElt si = star_im_theta_oracle(alg, mu);
    t.check("star_im-theta-matches-oracle", star_im(alg->theta(mu)) == si, [&] { return coweight_to_json(mu); });
    im_as = im_as && si == as;
    im_mir = im_mir && si == mir;
  }
  t.note("sandwich", json{{"star_b", json{{"as-written", b_as}, {"mirrored", b_mir}}},
                          {"star_im", json{{"as-written", im_as}, {"mirrored", im_mir}}}});
  t.check("star_b-sandwich-as-written", b_as);
  t.check("star_im-sandwich-exactly-one-orientation", im_as != im_mir);
}

void length_formula(const HeckePtr& alg, Sampler&, Tally& t, const SuiteConfig&) {
  const RootDatum& d = alg->rd();
  for (const LeviSet& l : all_levis(d)) {
    const auto rep = check_length_formula(ParabolicCtx::make(alg->datum(), l));
    t.check("length-formula", rep.pass, [&] {
      json ws = json::array();
      for (WeylElt w : rep.failures) ws.push_back(word_to_json(d, w));
      return json{{"levi", l.str()}, {"failures", ws}};
    });
  }
}

void freeness(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const int n = cfg.samples > 0 ? cfg.samples : 100;
  for (const LeviSet& l : all_levis(d)) {
    const auto reps = d.min_coset_reps(l);
    std::set<std::uint32_t> left_reps, right_reps;
    for (WeylElt r : reps) {
      left_reps.insert(r.id);
      right_reps.insert(d.inverse(r).id);
    }
    for (Side side : {Side::left, Side::right}) {
      const std::string tag = side == Side::left ? "left" : "right";
      for (int k = 0; k < n; ++k) {
        const HeckeElt h = s.element(alg, d.full_levi(), kSmallTerms, kSmallBox);
        const auto pieces = decompose_over_levi(h, l, side);
        bool shape = true;
        for (const auto& p : pieces)
          shape = shape && p.coeff.supported_in(l) && (side == Side::left ? left_reps : right_reps).count(p.rep.id);
        auto wit = [&] { return json{{"levi", l.str()}, {"element", element_to_json(h)}}; };
        t.check("pieces-in-levi-" + tag, shape, wit);
        t.check("round-trip-" + tag, reassemble(alg, pieces, side) == h, wit);
      }
      // Uniqueness: the products T_{w''} T_{w'} (or T_{w'} T_{w''}) span
      // the finite Hecke algebra with full rank.
      const auto sub = d.weyl_subgroup(l);
      std::vector<std::vector<Laurent>> rows;
      for (WeylElt r : reps)
        for (WeylElt u : sub) {
          const WeylElt rr = side == Side::left ? r : d.inverse(r);
          const HeckeElt p = side == Side::left ? alg->t(u) * alg->t(rr) : alg->t(rr) * alg->t(u);
          std::vector<Laurent> row(d.weyl_order());
          for (const auto& term : p.terms()) row[d.canonical_rank(term.w)] = term.coeff;
          rows.push_back(std::move(row));
        }
      t.check("uniqueness-rank-" + tag, rows.size() == d.weyl_order() && rank_mod_p(rows, kPrime, 1234567) == d.weyl_order(),
              [&] { return json{{"levi", l.str()}}; });
    }
  }
}

void parabolic_opposition(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const Orientation o = cfg.parabolic_orientation();
  t.note("orientation", to_string(o));
  const int n = cfg.samples > 0 ? cfg.samples : 100;
  for (const LeviSet& l : all_levis(d)) {
    const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
    t.check("length-formula", check_length_formula(ctx).pass, [&] { return json{{"levi", l.str()}}; });
    std::vector<HeckeElt> omegas = generators(alg, ctx.conj_levi);
    omegas.push_back(alg->one());
    for (int k = 0; k < n; ++k) omegas.push_back(s.element(alg, ctx.conj_levi, kSmallTerms, kSmallBox));
    for (const auto& w : omegas)
      t.check("parabolic-opposition", check_parabolic_opposition(w, ctx, o),
              [&] { return json{{"levi", l.str()}, {"element", element_to_json(w)}}; });
  }
}

void induction(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const int n = cfg.samples > 0 ? cfg.samples : 5;
  for (const LeviSet& l : all_levis(d)) {
    const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
    for (int k = 0; k < n; ++k) {
      const UnramifiedCharacter chi = generic_character(s, d);
      auto wit = [&] { return json{{"levi", l.str()}, {"chi", character_to_json(chi)}}; };
      const auto st = stage_compatibility_check(alg, chi, l);
      t.check("stage-compatibility", st.pass, wit);
      const HModule v = principal_series(alg, chi, l);
      t.check("principal-series-valid", validate_module(v).pass, wit);
      const HModule ind = induce(v, ctx);
      t.check("induced-dimension", ind.dim() == v.dim() * ctx.reps.size(), wit);
      t.check("induced-valid", validate_module(ind).pass, wit);
      const HModule res = restrict_levi(ind, l);
      t.check("restriction-valid", validate_module(res).pass, wit);
    }
  }
}

void jacquet(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const int n = cfg.samples > 0 ? cfg.samples : 5;
  for (int k = 0; k < n; ++k) {
    const UnramifiedCharacter chi = generic_character(s, d);
    std::vector<Coweight> mus;
    for (int j = 0; j < d.rank(); ++j) mus.push_back(unit(d.rank(), j, 1));
    mus.push_back(s.coweight(d.rank(), 2));
    for (const auto& mu : mus)
      t.check("theta-spectrum", jacquet_spectrum_check(alg, chi, mu),
              [&] { return json{{"chi", character_to_json(chi)}, {"mu", coweight_to_json(mu)}}; });
  }
}

// T_{w0'}^{-1} gamma(omega^#) T_{w0'} on V = ps(chi) against star_b(omega),
// omega over the generators of H_{M'}.
bool twisted_jacquet_agrees(const HModule& v, const ParabolicCtx& ctx, Orientation o) {
  for (const auto& g : generators(v.algebra(), ctx.conj_levi)) {
    const HeckeElt sharp = levi_star_b(g, ctx.conj_levi);
    const KMatrix lhs = o == Orientation::as_written ? jacquet_right_action(v, ctx, sharp)
                                                     : v.mat(sandwich(gamma_transport(sharp, ctx), ctx.w0_rep, o));
    if (!(lhs == v.mat(star_b(g)))) return false;
  }
  return true;
}

void reeder_jantzen(const HeckePtr& alg, Sampler& s, Tally& t, const SuiteConfig& cfg) {
  const RootDatum& d = alg->rd();
  const int n = cfg.samples > 0 ? cfg.samples : 10;
  const Orientation o = cfg.parabolic_orientation();
  for (int k = 0; k < n; ++k) {
    const UnramifiedCharacter chi = generic_character(s, d);
    const auto [map, rep] = reeder_check(alg, chi);
    t.check("reeder", rep.pass(), [&] { return json{{"chi", character_to_json(chi)}, {"failure", rep.failure}}; });
  }
  for (const LeviSet& l : all_levis(d)) {
    const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
    for (int k = 0; k < n; ++k) {
      const UnramifiedCharacter chi = generic_character(s, d);
      const auto [map, rep] = jantzen_check(principal_series(alg, chi, l), ctx);
      t.check("jantzen", rep.pass(), [&] {
        return json{{"levi", l.str()}, {"chi", character_to_json(chi)}, {"failure", rep.failure}};
      });
    }
    const UnramifiedCharacter chi = generic_character(s, d);
    t.check("twisted-jacquet", twisted_jacquet_agrees(principal_series(alg, chi, d.full_levi()), ctx, o),
            [&] { return json{{"levi", l.str()}, {"chi", character_to_json(chi)}}; });
  }
}

// ---------------------------------------------------------------------------
// conventions

struct VariantTest {
  std::string name;
  std::vector<std::string> variants;
  // Which variants hold for one preset.
  std::function<std::vector<bool>(const HeckePtr&, Sampler&)> run;
};

bool length_additive(const HeckePtr& alg, bool finite_left, bool dominant) {
  const RootDatum& d = alg->rd();
  for (const Coweight& m : box_points(d.rank(), kSandwichBox)) {
    if (!d.is_dominant(m)) continue;
    const ExtElt p{dominant ? m : -m, d.identity()};
    for (WeylElt w : d.elements()) {
      const ExtElt x{Coweight(static_cast<std::size_t>(d.rank())), w};
      const ExtElt a = finite_left ? x : p, b = finite_left ? p : x;
      if (!(im_element(alg, a) * im_element(alg, b) == im_element(alg, d.ext_mul(a, b)))) return false;
    }
  }
  return true;
}

std::vector<VariantTest> variant_tests() {
  const std::vector<std::string> ori{"as-written", "mirrored"};
  std::vector<VariantTest> v;
  // T_w T_{pi^mu} = T_{w pi^mu}: as written for antidominant mu.
  v.push_back({"length-additivity-finite-left", ori, [](const HeckePtr& alg, Sampler&) {
                 return std::vector<bool>{length_additive(alg, true, false), length_additive(alg, true, true)};
               }});
  // T_{pi^mu} T_w = T_{pi^mu w}: as written for dominant mu.
  v.push_back({"length-additivity-finite-right", ori, [](const HeckePtr& alg, Sampler&) {
                 return std::vector<bool>{length_additive(alg, false, true), length_additive(alg, false, false)};
               }});
  auto sandwich_test = [](bool bernstein) {
    return [bernstein](const HeckePtr& alg, Sampler&) {
      const RootDatum& d = alg->rd();
      const WeylElt w0 = d.longest_element(d.full_levi());
      bool as = true, mir = true;
      // Both sides are multiplicative in mu, so a box containing +-e_j decides it.
      for (const Coweight& mu : box_points(d.rank(), bernstein ? kSandwichBox : kOracleBox)) {
        const HeckeElt lhs = bernstein ? star_b(alg->theta(mu)) : star_im_theta_oracle(alg, mu);
        const HeckeElt mid = alg->theta(-d.act(w0, mu));
        as = as && lhs == sandwich(mid, w0, Orientation::as_written);
        mir = mir && lhs == sandwich(mid, w0, Orientation::mirrored);
      }
      return std::vector<bool>{as, mir};
    };
  };
  v.push_back({"opposition-sandwich-bernstein", ori, sandwich_test(true)});
  v.push_back({"opposition-sandwich-iwahori-matsumoto", ori, sandwich_test(false)});
  v.push_back({"parabolic-opposition", ori, [](const HeckePtr& alg, Sampler& s) {
                 std::vector<bool> ok{true, true};
                 for (const LeviSet& l : all_levis(alg->rd())) {
                   const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
                   auto omegas = generators(alg, ctx.conj_levi);
                   for (int k = 0; k < 20; ++k) omegas.push_back(s.element(alg, ctx.conj_levi, kSmallTerms, kSmallBox));
                   for (const auto& w : omegas) {
                     ok[0] = ok[0] && check_parabolic_opposition(w, ctx, Orientation::as_written);
                     ok[1] = ok[1] && check_parabolic_opposition(w, ctx, Orientation::mirrored);
                   }
                 }
                 return ok;
               }});
  // The maps built from the opposition given by the rule as written
  // (star_b) or by the mirrored rule (star_im).
  v.push_back({"reeder-map", ori, [](const HeckePtr& alg, Sampler& s) {
                 const UnramifiedCharacter chi = generic_character(s, alg->rd());
                 return std::vector<bool>{reeder_check(alg, chi, StarKind::b).second.pass(),
                                          reeder_check(alg, chi, StarKind::im).second.pass()};
               }});
  v.push_back({"jantzen-map", ori, [](const HeckePtr& alg, Sampler& s) {
                 std::vector<bool> ok{true, true};
                 for (const LeviSet& l : all_levis(alg->rd())) {
                   const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
                   const HModule v = principal_series(alg, generic_character(s, alg->rd()), l);
                   ok[0] = ok[0] && jantzen_check(v, ctx, StarKind::b).second.pass();
                   ok[1] = ok[1] && jantzen_check(v, ctx, StarKind::im).second.pass();
                 }
                 return ok;
               }});
  v.push_back({"twisted-jacquet-action", ori, [](const HeckePtr& alg, Sampler& s) {
                 std::vector<bool> ok{true, true};
                 const RootDatum& d = alg->rd();
                 const HModule v = principal_series(alg, generic_character(s, d), d.full_levi());
                 for (const LeviSet& l : all_levis(d)) {
                   const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), l);
                   ok[0] = ok[0] && twisted_jacquet_agrees(v, ctx, Orientation::as_written);
                   ok[1] = ok[1] && twisted_jacquet_agrees(v, ctx, Orientation::mirrored);
                 }
                 return ok;
               }});
  return v;
}

template <class F>
auto per_preset(const std::vector<std::string>& presets, F f) {
  using R = decltype(f(std::string{}));
  std::vector<std::future<R>> futs;
  for (const auto& p : presets) futs.push_back(std::async(std::launch::async, f, p));
  std::vector<R> out;
  for (auto& fu : futs) out.push_back(fu.get());
  return out;
}

const std::vector<std::pair<std::string, Body>>& bodies() {
  static const std::vector<std::pair<std::string, Body>> b = {
      {"presentation", presentation},
      {"associativity", associativity},
      {"iwahori-matsumoto", iwahori_matsumoto},
      {"modulus", modulus},
      {"opposition", opposition},
      {"length-formula", length_formula},
      {"freeness", freeness},
      {"parabolic-opposition", parabolic_opposition},
      {"induction", induction},
      {"jacquet", jacquet},
      {"reeder-jantzen", reeder_jantzen},
  };
  return b;
}

}  // namespace

std::vector<std::string> SuiteConfig::preset_list() const {
  return presets.empty() ? RootDatum::preset_names() : presets;
}

Orientation SuiteConfig::parabolic_orientation() const {
  if (orientation == "auto") return kParabolicOrientation;
  try {
    return parse_orientation(orientation);
  } catch (const std::exception&) {
    throw InputError("--orientation: expected auto, as-written or mirrored");
  }
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& suite, const std::string& preset) {
  // FNV-1a over the names, mixed with the seed by splitmix64.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : suite + "/" + preset) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  std::uint64_t z = seed + h + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> suite_names() {
  std::vector<std::string> n;
  for (const auto& [name, body] : bodies()) n.push_back(name);
  n.push_back("conventions");
  return n;
}

bool ConventionReport::consistent() const {
  for (const auto& id : identities)
    if (!id.global) return false;
  return true;
}

json ConventionReport::to_json() const {
  json ids = json::array();
  for (const auto& id : identities) {
    json per = json::object();
    for (const auto& [preset, vs] : id.passing) per[preset] = vs;
    ids.push_back(json{{"identity", id.name},
                       {"variants", id.variants},
                       {"passing", per},
                       {"global", id.global ? json(*id.global) : json(nullptr)}});
  }
  json global = json::object();
  for (const auto& id : identities) global[id.name] = id.global ? json(*id.global) : json(nullptr);
  return json{{"identities", ids}, {"global_assignment", global}, {"consistent", consistent()}};
}

ConventionReport convention_report(const SuiteConfig& cfg) {
  const auto presets = cfg.preset_list();
  const auto tests = variant_tests();
  const auto results = per_preset(presets, [&](const std::string& p) {
    const HeckePtr alg = Hecke::create(load_datum(p));
    std::vector<std::vector<bool>> r;
    for (const auto& t : tests) {
      Sampler s(derive_seed(cfg.seed, "conventions/" + t.name, p));
      r.push_back(t.run(alg, s));
    }
    return r;
  });
  ConventionReport rep;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    ConventionReport::Identity id{tests[i].name, tests[i].variants, {}, std::nullopt};
    std::vector<bool> everywhere(tests[i].variants.size(), true);
    for (std::size_t p = 0; p < presets.size(); ++p) {
      std::vector<std::string> ok;
      for (std::size_t v = 0; v < tests[i].variants.size(); ++v) {
        if (results[p][i][v]) ok.push_back(tests[i].variants[v]);
        everywhere[v] = everywhere[v] && results[p][i][v];
      }
      id.passing.emplace_back(presets[p], ok);
    }
    for (std::size_t v = 0; v < everywhere.size(); ++v)
      if (everywhere[v]) {
        id.global = tests[i].variants[v];
        break;
      }
    rep.identities.push_back(std::move(id));
  }
  return rep;
}

SuiteResult run_suite(const std::string& requested, const SuiteConfig& cfg) {
  const std::string name = requested == "bernstein" ? "presentation" : requested;
  if (name == "conventions") {
    const ConventionReport rep = convention_report(cfg);
    bool pass = rep.consistent();
    // The orientation used by "auto" must be the measured one.
    for (const auto& id : rep.identities)
      if ((id.name == "parabolic-opposition" || id.name == "twisted-jacquet-action") && id.global &&
          *id.global != to_string(kParabolicOrientation))
        pass = false;
    return SuiteResult{requested, pass, rep.to_json()};
  }
  auto it = std::find_if(bodies().begin(), bodies().end(), [&](const auto& b) { return b.first == name; });
  if (it == bodies().end()) throw InputError("unknown suite '" + requested + "'");
  cfg.parabolic_orientation();  // validate before fanning out
  const Body& body = it->second;
  const auto presets = cfg.preset_list();
  const auto runs = per_preset(presets, [&](const std::string& p) {
    const HeckePtr alg = Hecke::create(load_datum(p));
    Sampler s(derive_seed(cfg.seed, name, p));
    Tally t;
    body(alg, s, t, cfg);
    return t.to_json(alg->rd().name());
  });
  SuiteResult r{requested, true, json::object()};
  json arr = json::array();
  for (const auto& j : runs) {
    r.pass = r.pass && j["pass"].get<bool>();
    arr.push_back(j);
  }
  r.detail = json{{"suite", requested}, {"seed", std::to_string(cfg.seed)}, {"pass", r.pass}, {"presets", arr}};
  return r;
}

}  // namespace hk
