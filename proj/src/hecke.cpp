#include "hk/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<Coweight, std::uint32_t>& k) const { return k.first.hash() * 1000003u + k.second; }
};

using Accumulator = std::unordered_map<std::pair<Coweight, std::uint32_t>, Laurent, KeyHash>;

void add_to(Accumulator& acc, const Coweight& mu, WeylElt w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.try_emplace({mu, w.id}, c);
  if (!fresh) it->second += c;
}

std::vector<HeckeTerm> drain(Accumulator& acc) {
  std::vector<HeckeTerm> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.push_back(HeckeTerm{k.first, WeylElt{k.second}, std::move(c)});
  return out;
}

Laurent q_minus_one() { return Laurent::q() - Laurent(1); }

void require_same(const HeckeElt& a, const HeckeElt& b) {
  if (a.algebra() != b.algebra() && !a.rd().same_as(b.rd()))
    throw std::invalid_argument("datum mismatch: " + a.rd().name() + " vs " + b.rd().name());
}

// Above this many terms, T_x B (B in R) is computed one simple reflection at
// a time on the whole sum, so overlapping terms merge after every step.
constexpr std::size_t kStepwiseThreshold = 16;

void push_stepwise(const Hecke& alg, WeylElt x, const std::vector<const HeckeTerm*>& bs, Accumulator& out) {
  const RootDatum& d = alg.rd();
  Accumulator cur;
  for (const HeckeTerm* tb : bs) add_to(cur, tb->mu, d.identity(), tb->coeff);
  const Laurent qm1 = q_minus_one();
  const auto& word = d.reduced_word(x);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const auto& a = d.simple_roots()[static_cast<std::size_t>(i)];
    const auto& ac = d.simple_coroots()[static_cast<std::size_t>(i)];
    const WeylElt s = d.simple_reflection(i);
    Accumulator next;
    next.reserve(cur.size() * 2);
    for (const auto& [k, c] : cur) {
      if (c.is_zero()) continue;
      const Coweight& lam = k.first;
      const WeylElt u{k.second};
      const std::int64_t m = pairing(a, lam);
      for (const auto& [z, e] : alg.h0_product(s, u)) add_to(next, lam - static_cast<std::int32_t>(m) * ac, z, c * e);
      const Laurent cq = c * qm1;
      for (std::int64_t j = 0; j < m; ++j) add_to(next, lam - static_cast<std::int32_t>(j) * ac, u, cq);
      for (std::int64_t j = 1; j <= -m; ++j) add_to(next, lam + static_cast<std::int32_t>(j) * ac, u, -cq);
    }
    cur = std::move(next);
  }
  if (out.empty()) {
    out = std::move(cur);
  } else {
    for (const auto& [k, c] : cur) add_to(out, k.first, WeylElt{k.second}, c);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Hecke

Hecke::Hecke(RootDatumPtr datum) : datum_(std::move(datum)) {
  h0_.resize(datum_->weyl_order() * datum_->weyl_order());
}

std::shared_ptr<const Hecke> Hecke::create(RootDatumPtr datum) {
  return std::shared_ptr<const Hecke>(new Hecke(std::move(datum)));
}

HeckeElt Hecke::zero() const { return HeckeElt(shared_from_this(), {}); }

HeckeElt Hecke::one() const { return scalar(Laurent(1)); }

HeckeElt Hecke::scalar(const Laurent& c) const {
  return basis(Coweight(static_cast<std::size_t>(datum_->rank())), datum_->identity(), c);
}

HeckeElt Hecke::theta(const Coweight& mu) const { return basis(mu, datum_->identity()); }

HeckeElt Hecke::t(WeylElt w) const { return basis(Coweight(static_cast<std::size_t>(datum_->rank())), w); }

HeckeElt Hecke::basis(const Coweight& mu, WeylElt w, const Laurent& c) const {
  if (mu.rank() != static_cast<std::size_t>(datum_->rank()))
    throw std::invalid_argument("cocharacter of wrong rank for " + datum_->name());
  return HeckeElt(shared_from_this(), {HeckeTerm{mu, w, c}});
}

HeckeElt Hecke::t_inv(WeylElt w) const {
  // T_w^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} for w = s_1 ... s_k
  const Laurent qinv = Laurent::v_power(-2);
  HeckeElt r = one();
  for (int i : datum_->reduced_word(w)) {
    HeckeElt si = basis(Coweight(static_cast<std::size_t>(datum_->rank())), datum_->simple_reflection(i), qinv) +
                  scalar(qinv - Laurent(1));
    r = si * r;
  }
  return r;
}

HeckeElt Hecke::cross(int i, const Coweight& mu) const {
  if (i < 0 || i >= datum_->num_simple()) throw std::invalid_argument("simple index out of range");
  const auto& a = datum_->simple_roots()[static_cast<std::size_t>(i)];
  const auto& ac = datum_->simple_coroots()[static_cast<std::size_t>(i)];
  const std::int64_t m = pairing(a, mu);
  std::vector<HeckeTerm> terms;
  terms.push_back(HeckeTerm{mu - static_cast<std::int32_t>(m) * ac, datum_->simple_reflection(i), Laurent(1)});
  const Laurent qm1 = q_minus_one();
  for (std::int64_t k = 0; k < m; ++k) terms.push_back(HeckeTerm{mu - static_cast<std::int32_t>(k) * ac, datum_->identity(), qm1});
  for (std::int64_t k = 1; k <= -m; ++k)
    terms.push_back(HeckeTerm{mu + static_cast<std::int32_t>(k) * ac, datum_->identity(), -qm1});
  return HeckeElt(shared_from_this(), std::move(terms));
}

const std::vector<std::pair<WeylElt, Laurent>>& Hecke::h0_product(WeylElt x, WeylElt u) const {
  const std::size_t slot = x.id * datum_->weyl_order() + u.id;
  {
    std::lock_guard lock(mu_);
    if (h0_[slot]) return *h0_[slot];
  }
  std::vector<std::pair<WeylElt, Laurent>> out;
  const RootDatum& d = *datum_;
  if (x == d.identity()) {
    out.emplace_back(u, Laurent(1));
  } else {
    const int i = d.reduced_word(x).front();
    const auto& inner = h0_product(d.lmul(x, i), u);
    std::map<std::uint32_t, Laurent> acc;  // keyed by canonical rank
    for (const auto& [y, c] : inner) {
      const WeylElt sy = d.lmul(y, i);
      if (!d.left_descent(y, i)) {
        acc[d.canonical_rank(sy)] += c;
      } else {
        acc[d.canonical_rank(sy)] += c * Laurent::q();
        acc[d.canonical_rank(y)] += c * q_minus_one();
      }
    }
    for (auto& [rank, c] : acc)
      if (!c.is_zero()) out.emplace_back(d.elements()[rank], std::move(c));
  }
  std::lock_guard lock(mu_);
  if (!h0_[slot]) h0_[slot] = std::make_unique<std::vector<std::pair<WeylElt, Laurent>>>(std::move(out));
  return *h0_[slot];
}

const std::vector<HeckeTerm>& Hecke::push(WeylElt w, const Coweight& nu) const {
  PushKey key{w.id, nu};
  {
    std::lock_guard lock(mu_);
    auto it = push_.find(key);
    if (it != push_.end()) return it->second;
  }
  const RootDatum& d = *datum_;
  std::vector<HeckeTerm> out;
  if (w == d.identity()) {
    out.push_back(HeckeTerm{nu, w, Laurent(1)});
  } else {
    // T_w Theta_nu = T_s (T_{sw} Theta_nu), s the first letter of w
    const int i = d.reduced_word(w).front();
    const auto& inner = push(d.lmul(w, i), nu);
    const auto& a = d.simple_roots()[static_cast<std::size_t>(i)];
    const auto& ac = d.simple_coroots()[static_cast<std::size_t>(i)];
    const WeylElt s = d.simple_reflection(i);
    const Laurent qm1 = q_minus_one();
    Accumulator acc;
    for (const auto& [lam, u, c] : inner) {
      const std::int64_t m = pairing(a, lam);
      for (const auto& [z, e] : h0_product(s, u)) add_to(acc, lam - static_cast<std::int32_t>(m) * ac, z, c * e);
      const Laurent cq = c * qm1;
      for (std::int64_t k = 0; k < m; ++k) add_to(acc, lam - static_cast<std::int32_t>(k) * ac, u, cq);
      for (std::int64_t k = 1; k <= -m; ++k) add_to(acc, lam + static_cast<std::int32_t>(k) * ac, u, -cq);
    }
    out = drain(acc);
  }
  std::lock_guard lock(mu_);
  return push_.try_emplace(std::move(key), std::move(out)).first->second;
}

const std::vector<HeckeTerm>* Hecke::find_im(const ImKey& key) const {
  std::lock_guard lock(mu_);
  auto it = im_.find(key);
  return it == im_.end() ? nullptr : &it->second;
}

void Hecke::store_im(ImKey key, std::vector<HeckeTerm> terms) const {
  std::lock_guard lock(mu_);
  im_.try_emplace(std::move(key), std::move(terms));
}

// ---------------------------------------------------------------------------
// HeckeElt

HeckeElt::HeckeElt(HeckePtr alg, std::vector<HeckeTerm> terms) : alg_(std::move(alg)) {
  const RootDatum& d = alg_->rd();
  auto less = [&](const HeckeTerm& a, const HeckeTerm& b) {
    const auto na = a.mu.l1_norm(), nb = b.mu.l1_norm();
    if (na != nb) return na < nb;
    if (a.mu != b.mu) return a.mu < b.mu;
    return d.canonical_rank(a.w) < d.canonical_rank(b.w);
  };
  std::sort(terms.begin(), terms.end(), less);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mu == t.mu && terms_.back().w == t.w) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Laurent HeckeElt::coefficient(const Coweight& mu, WeylElt w) const {
  for (const auto& t : terms_)
    if (t.mu == mu && t.w == w) return t.coeff;
  return Laurent();
}

bool HeckeElt::supported_in(const LeviSet& levi) const {
  for (const auto& t : terms_)
    if (!rd().in_subgroup(t.w, levi)) return false;
  return true;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

HeckeElt HeckeElt::scaled(const Laurent& c) const {
  if (c.is_zero()) return HeckeElt(alg_, {});
  HeckeElt r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
  if (!a.alg_) return b;
  if (!b.alg_) return a;
  require_same(a, b);
  std::vector<HeckeTerm> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return HeckeElt(a.alg_, std::move(all));
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) { return a + (-b); }

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (!a.alg_ || !b.alg_) throw std::invalid_argument("product with an uninitialized Hecke element");
  require_same(a, b);
  const Hecke& alg = *a.alg_;
  // Group both factors by their finite part: a = sum_x A_x T_x and
  // b = sum_y B_y T_y with A_x, B_y in R.  Then T_x B_y is pushed once,
  // multiplied by T_y once per distinct (lambda, u), and only then shifted
  // by the terms of A_x.
  std::map<std::uint32_t, std::vector<const HeckeTerm*>> ga, gb;
  for (const auto& t : a.terms_) ga[t.w.id].push_back(&t);
  for (const auto& t : b.terms_) gb[t.w.id].push_back(&t);
  Accumulator acc;
  for (const auto& [x, as] : ga) {
    Accumulator right;  // T_x b
    for (const auto& [y, bs] : gb) {
      Accumulator mid;  // T_x B_y
      if (bs.size() >= kStepwiseThreshold) {
        push_stepwise(alg, WeylElt{x}, bs, mid);
      } else {
        for (const HeckeTerm* tb : bs)
          for (const auto& p : alg.push(WeylElt{x}, tb->mu)) add_to(mid, p.mu, p.w, tb->coeff * p.coeff);
      }
      for (const auto& [k, c] : mid) {
        if (c.is_zero()) continue;
        for (const auto& [z, e] : alg.h0_product(WeylElt{k.second}, WeylElt{y})) add_to(right, k.first, z, c * e);
      }
    }
    for (const auto& [k, c] : right) {
      if (c.is_zero()) continue;
      for (const HeckeTerm* ta : as) add_to(acc, ta->mu + k.first, WeylElt{k.second}, ta->coeff * c);
    }
  }
  return HeckeElt(a.alg_, drain(acc));
}

bool operator==(const HeckeElt& a, const HeckeElt& b) {
  if (a.alg_ && b.alg_) require_same(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto& x = a.terms_[k];
    const auto& y = b.terms_[k];
    if (x.mu != y.mu || x.w != y.w || x.coeff != y.coeff) return false;
  }
  return true;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string basis;
    if (!t.mu.is_zero()) basis = "Th" + t.mu.str();
    if (t.w != rd().identity()) {
      std::string word = "T[";
      const auto& letters = rd().reduced_word(t.w);
      for (std::size_t k = 0; k < letters.size(); ++k) word += (k ? "," : "") + std::to_string(letters[k] + 1);
      word += "]";
      basis += (basis.empty() ? "" : "*") + word;
    }
    std::string coeff = t.coeff.str();
    if (!out.empty()) out += " + ";
    if (basis.empty()) out += t.coeff.terms().size() > 1 ? "(" + coeff + ")" : coeff;
    else if (t.coeff.is_one()) out += basis;
    else out += "(" + coeff + ")*" + basis;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Iwahori-Matsumoto elements

int delta_half_exp(const RootDatum& d, const Coweight& mu, const LeviSet& levi) {
  return -static_cast<int>(pairing(d.two_rho(levi), mu));
}

namespace {

void require_levi_element(const RootDatum& d, const ExtElt& x, const LeviSet& levi) {
  if (x.mu.rank() != static_cast<std::size_t>(d.rank())) throw std::invalid_argument("cocharacter of wrong rank");
  if (!d.in_subgroup(x.w, levi))
    throw std::invalid_argument("Weyl part outside the Levi " + levi.str());
}

// T_x for x of length zero in the Levi's extended affine Weyl group.
HeckeElt im_length_zero(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  const Coweight lam = d.act(d.inverse(x.w), x.mu);
  return alg->t(x.w) * alg->basis(lam, d.identity(), Laurent::v_power(-delta_half_exp(d, lam, levi)));
}

// A simple reflection s of the Levi's affine Weyl group with l(xs) < l(x);
// returns (xs, index) where index < num_simple means a finite simple
// reflection and otherwise an affine reflection.
std::pair<ExtElt, std::size_t> right_descent(const RootDatum& d, const ExtElt& x, const LeviSet& levi,
                                             const std::vector<ExtElt>& affine) {
  const int len = d.ext_length(x, levi);
  for (int i : levi.indices()) {
    ExtElt y{x.mu, d.rmul(x.w, i)};
    if (d.ext_length(y, levi) < len) return {y, static_cast<std::size_t>(i)};
  }
  for (std::size_t k = 0; k < affine.size(); ++k) {
    ExtElt y = d.ext_mul(x, affine[k]);
    if (d.ext_length(y, levi) < len) return {y, static_cast<std::size_t>(d.num_simple()) + k};
  }
  throw std::logic_error("no right descent for an element of positive length");
}

HeckeElt generator(const HeckePtr& alg, std::size_t which, const LeviSet& levi, const std::vector<ExtElt>& affine,
                   bool inverse) {
  const RootDatum& d = alg->rd();
  if (which < static_cast<std::size_t>(d.num_simple())) {
    const WeylElt s = d.simple_reflection(static_cast<int>(which));
    return inverse ? alg->t_inv(s) : alg->t(s);
  }
  // T_{s_aff} = v^{<2rho, theta^vee>} Theta_{theta^vee} T_{s_theta}^{-1}
  const ExtElt& a = affine[which - static_cast<std::size_t>(d.num_simple())];
  const int e = -delta_half_exp(d, a.mu, levi);
  if (!inverse) return alg->basis(a.mu, d.identity(), Laurent::v_power(e)) * alg->t_inv(a.w);
  return alg->t(a.w) * alg->basis(-a.mu, d.identity(), Laurent::v_power(-e));
}

Hecke::ImKey im_key(Hecke::Derived kind, const LeviSet& levi, const ExtElt& x) {
  return Hecke::ImKey{kind, levi.indices(), x.mu, x.w.id};
}

HeckeElt im_descent_impl(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi,
                         const std::vector<ExtElt>& affine) {
  const RootDatum& d = alg->rd();
  if (d.ext_length(x, levi) == 0) return im_length_zero(alg, x, levi);
  auto [y, which] = right_descent(d, x, levi, affine);
  return im_descent_impl(alg, y, levi, affine) * generator(alg, which, levi, affine, false);
}

}  // namespace

HeckeElt im_element(const HeckePtr& alg, const ExtElt& x) { return im_element(alg, x, alg->rd().full_levi()); }

HeckeElt im_element(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  require_levi_element(d, x, levi);
  const auto key = im_key(Hecke::Derived::im, levi, x);
  if (const auto* hit = alg->find_im(key)) return HeckeElt(alg, *hit);

  HeckeElt r;
  if (x.mu.is_zero()) {
    r = alg->t(x.w);
  } else if (x.w == d.identity() && d.is_dominant(x.mu, levi)) {
    r = alg->basis(x.mu, x.w, Laurent::v_power(-delta_half_exp(d, x.mu, levi)));
  } else if (x.w == d.identity() && d.is_antidominant(x.mu, levi)) {
    const WeylElt w0 = d.longest_element(levi);
    const Coweight lam = d.act(w0, x.mu);
    r = alg->t(w0) * alg->basis(lam, x.w, Laurent::v_power(-delta_half_exp(d, lam, levi))) * alg->t_inv(w0);
  } else if (d.ext_length(x, levi) == 0) {
    r = im_length_zero(alg, x, levi);
  } else {
    const auto affine = d.affine_reflections(levi);
    auto [y, which] = right_descent(d, x, levi, affine);
    r = im_element(alg, y, levi) * generator(alg, which, levi, affine, false);
  }
  alg->store_im(key, r.terms());
  return r;
}

HeckeElt im_by_descent(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi) {
  require_levi_element(alg->rd(), x, levi);
  return im_descent_impl(alg, x, levi, alg->rd().affine_reflections(levi));
}

HeckeElt im_inverse(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  require_levi_element(d, x, levi);
  const auto key = im_key(Hecke::Derived::im_inverse, levi, x);
  if (const auto* hit = alg->find_im(key)) return HeckeElt(alg, *hit);
  HeckeElt r;
  if (x.w == d.identity() && d.is_dominant(x.mu, levi)) {
    r = alg->basis(-x.mu, x.w, Laurent::v_power(delta_half_exp(d, x.mu, levi)));
  } else if (x.w == d.identity() && d.is_antidominant(x.mu, levi)) {
    const WeylElt w0 = d.longest_element(levi);
    const Coweight lam = d.act(w0, x.mu);
    r = alg->t(w0) * alg->basis(-lam, x.w, Laurent::v_power(delta_half_exp(d, lam, levi))) * alg->t_inv(w0);
  } else if (d.ext_length(x, levi) == 0) {
    r = im_element(alg, d.ext_inv(x), levi);
  } else {
    // T_x = T_{xs} T_s, so T_x^{-1} = T_s^{-1} T_{xs}^{-1}
    const auto affine = d.affine_reflections(levi);
    auto [y, which] = right_descent(d, x, levi, affine);
    r = generator(alg, which, levi, affine, true) * im_inverse(alg, y, levi);
  }
  alg->store_im(key, r.terms());
  return r;
}

// ---------------------------------------------------------------------------
// oppositions

HeckeElt star_im(const HeckeElt& h) { return star_im(h, h.rd().full_levi()); }

namespace {

// Sum over the terms c Theta_mu T_w of h of
//   c T_{w^{-1}} left Theta_{-w0 mu} right,
// w0 the longest element of W_L.  Terms are grouped by w, so each finite
// part costs one product.
HeckeElt star_via_w0(const HeckeElt& h, const LeviSet& levi, const HeckeElt& left, const HeckeElt& right) {
  const HeckePtr& alg = h.algebra();
  const RootDatum& d = alg->rd();
  if (!h.supported_in(levi)) throw std::invalid_argument("element not supported in the Levi " + levi.str());
  const WeylElt w0 = d.longest_element(levi);
  std::map<std::uint32_t, std::vector<HeckeTerm>> groups;
  for (const auto& t : h.terms()) groups[t.w.id].push_back(HeckeTerm{-d.act(w0, t.mu), d.identity(), t.coeff});
  HeckeElt mid = alg->zero();
  for (auto& [w, terms] : groups) mid += alg->t(d.inverse(WeylElt{w})) * left * HeckeElt(alg, std::move(terms));
  return mid * right;
}

}  // namespace

// star_im(Theta_mu) inside H_L: for dominant lambda, T_{pi^lambda} is a
// multiple of Theta_lambda and T_{pi^{-lambda}} a multiple of
// T_{w0} Theta_{-w0 lambda} T_{w0}^{-1}; the scalars cancel, and since both
// sides are multiplicative in mu this gives
// star_im(Theta_mu) = T_{w0} Theta_{-w0 mu} T_{w0}^{-1} for every mu.
HeckeElt star_im(const HeckeElt& h, const LeviSet& levi) {
  const WeylElt w0 = h.rd().longest_element(levi);
  return star_via_w0(h, levi, h.algebra()->t(w0), h.algebra()->t_inv(w0));
}

HeckeElt star_b(const HeckeElt& h) { return star_b(h, h.rd().full_levi()); }

// star_b(Theta_mu) = T_{w0}^{-1} Theta_{-w0 mu} T_{w0}, star_b(T_w) = T_{w^{-1}}
HeckeElt star_b(const HeckeElt& h, const LeviSet& levi) {
  const WeylElt w0 = h.rd().longest_element(levi);
  return star_via_w0(h, levi, h.algebra()->t_inv(w0), h.algebra()->t(w0));
}

HeckeElt transpose(const HeckeElt& h) {
  const HeckePtr& alg = h.algebra();
  HeckeElt r = alg->zero();
  for (const auto& t : h.terms()) r += alg->t(h.rd().inverse(t.w)) * alg->basis(t.mu, h.rd().identity(), t.coeff);
  return r;
}

std::map<std::uint32_t, std::vector<std::pair<Coweight, Laurent>>> decompose_R(const HeckeElt& h) {
  std::map<std::uint32_t, std::vector<std::pair<Coweight, Laurent>>> out;
  for (const auto& t : h.terms()) out[t.w.id].emplace_back(t.mu, t.coeff);
  return out;
}

// ---------------------------------------------------------------------------
// specialization v -> 1

namespace {

std::vector<GroupTerm> normalize_group(const RootDatum& d, Accumulator& acc) {
  std::vector<GroupTerm> out;
  for (auto& t : drain(acc)) {
    Rational c = t.coeff.evaluate(Rational(1));
    if (!c.is_zero()) out.push_back(GroupTerm{ExtElt{t.mu, t.w}, c});
  }
  std::sort(out.begin(), out.end(), [&](const GroupTerm& a, const GroupTerm& b) {
    if (a.x.mu != b.x.mu) return a.x.mu < b.x.mu;
    return d.canonical_rank(a.x.w) < d.canonical_rank(b.x.w);
  });
  return out;
}

}  // namespace

std::vector<GroupTerm> specialize_at_one(const HeckeElt& h) {
  Accumulator acc;
  for (const auto& t : h.terms()) add_to(acc, t.mu, t.w, t.coeff);
  return normalize_group(h.rd(), acc);
}

std::vector<GroupTerm> group_algebra_mul(const RootDatum& d, const std::vector<GroupTerm>& a,
                                         const std::vector<GroupTerm>& b) {
  Accumulator acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      ExtElt z = d.ext_mul(x.x, y.x);
      add_to(acc, z.mu, z.w, Laurent(x.coeff * y.coeff));
    }
  return normalize_group(d, acc);
}

}  // namespace hk
