#include "hk/modules.hpp"

#include <mutex>
#include <stdexcept>

namespace hk {

// ---------------------------------------------------------------------------
// characters and stars

UnramifiedCharacter::UnramifiedCharacter(std::vector<RationalFunction> basis_values) : vals_(std::move(basis_values)) {
  for (std::size_t j = 0; j < vals_.size(); ++j)
    if (vals_[j].is_zero()) throw std::invalid_argument("character value at e_" + std::to_string(j + 1) + " is zero");
}

RationalFunction UnramifiedCharacter::value(const Coweight& mu) const {
  if (mu.rank() != vals_.size()) throw std::invalid_argument("character rank mismatch");
  RationalFunction r(1);
  for (std::size_t j = 0; j < vals_.size(); ++j)
    if (mu[j] != 0) r *= vals_[j].pow(mu[j]);
  return r;
}

UnramifiedCharacter UnramifiedCharacter::twist(const RootDatum& d, WeylElt w) const {
  const WeylElt wi = d.inverse(w);
  std::vector<RationalFunction> out;
  for (std::size_t j = 0; j < vals_.size(); ++j) {
    Coweight e(vals_.size());
    e[j] = 1;
    out.push_back(value(d.act(wi, e)));
  }
  return UnramifiedCharacter(std::move(out));
}

UnramifiedCharacter UnramifiedCharacter::inverse() const {
  std::vector<RationalFunction> out;
  for (const auto& x : vals_) out.push_back(x.inverse());
  return UnramifiedCharacter(std::move(out));
}

std::string to_string(StarKind k) { return k == StarKind::im ? "im" : "b"; }

StarKind parse_star(const std::string& s) {
  if (s == "im") return StarKind::im;
  if (s == "b") return StarKind::b;
  throw std::invalid_argument("unknown opposition '" + s + "' (expected im or b)");
}

HeckeElt apply_star(const HeckeElt& h, StarKind k, const LeviSet& levi) {
  return k == StarKind::im ? star_im(h, levi) : star_b(h, levi);
}

// ---------------------------------------------------------------------------
// HModule

struct HModule::Cache {
  std::mutex mu;
  std::map<Coweight, KMatrix> theta_pow;
  std::map<std::uint32_t, KMatrix> t_elt;
  std::vector<std::optional<KMatrix>> theta_inv;
  std::vector<bool> theta_inv_done;
};

HModule::HModule(HeckePtr alg, LeviSet levi, std::size_t dim, std::map<int, KMatrix> t, std::vector<KMatrix> theta)
    : alg_(std::move(alg)), levi_(std::move(levi)), dim_(dim), t_(std::move(t)), theta_(std::move(theta)),
      cache_(std::make_shared<Cache>()) {
  if (theta_.size() != static_cast<std::size_t>(rd().rank()))
    throw std::invalid_argument("module needs one Theta matrix per lattice coordinate");
  for (int i : levi_.indices())
    if (!t_.count(i)) throw std::invalid_argument("module is missing the T matrix of s" + std::to_string(i + 1));
  for (const auto& [i, m] : t_)
    if (!levi_.contains(i)) throw std::invalid_argument("T matrix of s" + std::to_string(i + 1) + " outside the Levi");
  cache_->theta_inv.resize(theta_.size());
  cache_->theta_inv_done.resize(theta_.size());
}

const KMatrix& HModule::t(int i) const {
  auto it = t_.find(i);
  if (it == t_.end()) throw std::invalid_argument("s" + std::to_string(i + 1) + " is not in the module's Levi");
  return it->second;
}

KMatrix HModule::theta_power(const Coweight& mu) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->theta_pow.find(mu);
    if (it != cache_->theta_pow.end()) return it->second;
  }
  KMatrix r = KMatrix::identity(dim_);
  for (std::size_t j = 0; j < mu.rank(); ++j) {
    if (mu[j] == 0) continue;
    const KMatrix* base = &theta_[j];
    if (mu[j] < 0) {
      std::lock_guard lock(cache_->mu);
      if (!cache_->theta_inv_done[j]) {
        cache_->theta_inv[j] = theta_[j].inverse();
        cache_->theta_inv_done[j] = true;
      }
      if (!cache_->theta_inv[j]) throw std::domain_error("Theta matrix of e_" + std::to_string(j + 1) + " is singular");
      base = &*cache_->theta_inv[j];
    }
    for (int k = 0; k < std::abs(mu[j]); ++k) r = r * *base;
  }
  std::lock_guard lock(cache_->mu);
  cache_->theta_pow.emplace(mu, r);
  return r;
}

KMatrix HModule::t_elt(WeylElt w) const {
  if (!rd().in_subgroup(w, levi_)) throw std::invalid_argument("Weyl element outside the module's Levi");
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->t_elt.find(w.id);
    if (it != cache_->t_elt.end()) return it->second;
  }
  KMatrix r = KMatrix::identity(dim_);
  for (int i : rd().reduced_word(w)) r = r * t(i);
  std::lock_guard lock(cache_->mu);
  cache_->t_elt.emplace(w.id, r);
  return r;
}

KMatrix HModule::mat(const HeckeElt& h) const {
  if (!h.supported_in(levi_)) throw std::invalid_argument("element not supported in the module's Levi " + levi_.str());
  std::map<std::uint32_t, KMatrix> by_w;
  for (const auto& t : h.terms()) {
    auto [it, fresh] = by_w.try_emplace(t.w.id, dim_, dim_);
    it->second += theta_power(t.mu).scaled(RationalFunction(t.coeff));
  }
  KMatrix r(dim_, dim_);
  for (const auto& [w, m] : by_w) r += m * t_elt(WeylElt{w});
  return r;
}

// ---------------------------------------------------------------------------
// validation

namespace {

std::string sname(int i) { return "s" + std::to_string(i + 1); }

Coweight unit(std::size_t rank, std::size_t j, int sign) {
  Coweight e(rank);
  e[j] = sign;
  return e;
}

}  // namespace

ModuleReport validate_module(const HModule& v) {
  const RootDatum& d = v.rd();
  const std::size_t n = v.dim();
  const KMatrix id = KMatrix::identity(n);
  auto fail = [](std::string msg) { return ModuleReport{false, std::move(msg)}; };
  for (const auto& [i, m] : v.t_mats())
    if (m.rows() != n || m.cols() != n) return fail("shape of T(" + sname(i) + ")");
  for (std::size_t j = 0; j < v.theta_mats().size(); ++j)
    if (v.theta(j).rows() != n || v.theta(j).cols() != n) return fail("shape of Theta(e_" + std::to_string(j + 1) + ")");

  for (std::size_t a = 0; a < v.theta_mats().size(); ++a)
    for (std::size_t b = a + 1; b < v.theta_mats().size(); ++b)
      if (v.theta(a) * v.theta(b) != v.theta(b) * v.theta(a))
        return fail("Theta matrices do not commute (e_" + std::to_string(a + 1) + ",e_" + std::to_string(b + 1) + ")");
  for (std::size_t j = 0; j < v.theta_mats().size(); ++j)
    if (v.theta(j).det().is_zero()) return fail("Theta(e_" + std::to_string(j + 1) + ") is singular");

  const RationalFunction q(Laurent::q());
  for (const auto& [i, m] : v.t_mats())
    if ((m - id.scaled(q)) * (m + id) != KMatrix(n, n)) return fail("quadratic relation at " + sname(i));

  const auto& idx = v.levi().indices();
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const int i = idx[a], j = idx[b];
      const int prod = d.cartan(i, j) * d.cartan(j, i);
      const int m = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      KMatrix x = id, y = id;
      for (int k = 0; k < m; ++k) {
        x = x * v.t(k % 2 == 0 ? i : j);
        y = y * v.t(k % 2 == 0 ? j : i);
      }
      if (x != y) return fail("braid relation between " + sname(i) + " and " + sname(j));
    }

  const HeckePtr& alg = v.algebra();
  for (int i : idx)
    for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
      for (int sign : {1, -1}) {
        const Coweight e = unit(static_cast<std::size_t>(d.rank()), j, sign);
        if (v.t(i) * v.theta_power(e) != v.mat(alg->cross(i, e)))
          return fail("Bernstein relation at " + sname(i) + ", mu = " + e.str());
      }
  return {};
}

// ---------------------------------------------------------------------------
// constructions

HModule principal_series(const HeckePtr& alg, const UnramifiedCharacter& chi, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  if (chi.rank() != static_cast<std::size_t>(d.rank())) throw std::invalid_argument("character rank mismatch");
  const auto basis = d.weyl_subgroup(levi);
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k].id] = k;
  auto action = [&](const HeckeElt& g) {
    KMatrix m(basis.size(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const HeckeElt h = alg->t(basis[k]) * g;
      for (const auto& t : h.terms()) m(k, index.at(t.w.id)) += chi.value(t.mu) * RationalFunction(t.coeff);
    }
    return m;
  };
  std::map<int, KMatrix> tm;
  for (int i : levi.indices()) tm.emplace(i, action(alg->t(d.simple_reflection(i))));
  std::vector<KMatrix> th;
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
    th.push_back(action(alg->theta(unit(static_cast<std::size_t>(d.rank()), j, 1))));
  return HModule(alg, levi, basis.size(), std::move(tm), std::move(th));
}

HModule character_module(const HeckePtr& alg, const UnramifiedCharacter& chi) {
  return principal_series(alg, chi, LeviSet{});
}

namespace {

std::map<std::uint32_t, std::size_t> index_of(const std::vector<WeylElt>& xs) {
  std::map<std::uint32_t, std::size_t> m;
  for (std::size_t k = 0; k < xs.size(); ++k) m[xs[k].id] = k;
  return m;
}

// Rows v_i (x) h of the induced module, i < dim V.
KMatrix tensor_rows(const HModule& v, const ParabolicCtx& ctx, const std::map<std::uint32_t, std::size_t>& rep_index,
                    const HeckeElt& h) {
  const std::size_t dv = v.dim();
  KMatrix out(dv, dv * ctx.reps.size());
  for (const auto& p : decompose_over_levi(h, ctx.levi, Side::left))
    out.set_block(0, rep_index.at(p.rep.id) * dv, v.mat(p.coeff));
  return out;
}

std::vector<HeckeElt> generators(const HeckePtr& alg, const LeviSet& levi, bool with_inverses) {
  const RootDatum& d = alg->rd();
  std::vector<HeckeElt> g;
  for (int i : levi.indices()) g.push_back(alg->t(d.simple_reflection(i)));
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j) {
    g.push_back(alg->theta(unit(static_cast<std::size_t>(d.rank()), j, 1)));
    if (with_inverses) g.push_back(alg->theta(unit(static_cast<std::size_t>(d.rank()), j, -1)));
  }
  return g;
}

}  // namespace

HModule induce(const HModule& v, const ParabolicCtx& ctx) {
  if (v.levi() != ctx.levi) throw std::invalid_argument("module Levi " + v.levi().str() + " differs from " + ctx.levi.str());
  if (auto rep = validate_module(v); !rep.pass) throw std::invalid_argument("invalid module: " + rep.failure);
  const HeckePtr& alg = v.algebra();
  const RootDatum& d = alg->rd();
  const auto rep_index = index_of(ctx.reps);
  const std::size_t dv = v.dim(), n = dv * ctx.reps.size();
  auto action = [&](const HeckeElt& g) {
    KMatrix m(n, n);
    for (std::size_t k = 0; k < ctx.reps.size(); ++k)
      m.set_block(k * dv, 0, tensor_rows(v, ctx, rep_index, alg->t(ctx.reps[k]) * g));
    return m;
  };
  std::map<int, KMatrix> tm;
  for (int i = 0; i < d.num_simple(); ++i) tm.emplace(i, action(alg->t(d.simple_reflection(i))));
  std::vector<KMatrix> th;
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
    th.push_back(action(alg->theta(unit(static_cast<std::size_t>(d.rank()), j, 1))));
  return HModule(alg, d.full_levi(), n, std::move(tm), std::move(th));
}

HModule restrict_levi(const HModule& v, const LeviSet& sub) {
  if (!sub.subset_of(v.levi())) throw std::invalid_argument("Levi " + sub.str() + " is not inside " + v.levi().str());
  std::map<int, KMatrix> tm;
  for (int i : sub.indices()) tm.emplace(i, v.t(i));
  return HModule(v.algebra(), sub, v.dim(), std::move(tm), v.theta_mats());
}

KMatrix opposite_action(const HModule& v, const HeckeElt& h, StarKind k) { return v.mat(apply_star(h, k, v.levi())); }

HModule conjugation_twist(const HModule& v, const ParabolicCtx& ctx) {
  if (v.levi() != ctx.levi) throw std::invalid_argument("module Levi " + v.levi().str() + " differs from " + ctx.levi.str());
  const RootDatum& d = v.rd();
  std::map<int, KMatrix> tm;
  for (int i : ctx.conj_levi.indices()) tm.emplace(i, v.t_elt(ctx.conjugate(d.simple_reflection(i))));
  std::vector<KMatrix> th;
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
    th.push_back(v.theta_power(d.act(ctx.w0_rep, unit(static_cast<std::size_t>(d.rank()), j, 1))));
  return HModule(v.algebra(), ctx.conj_levi, v.dim(), std::move(tm), std::move(th));
}

// ---------------------------------------------------------------------------
// Reeder and Jantzen

namespace {

void finish(ModuleMap& map, MapReport& rep) {
  map.source_dim = map.matrix.rows();
  map.target_dim = map.matrix.cols();
  rep.rank = map.matrix.rank();
  rep.bijective = map.matrix.is_square() && rep.rank == map.matrix.rows();
  if (rep.failure.empty() && !rep.bijective) rep.failure = "map is singular (rank " + std::to_string(rep.rank) + ")";
  if (rep.well_defined) map.verified.push_back("welldef");
  if (rep.equivariant) map.verified.push_back("equivariant");
  if (rep.bijective) map.verified.push_back("bijective");
}

}  // namespace

std::pair<ModuleMap, MapReport> reeder_check(const HeckePtr& alg, const UnramifiedCharacter& chi, StarKind star) {
  const RootDatum& d = alg->rd();
  const LeviSet full = d.full_levi();
  const WeylElt w0 = d.longest_element(full);
  const UnramifiedCharacter psi = chi.twist(d, w0);
  const HModule target = principal_series(alg, chi.inverse(), full);
  const auto& basis = d.elements();
  const auto index = index_of(basis);
  const std::size_t n = basis.size();
  const std::size_t w0_row = index.at(w0.id);

  ModuleMap map;
  MapReport rep;
  map.matrix = KMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const KMatrix img = target.mat(apply_star(alg->t(basis[k]), star, full));
    for (std::size_t c = 0; c < n; ++c) map.matrix(k, c) = img(w0_row, c);
  }

  // t_{w0} star(Theta_mu) = psi(mu) t_{w0}
  rep.well_defined = true;
  std::vector<Coweight> mus;
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
    for (int s : {1, -1}) mus.push_back(unit(static_cast<std::size_t>(d.rank()), j, s));
  for (const auto& mu : mus) {
    const KMatrix img = target.mat(apply_star(alg->theta(mu), star, full));
    for (std::size_t c = 0; c < n; ++c) {
      const RationalFunction want = c == w0_row ? psi.value(mu) : RationalFunction();
      if (img(w0_row, c) != want) {
        rep.well_defined = false;
        rep.failure = "well-definedness fails at mu = " + mu.str();
        break;
      }
    }
    if (!rep.well_defined) break;
  }

  // left action on H (x)_R C_psi: g T_x = sum_y T_y r_y, r_y in R acting by psi
  rep.equivariant = true;
  for (const auto& g : generators(alg, full, false)) {
    KMatrix left(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& p : decompose_over_levi(g * alg->t(basis[k]), LeviSet{}, Side::right)) {
        RationalFunction c;
        for (const auto& t : p.coeff.terms()) c += psi.value(t.mu) * RationalFunction(t.coeff);
        left(k, index.at(p.rep.id)) = c;
      }
    if (left * map.matrix != map.matrix * target.mat(apply_star(g, star, full))) {
      rep.equivariant = false;
      if (rep.failure.empty()) rep.failure = "equivariance fails at " + g.str();
      break;
    }
  }
  finish(map, rep);
  return {std::move(map), std::move(rep)};
}

std::pair<ModuleMap, MapReport> jantzen_check(const HModule& v, const ParabolicCtx& ctx, StarKind star) {
  const HeckePtr& alg = v.algebra();
  const RootDatum& d = alg->rd();
  const LeviSet full = d.full_levi();
  const HModule target = induce(v, ctx);
  const auto rep_index = index_of(ctx.reps);
  const std::size_t dv = v.dim();

  // (w0')V^op: omega' in H_{M'} acts on the left by v -> v * A(omega').
  auto twisted_op = [&](const HeckeElt& omega) {
    return v.mat(apply_star(gamma_transport(omega, ctx), star, ctx.levi));
  };
  // Source basis T_x (x) v_i, x = w^{-1} for w in ^{M'}W.
  std::vector<WeylElt> xs;
  for (WeylElt w : d.min_coset_reps(ctx.conj_levi)) xs.push_back(d.inverse(w));
  const auto x_index = index_of(xs);
  const std::size_t n = dv * xs.size();

  ModuleMap map;
  MapReport rep;
  map.matrix = KMatrix(n, dv * ctx.reps.size());
  const HeckeElt tw = alg->t(ctx.w0_rep);
  for (std::size_t k = 0; k < xs.size(); ++k)
    map.matrix.set_block(k * dv, 0, tensor_rows(v, ctx, rep_index, tw * apply_star(alg->t(xs[k]), star, full)));

  // v (x) T_{w0'} star(omega') = (omega' . v) (x) T_{w0'} for generators of H_{M'}
  rep.well_defined = true;
  const KMatrix base = tensor_rows(v, ctx, rep_index, tw);
  for (const auto& g : generators(alg, ctx.conj_levi, true)) {
    if (tensor_rows(v, ctx, rep_index, tw * apply_star(g, star, full)) != twisted_op(g) * base) {
      rep.well_defined = false;
      rep.failure = "well-definedness fails at " + g.str();
      break;
    }
  }

  rep.equivariant = true;
  for (const auto& g : generators(alg, full, false)) {
    KMatrix left(n, n);
    for (std::size_t k = 0; k < xs.size(); ++k)
      for (const auto& p : decompose_over_levi(g * alg->t(xs[k]), ctx.conj_levi, Side::right))
        left.set_block(k * dv, x_index.at(p.rep.id) * dv, twisted_op(p.coeff));
    if (left * map.matrix != map.matrix * target.mat(apply_star(g, star, full))) {
      rep.equivariant = false;
      if (rep.failure.empty()) rep.failure = "equivariance fails at " + g.str();
      break;
    }
  }
  finish(map, rep);
  return {std::move(map), std::move(rep)};
}

LeviSet levi_with_conjugate(const RootDatum& d, const LeviSet& conj) {
  const int n = d.num_simple();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    LeviSet m(idx);
    if (d.conjugate_levi(m).first == conj) return m;
  }
  throw std::logic_error("no Levi has conjugate " + conj.str());
}

KMatrix jacquet_right_action(const HModule& v, const ParabolicCtx& ctx, const HeckeElt& omega) {
  return v.mat(sandwich(gamma_transport(omega, ctx), ctx.w0_rep, Orientation::as_written));
}

ModuleReport stage_compatibility_check(const HeckePtr& alg, const UnramifiedCharacter& chi, const LeviSet& levi) {
  const RootDatum& d = alg->rd();
  const ParabolicCtx ctx = ParabolicCtx::make(alg->datum(), levi);
  const HModule small = principal_series(alg, chi, levi);
  const HModule ind = induce(small, ctx);
  const HModule full = principal_series(alg, chi, d.full_levi());
  const auto full_index = index_of(d.elements());
  const std::size_t dv = small.dim();
  std::vector<std::size_t> perm(ind.dim());
  for (std::size_t k = 0; k < ctx.reps.size(); ++k)
    for (std::size_t i = 0; i < dv; ++i) perm[k * dv + i] = full_index.at(d.mul(ctx.levi_weyl[i], ctx.reps[k]).id);
  auto same = [&](const KMatrix& a, const KMatrix& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) != b(perm[r], perm[c])) return false;
    return true;
  };
  if (ind.dim() != full.dim()) return {false, "dimension mismatch"};
  if (auto r = validate_module(ind); !r.pass) return {false, "induced module invalid: " + r.failure};
  for (int i = 0; i < d.num_simple(); ++i)
    if (!same(ind.t(i), full.t(i))) return {false, "T(" + sname(i) + ") differs"};
  for (std::size_t j = 0; j < static_cast<std::size_t>(d.rank()); ++j)
    if (!same(ind.theta(j), full.theta(j))) return {false, "Theta(e_" + std::to_string(j + 1) + ") differs"};
  return {};
}

bool jacquet_spectrum_check(const HeckePtr& alg, const UnramifiedCharacter& chi, const Coweight& mu) {
  const RootDatum& d = alg->rd();
  const HModule r = restrict_levi(principal_series(alg, chi, d.full_levi()), LeviSet{});
  std::vector<RationalFunction> roots;
  for (WeylElt w : d.elements()) roots.push_back(chi.value(d.act(d.inverse(w), mu)));
  return r.theta_power(mu).char_poly() == poly_from_roots(roots);
}

}  // namespace hk
