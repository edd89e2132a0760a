#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hk/hecke.hpp"
#include "hk/matrix.hpp"
#include "hk/parabolic.hpp"

namespace hk {

/// Unramified character of X_*, given by its values on the coordinate basis
/// e_1 .. e_rank.
class UnramifiedCharacter {
 public:
  UnramifiedCharacter() = default;
  explicit UnramifiedCharacter(std::vector<RationalFunction> basis_values);  // throws on a zero value

  std::size_t rank() const { return vals_.size(); }
  const std::vector<RationalFunction>& values() const { return vals_; }
  RationalFunction value(const Coweight& mu) const;
  /// chi^w(mu) = chi(w^{-1} mu)
  UnramifiedCharacter twist(const RootDatum& d, WeylElt w) const;
  UnramifiedCharacter inverse() const;
  friend bool operator==(const UnramifiedCharacter&, const UnramifiedCharacter&) = default;

 private:
  std::vector<RationalFunction> vals_;
};

/// Which anti-map models opposition.
enum class StarKind { im, b };
std::string to_string(StarKind k);
StarKind parse_star(const std::string& s);
/// star_im or star_b of an element of H_L, computed inside H_L.
HeckeElt apply_star(const HeckeElt& h, StarKind k, const LeviSet& levi);

/// Finite-dimensional right module over H_L, given by the matrices of T_{s_i}
/// (i in L) and Theta_{e_j} (every lattice coordinate j), acting on row
/// vectors.
class HModule {
 public:
  HModule(HeckePtr alg, LeviSet levi, std::size_t dim, std::map<int, KMatrix> t, std::vector<KMatrix> theta);

  const HeckePtr& algebra() const { return alg_; }
  const RootDatum& rd() const { return alg_->rd(); }
  const LeviSet& levi() const { return levi_; }
  std::size_t dim() const { return dim_; }
  const std::map<int, KMatrix>& t_mats() const { return t_; }
  const std::vector<KMatrix>& theta_mats() const { return theta_; }
  const KMatrix& t(int i) const;
  const KMatrix& theta(std::size_t j) const { return theta_.at(j); }

  /// Matrix of Theta_mu; throws if a needed Theta matrix is singular.
  KMatrix theta_power(const Coweight& mu) const;
  /// Matrix of T_w for w in W_L.
  KMatrix t_elt(WeylElt w) const;
  /// Matrix of an element of H_L.
  KMatrix mat(const HeckeElt& h) const;

 private:
  struct Cache;
  HeckePtr alg_;
  LeviSet levi_;
  std::size_t dim_ = 0;
  std::map<int, KMatrix> t_;
  std::vector<KMatrix> theta_;
  std::shared_ptr<Cache> cache_;
};

struct ModuleReport {
  bool pass = true;
  std::string failure;  // first violated relation
};
/// Shapes, commuting invertible Theta's, quadratic, braid and Bernstein
/// relations (the latter for every s in L and mu = +-e_j).
ModuleReport validate_module(const HModule& v);

/// C_chi (x)_R H_L on the basis 1 (x) T_w, w in W_L in canonical order.
HModule principal_series(const HeckePtr& alg, const UnramifiedCharacter& chi, const LeviSet& levi);
/// V (x)_{H_M} H on the basis v_i (x) T_{w'}, index k * dim V + i for the
/// k-th element of ^M W.  V must be a valid module over H_M.
HModule induce(const HModule& v, const ParabolicCtx& ctx);
/// Forgets the T's outside sub; sub must lie in the module's Levi.
HModule restrict_levi(const HModule& v, const LeviSet& sub);
/// The opposite (left) action of h: m -> m * mat(star(h)).
KMatrix opposite_action(const HModule& v, const HeckeElt& h, StarKind k);
/// Module over H_{M'} on the same space: omega' acts as gamma(omega').
HModule conjugation_twist(const HModule& v, const ParabolicCtx& ctx);
/// The 1-dimensional module C_chi over H_{empty} = R.
HModule character_module(const HeckePtr& alg, const UnramifiedCharacter& chi);

/// Linear map between bases of two modules; row k is the image of basis
/// vector k.
struct ModuleMap {
  std::size_t source_dim = 0, target_dim = 0;
  KMatrix matrix;
  std::vector<std::string> verified;  // subset of welldef, equivariant, bijective
};

struct MapReport {
  bool well_defined = false;
  bool equivariant = false;
  bool bijective = false;
  std::size_t rank = 0;
  std::string failure;
  bool pass() const { return well_defined && equivariant && bijective; }
};

/// h (x) 1 -> t_{w0} h^* from H (x)_R C_{chi^{w0}} to C_{chi^{-1}} (x)_R H.
std::pair<ModuleMap, MapReport> reeder_check(const HeckePtr& alg, const UnramifiedCharacter& chi,
                                             StarKind star = StarKind::b);
/// h (x) v -> v (x) T_{w0'} h^* from H (x)_{H_{M'}} (w0')V^op to V (x)_{H_M} H.
std::pair<ModuleMap, MapReport> jantzen_check(const HModule& v, const ParabolicCtx& ctx,
                                              StarKind star = StarKind::b);

/// The Levi M whose conjugate is conj.
LeviSet levi_with_conjugate(const RootDatum& d, const LeviSet& conj);
/// Matrix of T_{w0'}^{-1} gamma(omega) T_{w0'} on V, omega in H_{M'}; ctx
/// is the context of M.
KMatrix jacquet_right_action(const HModule& v, const ParabolicCtx& ctx, const HeckeElt& omega);

/// induce(principal_series(chi, L), L) == principal_series(chi, full) after
/// the basis permutation (w'', w') <-> w''w'.
ModuleReport stage_compatibility_check(const HeckePtr& alg, const UnramifiedCharacter& chi, const LeviSet& levi);

/// Characteristic polynomial of Theta_mu on the principal series restricted
/// to R against prod_w (x - chi(w^{-1} mu)).
bool jacquet_spectrum_check(const HeckePtr& alg, const UnramifiedCharacter& chi, const Coweight& mu);

}  // namespace hk
