#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hk/laurent.hpp"
#include "hk/rootdata.hpp"

namespace hk {

class HeckeElt;

/// One Bernstein basis term c * Theta_mu * T_w.
struct HeckeTerm {
  Coweight mu;
  WeylElt w;
  Laurent coeff;
};

/// The Iwahori-Hecke algebra of a root datum.  Owns the multiplication
/// caches; elements keep it alive through a shared pointer.
///
/// The caches are guarded by a mutex, so one algebra may be shared by
/// several threads.
class Hecke : public std::enable_shared_from_this<Hecke> {
 public:
  static std::shared_ptr<const Hecke> create(RootDatumPtr datum);

  const RootDatumPtr& datum() const { return datum_; }
  const RootDatum& rd() const { return *datum_; }

  HeckeElt zero() const;
  HeckeElt one() const;
  HeckeElt scalar(const Laurent& c) const;
  HeckeElt theta(const Coweight& mu) const;
  HeckeElt t(WeylElt w) const;
  HeckeElt t_inv(WeylElt w) const;
  /// c * Theta_mu * T_w
  HeckeElt basis(const Coweight& mu, WeylElt w, const Laurent& c = Laurent(1)) const;

  /// Normal form of T_{s_i} * Theta_mu.
  HeckeElt cross(int i, const Coweight& mu) const;

  /// T_x * T_u in the finite Hecke algebra, as (z, coefficient) pairs.
  const std::vector<std::pair<WeylElt, Laurent>>& h0_product(WeylElt x, WeylElt u) const;
  /// T_w * Theta_nu as Bernstein terms.
  const std::vector<HeckeTerm>& push(WeylElt w, const Coweight& nu) const;

  /// Cached derived elements (Iwahori-Matsumoto elements, their inverses,
  /// oppositions of Theta_mu), keyed by kind, Levi and element.
  enum class Derived { im, im_inverse };
  struct ImKey {
    Derived kind;
    std::vector<int> levi;
    Coweight mu;
    std::uint32_t w;
    friend auto operator<=>(const ImKey&, const ImKey&) = default;
  };
  const std::vector<HeckeTerm>* find_im(const ImKey& key) const;
  void store_im(ImKey key, std::vector<HeckeTerm> terms) const;

 private:
  explicit Hecke(RootDatumPtr datum);

  struct PushKey {
    std::uint32_t w;
    Coweight nu;
    friend bool operator==(const PushKey&, const PushKey&) = default;
  };
  struct PushHash {
    std::size_t operator()(const PushKey& k) const { return k.nu.hash() * 31 + k.w; }
  };

  RootDatumPtr datum_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<std::vector<std::pair<WeylElt, Laurent>>>> h0_;
  mutable std::unordered_map<PushKey, std::vector<HeckeTerm>, PushHash> push_;
  mutable std::map<ImKey, std::vector<HeckeTerm>> im_;
};

using HeckePtr = std::shared_ptr<const Hecke>;

/// Finite linear combination of Theta_mu T_w with Laurent coefficients,
/// kept in canonical order (|mu|_1, mu, length and word of w) with no zero
/// terms.
class HeckeElt {
 public:
  HeckeElt() = default;
  HeckeElt(HeckePtr alg, std::vector<HeckeTerm> terms);  // normalizes

  const HeckePtr& algebra() const { return alg_; }
  const RootDatum& rd() const { return alg_->rd(); }
  const std::vector<HeckeTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of Theta_mu T_w.
  Laurent coefficient(const Coweight& mu, WeylElt w) const;
  /// Whether every term has w in W_L.
  bool supported_in(const LeviSet& levi) const;

  HeckeElt operator-() const;
  HeckeElt scaled(const Laurent& c) const;
  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator*(const Laurent& c, const HeckeElt& a) { return a.scaled(c); }
  HeckeElt& operator+=(const HeckeElt& b) { return *this = *this + b; }
  HeckeElt& operator-=(const HeckeElt& b) { return *this = *this - b; }
  HeckeElt& operator*=(const HeckeElt& b) { return *this = *this * b; }
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

  /// e.g. "(v^2 - 1)*Th(1,0)*T[1] + v^2"; letters 1-based.
  std::string str() const;

 private:
  HeckePtr alg_;
  std::vector<HeckeTerm> terms_;
};

/// Exponent e with delta_L^{1/2}(pi^mu) = v^e.
int delta_half_exp(const RootDatum& d, const Coweight& mu, const LeviSet& levi);

/// The Iwahori-Matsumoto basis element T_x of H_L in Bernstein coordinates.
HeckeElt im_element(const HeckePtr& alg, const ExtElt& x);
HeckeElt im_element(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi);
/// Same element computed only from length-zero elements and descents.
HeckeElt im_by_descent(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi);
/// T_x^{-1}.
HeckeElt im_inverse(const HeckePtr& alg, const ExtElt& x, const LeviSet& levi);

/// Anti-involution T_x -> T_{x^{-1}}, inside H_L.
HeckeElt star_im(const HeckeElt& h);
HeckeElt star_im(const HeckeElt& h, const LeviSet& levi);
/// Anti-map with T_w -> T_{w^{-1}}, Theta_mu -> T_{w0}^{-1} Theta_{-w0 mu} T_{w0}, inside H_L.
HeckeElt star_b(const HeckeElt& h);
HeckeElt star_b(const HeckeElt& h, const LeviSet& levi);
/// Anti-automorphism T_w -> T_{w^{-1}}, Theta_mu -> Theta_mu.
HeckeElt transpose(const HeckeElt& h);

/// h = sum_w Theta(r_w) T_w: the R-coefficient of each T_w.
std::map<std::uint32_t, std::vector<std::pair<Coweight, Laurent>>> decompose_R(const HeckeElt& h);

/// Image under v -> 1 in the group algebra of the extended affine Weyl group.
struct GroupTerm {
  ExtElt x;
  Rational coeff;
};
std::vector<GroupTerm> specialize_at_one(const HeckeElt& h);
std::vector<GroupTerm> group_algebra_mul(const RootDatum& d, const std::vector<GroupTerm>& a,
                                         const std::vector<GroupTerm>& b);

}  // namespace hk
