#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hk/lattice.hpp"

namespace hk {

/// Element of the finite Weyl group W of a particular RootDatum, stored as an
/// index into that datum's enumeration of W.  Index 0 is the identity.
struct WeylElt {
  std::uint32_t id = 0;
  friend auto operator<=>(const WeylElt&, const WeylElt&) = default;
};

/// Element pi^mu w of the extended affine Weyl group X_* x| W.
struct ExtElt {
  Coweight mu;
  WeylElt w;
  friend bool operator==(const ExtElt&, const ExtElt&) = default;
};

/// A subset of the simple roots (0-based indices), the data of a standard
/// Levi subgroup.
class LeviSet {
 public:
  LeviSet() = default;
  explicit LeviSet(std::vector<int> indices);
  static LeviSet full(int num_simple);

  const std::vector<int>& indices() const { return idx_; }
  bool contains(int i) const;
  bool subset_of(const LeviSet& other) const;
  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  std::string str() const;  // 1-based, e.g. "{1,2}"

  friend bool operator==(const LeviSet&, const LeviSet&) = default;
  friend auto operator<=>(const LeviSet&, const LeviSet&) = default;

 private:
  std::vector<int> idx_;
};

/// A root datum (X^*, Phi, X_*, Phi^vee) with X^* = X_* = Z^rank and the dot
/// pairing, together with the finite Weyl group and all the combinatorics
/// the Hecke algebra needs.
///
/// Everything is computed at construction; the object is immutable.
class RootDatum {
 public:
  /// Validates the Cartan matrix (finite type) and enumerates W.
  static std::shared_ptr<const RootDatum> create(std::string name, int rank, std::vector<Weight> simple_roots,
                                                 std::vector<Coweight> simple_coroots);

  /// A1 (SL2), GL2, A2, GL3, B2, G2, or a direct sum such as "A1xA1".
  static std::shared_ptr<const RootDatum> preset(std::string_view expr);
  static std::vector<std::string> preset_names();

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int num_simple() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Coweight>& simple_coroots() const { return simple_coroots_; }
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * num_simple() + j)]; }
  /// nu with <alpha_i, nu> >= 1 for every simple root.
  const Coweight& strict_dom_witness() const { return witness_; }
  bool same_as(const RootDatum& other) const;
  LeviSet full_levi() const { return LeviSet::full(num_simple()); }

  // --- roots --------------------------------------------------------------
  std::size_t num_positive_roots() const { return pos_roots_.size(); }
  const Weight& positive_root(std::size_t k) const { return pos_roots_[k]; }
  const Coweight& positive_coroot(std::size_t k) const { return pos_coroots_[k]; }
  /// Coordinates of the k-th positive root in the basis of simple roots.
  const std::vector<int>& positive_root_coords(std::size_t k) const { return pos_coords_[k]; }
  /// Positive roots of the root subsystem spanned by the simple roots in L.
  std::vector<std::size_t> levi_positive_roots(const LeviSet& levi) const;
  /// Connected components of the Dynkin diagram restricted to L.
  std::vector<LeviSet> components(const LeviSet& levi) const;
  /// Index of the highest root of an irreducible component.
  std::size_t highest_root(const LeviSet& component) const;
  /// Sum of the positive roots of the Levi root subsystem.
  Weight two_rho(const LeviSet& levi) const;

  // --- finite Weyl group --------------------------------------------------
  std::size_t weyl_order() const { return lengths_.size(); }
  WeylElt identity() const { return WeylElt{0}; }
  WeylElt simple_reflection(int i) const { return lmul(identity(), i); }
  WeylElt mul(WeylElt a, WeylElt b) const { return WeylElt{mul_[a.id * weyl_order() + b.id]}; }
  WeylElt inverse(WeylElt w) const { return WeylElt{inv_[w.id]}; }
  /// s_i * w
  WeylElt lmul(WeylElt w, int i) const { return WeylElt{lmul_[w.id * static_cast<std::size_t>(num_simple()) + static_cast<std::size_t>(i)]}; }
  /// w * s_i
  WeylElt rmul(WeylElt w, int i) const { return inverse(lmul(inverse(w), i)); }
  int length(WeylElt w) const { return lengths_[w.id]; }
  /// Lexicographically least reduced word (0-based letters).
  const std::vector<int>& reduced_word(WeylElt w) const { return words_[w.id]; }
  /// Product of the simple reflections in an arbitrary word.
  WeylElt from_word(std::span<const int> word) const;
  /// Position of w in the order (length, reduced word lexicographic).
  std::uint32_t canonical_rank(WeylElt w) const { return canon_rank_[w.id]; }
  /// All of W in canonical order.
  const std::vector<WeylElt>& elements() const { return canon_order_; }
  bool left_descent(WeylElt w, int i) const { return length(lmul(w, i)) < length(w); }
  bool right_descent(WeylElt w, int i) const { return length(rmul(w, i)) < length(w); }
  /// Whether w^{-1} maps the k-th positive root to a negative root.
  bool inverse_makes_negative(WeylElt w, std::size_t k) const {
    return neg_[w.id * num_positive_roots() + k] != 0;
  }
  /// The reflection in the k-th positive root.
  WeylElt reflection(std::size_t k) const;

  Coweight act(WeylElt w, const Coweight& mu) const;
  Weight act(WeylElt w, const Weight& chi) const;

  // --- parabolic combinatorics -------------------------------------------
  bool in_subgroup(WeylElt w, const LeviSet& levi) const;
  /// W_L in canonical order.
  std::vector<WeylElt> weyl_subgroup(const LeviSet& levi) const;
  WeylElt longest_element(const LeviSet& levi) const;
  /// Minimal length representatives of W_L \ W, in canonical order.
  std::vector<WeylElt> min_coset_reps(const LeviSet& levi) const;
  /// w = w'' w' with w'' in W_L, w' minimal in W_L w.
  std::pair<WeylElt, WeylElt> pq_decompose(WeylElt w, const LeviSet& levi) const;
  /// (L', w0') with w0' longest in the minimal representatives and
  /// w0'^{-1}(Delta_L) = Delta_{L'}.
  std::pair<LeviSet, WeylElt> conjugate_levi(const LeviSet& levi) const;

  // --- dominance ----------------------------------------------------------
  bool is_dominant(const Coweight& mu) const { return is_dominant(mu, full_levi()); }
  bool is_dominant(const Coweight& mu, const LeviSet& levi) const;
  bool is_antidominant(const Coweight& mu, const LeviSet& levi) const;
  /// mu = plus - minus with both dominant for L and minus = k * witness,
  /// k the least natural number making mu + k * witness dominant.
  std::pair<Coweight, Coweight> dominant_decomposition(const Coweight& mu) const {
    return dominant_decomposition(mu, full_levi());
  }
  std::pair<Coweight, Coweight> dominant_decomposition(const Coweight& mu, const LeviSet& levi) const;

  // --- extended affine Weyl group ----------------------------------------
  ExtElt ext_identity() const { return ExtElt{Coweight(static_cast<std::size_t>(rank_)), identity()}; }
  ExtElt ext_mul(const ExtElt& x, const ExtElt& y) const;
  ExtElt ext_inv(const ExtElt& x) const;
  /// Iwahori-Matsumoto length; for a Levi, computed in its own root system.
  int ext_length(const ExtElt& x) const { return ext_length(x, full_levi()); }
  int ext_length(const ExtElt& x, const LeviSet& levi) const;
  /// Affine simple reflections pi^{theta^vee} s_theta, one per component of
  /// L, theta the highest root of the component.
  std::vector<ExtElt> affine_reflections(const LeviSet& levi) const;
  /// All x in X_* x| W_L with ext_length(x, L) <= max_length of the form
  /// omega * (affine simple reflections), omega of length zero with
  /// |mu|_inf <= box.  Sorted by length, then mu, then canonical rank.
  std::vector<ExtElt> ext_elements_up_to(const LeviSet& levi, int max_length, int box) const;

 private:
  RootDatum() = default;
  void build();

  std::string name_;
  int rank_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  std::vector<int> cartan_;
  Coweight witness_;

  std::vector<Weight> pos_roots_;
  std::vector<Coweight> pos_coroots_;
  std::vector<std::vector<int>> pos_coords_;

  std::vector<std::vector<int>> act_;  // rank x rank integer matrices on X_*, row-major
  std::vector<int> lengths_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint32_t> mul_, inv_, lmul_;
  std::vector<std::uint32_t> canon_rank_;
  std::vector<WeylElt> canon_order_;
  std::vector<char> neg_;
};

using RootDatumPtr = std::shared_ptr<const RootDatum>;

}  // namespace hk
