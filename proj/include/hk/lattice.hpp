#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace hk {

/// Integer vector in a rank-n lattice.  The tag keeps character-lattice and
/// cocharacter-lattice vectors from being mixed up.
template <class Tag>
class LatticeVec {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 4>;

  LatticeVec() = default;
  explicit LatticeVec(std::size_t rank) : c_(rank, 0) {}
  LatticeVec(std::initializer_list<std::int32_t> xs) : c_(xs.begin(), xs.end()) {}
  explicit LatticeVec(const std::vector<int>& xs) : c_(xs.begin(), xs.end()) {}

  static LatticeVec unit(std::size_t rank, std::size_t i) {
    LatticeVec v(rank);
    v.c_[i] = 1;
    return v;
  }

  std::size_t rank() const { return c_.size(); }
  std::int32_t operator[](std::size_t i) const { return c_[i]; }
  std::int32_t& operator[](std::size_t i) { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }
  std::int64_t l1_norm() const {
    std::int64_t s = 0;
    for (auto x : c_) s += x < 0 ? -x : x;
    return s;
  }
  std::int32_t linf_norm() const {
    std::int32_t m = 0;
    for (auto x : c_) m = std::max(m, x < 0 ? -x : x);
    return m;
  }
  std::vector<int> to_vector() const { return {c_.begin(), c_.end()}; }

  LatticeVec operator-() const {
    LatticeVec r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  LatticeVec& operator+=(const LatticeVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVec& operator-=(const LatticeVec& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend LatticeVec operator+(LatticeVec a, const LatticeVec& b) { return a += b; }
  friend LatticeVec operator-(LatticeVec a, const LatticeVec& b) { return a -= b; }
  friend LatticeVec operator*(std::int32_t k, LatticeVec a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const LatticeVec& a, const LatticeVec& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : c_) h = (h ^ static_cast<std::size_t>(static_cast<std::uint32_t>(x))) * 0x100000001b3ULL;
    return h;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + ")";
  }

 private:
  Storage c_;
};

struct CharTag {};
struct CocharTag {};

/// Element of X^*, the character lattice (roots live here).
using Weight = LatticeVec<CharTag>;
/// Element of X_*, the cocharacter lattice (coroots and translations live here).
using Coweight = LatticeVec<CocharTag>;

/// The perfect pairing X^* x X_* -> Z.
inline std::int64_t pairing(const Weight& chi, const Coweight& mu) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < chi.rank(); ++i) s += static_cast<std::int64_t>(chi[i]) * mu[i];
  return s;
}

}  // namespace hk

template <class Tag>
struct std::hash<hk::LatticeVec<Tag>> {
  std::size_t operator()(const hk::LatticeVec<Tag>& v) const { return v.hash(); }
};
