#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hk/hecke.hpp"
#include "hk/ratfunc.hpp"

namespace hk {

/// Seeded source of random test data.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard.  Bounded integers are drawn by rejection sampling on the raw
/// 64-bit output instead of std::uniform_int_distribution, whose algorithm
/// is implementation-defined, so a seed reproduces the same data on every
/// platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(xs.size()) - 1))];
  }

  Coweight coweight(int rank, int box);
  WeylElt weyl(const RootDatum& d, const LeviSet& levi);
  /// Small nonzero Laurent polynomial: 1 to 2 terms, exponents in [-2, 2],
  /// coefficients in [-3, 3].
  Laurent laurent();
  /// Random element of H_L with 1..max_terms Bernstein terms.
  HeckeElt element(const HeckePtr& alg, const LeviSet& levi, int max_terms, int box);
  /// c * v^k with c a small rational other than 0, 1, -1 and k in {-1, 0, 1}.
  RationalFunction generic_value();

 private:
  std::mt19937_64 eng_;
};

}  // namespace hk
