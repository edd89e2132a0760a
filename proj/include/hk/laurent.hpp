#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hk/rational.hpp"

namespace hk {

/// Sparse Laurent polynomial in the formal variable v with rational
/// coefficients.  Terms are kept sorted by exponent with no zero
/// coefficients, so structural equality is mathematical equality.
///
/// q denotes v^2 throughout the library.
class Laurent {
 public:
  using Term = std::pair<int, Rational>;  // (exponent, coefficient)

  Laurent() = default;
  Laurent(const Rational& c);  // NOLINT(google-explicit-constructor)
  Laurent(std::int64_t c) : Laurent(Rational(c)) {}  // NOLINT

  static Laurent monomial(const Rational& c, int exponent);
  static Laurent v_power(int exponent) { return monomial(Rational(1), exponent); }
  static Laurent q() { return v_power(2); }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static Laurent from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// A unit of the Laurent ring: a single nonzero term.
  bool is_monomial() const { return terms_.size() == 1; }
  int low_degree() const;
  int high_degree() const;
  Rational coefficient(int exponent) const;

  Laurent operator-() const;
  friend Laurent operator+(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a, const Laurent& b);
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator+=(const Laurent& b);
  Laurent& operator-=(const Laurent& b) { return *this += -b; }
  Laurent& operator*=(const Laurent& b) { return *this = *this * b; }
  friend bool operator==(const Laurent& a, const Laurent& b) = default;

  /// Multiplication by v^k.
  Laurent shifted(int k) const;
  Laurent scaled(const Rational& c) const;
  /// Inverse of a monomial; throws for anything else.
  Laurent monomial_inverse() const;

  Rational evaluate(const Rational& v) const;
  std::uint64_t evaluate_mod(std::uint64_t p, std::uint64_t v) const;

  /// Human-readable form, e.g. "v^2 - 1/2*v + 3 - v^-1"; "0" for zero.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace hk
