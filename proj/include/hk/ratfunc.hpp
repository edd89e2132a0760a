#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "hk/laurent.hpp"

namespace hk {

/// Element of the field Q(v) of rational functions in v.
///
/// Canonical form: numerator / denominator where the denominator is an
/// ordinary polynomial with nonzero constant term and leading coefficient 1,
/// the numerator is a Laurent polynomial, and the two share no common factor.
/// Module actions and characters live here.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(const Laurent& p) : num_(p), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Laurent(c)) {}  // NOLINT
  RationalFunction(std::int64_t c) : RationalFunction(Laurent(c)) {}  // NOLINT
  RationalFunction(const Laurent& num, const Laurent& den);

  /// Parses an arithmetic expression in v (and q = v^2) with integers,
  /// + - * / ^ and parentheses, e.g. "(v^2 - 1)/(v + 2)" or "3*q^-1".
  static RationalFunction parse(std::string_view text);

  const Laurent& numerator() const { return num_; }
  const Laurent& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  RationalFunction pow(int e) const;
  Rational evaluate(const Rational& v) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string str() const;

 private:
  Laurent num_;
  Laurent den_ = Laurent(Rational(1));
};

}  // namespace hk
