#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hk {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in a machine word are kept
/// inline; anything larger is promoted to a shared immutable GMP rational and
/// demoted again as soon as it fits.  Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<std::int64_t>::min()) promote_min();
  }
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  /// Parses "n" or "n/d" (optional leading sign, no spaces).
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  /// The value as a machine integer, if it is an integer held inline.
  bool small_integer(std::int64_t& out) const {
    if (big_ || den_ != 1) return false;
    out = num_;
    return true;
  }
  int sign() const;

  mpq_class to_mpq() const;
  std::string str() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t s;
    if (!a.big_ && !b.big_ && a.den_ == 1 && b.den_ == 1 && !__builtin_add_overflow(a.num_, b.num_, &s) &&
        s != std::numeric_limits<std::int64_t>::min())
      return Rational(s);
    return add_slow(a, b);
  }
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  /// Residue modulo a prime p < 2^31; the denominator must be a unit mod p.
  std::uint64_t mod_prime(std::uint64_t p) const;

 private:
  static Rational from_big(mpq_class q);
  static Rational add_slow(const Rational& a, const Rational& b);
  void promote_min();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hk
