#include "hk/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hk {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 x) { return x <= kMax && x >= -kMax; }

mpz_class to_mpz(i128 x) {
  const bool neg = x < 0;
  u128 m = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

void Rational::promote_min() { *this = from_big(mpq_class(mpz_class(std::to_string(num_)))); }

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  i128 nn = n, dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  u128 g = gcd128(abs128(nn), static_cast<u128>(dd));
  if (g > 1) {
    nn /= static_cast<i128>(g);
    dd /= static_cast<i128>(g);
  }
  if (fits(nn) && fits(dd)) {
    num_ = static_cast<std::int64_t>(nn);
    den_ = static_cast<std::int64_t>(dd);
  } else {
    mpq_class q(to_mpz(nn), to_mpz(dd));
    *this = from_big(q);
  }
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long n = q.get_num().get_si();
    long d = q.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(c == '-' || c == '+' || c == '/' || (c >= '0' && c <= '9'))) {
      throw std::invalid_argument("malformed rational: " + s);
    }
  }
  if (s.front() == '+') s.erase(s.begin());
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return from_big(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (big_) return from_big(1 / *big_);
  return Rational(num_ < 0 ? -den_ : den_, num_ < 0 ? -num_ : num_);
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    i128 s = static_cast<i128>(a.num_) + b.num_;
    if (fits(s)) {
      Rational r;
      r.num_ = static_cast<std::int64_t>(s);
      return r;
    }
  }
  i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 d = static_cast<i128>(a.den_) * b.den_;
  u128 g = gcd128(abs128(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (n == 0) return Rational();
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() * b.to_mpq());
  if (a.num_ == 0 || b.num_ == 0) return Rational();
  i128 n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  if (d1 != 1 || d2 != 1) {
    u128 g1 = gcd128(abs128(n1), static_cast<u128>(d2));
    u128 g2 = gcd128(abs128(n2), static_cast<u128>(d1));
    n1 /= static_cast<i128>(g1);
    d2 /= static_cast<i128>(g1);
    n2 /= static_cast<i128>(g2);
    d1 /= static_cast<i128>(g2);
  }
  i128 n = n1 * n2;
  i128 d = d1 * d2;
  if (fits(n) && fits(d)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  return Rational::from_big(mpq_class(to_mpz(n), to_mpz(d)));
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;  // canonical: a big value never fits the small form
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::uint64_t Rational::mod_prime(std::uint64_t p) const {
  auto reduce = [p](const mpz_class& z) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  mpq_class q = to_mpq();
  std::uint64_t n = reduce(q.get_num());
  std::uint64_t d = reduce(q.get_den());
  if (d == 0) throw std::domain_error("Rational::mod_prime: denominator vanishes");
  // d^(p-2) mod p
  std::uint64_t inv = 1, base = d, e = p - 2;
  while (e) {
    if (e & 1) inv = static_cast<std::uint64_t>(static_cast<u128>(inv) * base % p);
    base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % p);
    e >>= 1;
  }
  return static_cast<std::uint64_t>(static_cast<u128>(n) * inv % p);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace hk
