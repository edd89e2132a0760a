#include "hk/ratfunc.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace hk {

namespace {

// Dense polynomial, ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly to_poly(const Laurent& l) {
  // l must have low degree 0
  Poly p(static_cast<std::size_t>(l.high_degree()) + 1);
  for (const auto& [e, c] : l.terms()) p[static_cast<std::size_t>(e)] = c;
  return p;
}

Laurent from_poly(const Poly& p) {
  std::vector<Laurent::Term> t;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p[i].is_zero()) t.emplace_back(static_cast<int>(i), p[i]);
  return Laurent::from_terms(std::move(t));
}

// Remainder of a by b (b nonzero).
Poly poly_rem(Poly a, const Poly& b) {
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_div_exact(Poly a, const Poly& b) {
  const Rational lead_inv = b.back().inverse();
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
  trim(q);
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

RationalFunction::RationalFunction(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  if (num.is_zero()) return;
  if (den.is_monomial()) {
    const auto& [k, c] = den.terms()[0];
    num_ = num.shifted(-k).scaled(c.inverse());
    return;
  }
  const int s = den.low_degree();
  Laurent d0 = den.shifted(-s);
  Laurent n1 = num.shifted(-s);
  const int m = n1.low_degree();
  Poly np = to_poly(n1.shifted(-m));
  Poly dp = to_poly(d0);
  Poly g = poly_gcd(np, dp);
  if (g.size() > 1) {
    np = poly_div_exact(std::move(np), g);
    dp = poly_div_exact(std::move(dp), g);
  }
  Rational lc_inv = dp.back().inverse();
  for (auto& c : np) c *= lc_inv;
  for (auto& c : dp) c *= lc_inv;
  num_ = from_poly(np).shifted(m);
  den_ = from_poly(dp);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ + b.num_);
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.den_.is_one() && b.den_.is_one()) return RationalFunction(a.num_ * b.num_);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  RationalFunction base = e < 0 ? inverse() : *this;
  RationalFunction r(1);
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

Rational RationalFunction::evaluate(const Rational& v) const {
  Rational d = den_.evaluate(v);
  if (d.is_zero()) throw std::domain_error("RationalFunction: pole at evaluation point");
  return num_.evaluate(v) / d;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction parse_all() {
    RationalFunction r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed expression '" + std::string(s_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RationalFunction expr() {
    RationalFunction r = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        r += term();
      } else if (c == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }

  RationalFunction term() {
    RationalFunction r = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        r *= unary();
      } else if (c == '/') {
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else if (c == 'v' || c == 'q' || c == '(') {
        r *= power();  // implicit multiplication, e.g. "2v"
      } else {
        return r;
      }
    }
  }

  RationalFunction unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  int exponent() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      int e = exponent();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    int sign = 1;
    if (c == '-' || c == '+') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
      skip();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return sign * std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (peek() == '^') {
      ++pos_;
      int e = exponent();
      if (e < 0 && base.is_zero()) fail("negative power of zero");
      return base.pow(e);
    }
    return base;
  }

  RationalFunction atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == 'v') {
      ++pos_;
      return RationalFunction(Laurent::v_power(1));
    }
    if (c == 'q') {
      ++pos_;
      return RationalFunction(Laurent::q());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Rational::parse(s_.substr(start, pos_ - start)));
    }
    fail("expected a number, 'v', 'q' or '('");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace hk
