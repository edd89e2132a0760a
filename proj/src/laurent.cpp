#include "hk/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace hk {

namespace {

using u128 = unsigned __int128;

std::uint64_t pow_mod(std::uint64_t b, std::int64_t e, std::uint64_t p) {
  if (e < 0) {
    // b^(p-2) is the inverse
    b = pow_mod(b, static_cast<std::int64_t>(p - 2), p);
    e = -e;
  }
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % p);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Laurent::Laurent(const Rational& c) {
  if (!c.is_zero()) terms_.emplace_back(0, c);
}

Laurent Laurent::monomial(const Rational& c, int exponent) {
  Laurent r;
  if (!c.is_zero()) r.terms_.emplace_back(exponent, c);
  return r;
}

Laurent Laurent::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Laurent r;
  for (auto& [e, c] : terms) {
    if (!r.terms_.empty() && r.terms_.back().first == e) {
      r.terms_.back().second += c;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!c.is_zero()) {
      r.terms_.emplace_back(e, std::move(c));
    }
  }
  return r;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one();
}

int Laurent::low_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.front().first;
}

int Laurent::high_degree() const {
  if (terms_.empty()) throw std::domain_error("degree of zero Laurent polynomial");
  return terms_.back().first;
}

Rational Laurent::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return Rational();
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
  Laurent r = a;
  r += b;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& b) {
  if (b.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = b.terms_;
    return *this;
  }
  if (b.terms_.size() <= 4) {
    // In place: accumulators mostly receive short summands.
    for (const auto& [e, c] : b.terms_) {
      auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, int x) { return t.first < x; });
      if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
      } else {
        terms_.insert(it, Term{e, c});
      }
    }
    return *this;
  }
  // Backward merge in place.
  std::size_t n = terms_.size();
  {
    std::size_t i = 0, j = 0, u = 0;
    while (i < n || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < n && terms_[i].first < b.terms_[j].first)) {
        ++i;
      } else if (i == n || b.terms_[j].first < terms_[i].first) {
        ++j;
      } else {
        ++i, ++j;
      }
      ++u;
    }
    terms_.resize(u);
  }
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1, j = static_cast<std::ptrdiff_t>(b.terms_.size()) - 1;
  std::ptrdiff_t k = static_cast<std::ptrdiff_t>(terms_.size()) - 1;
  while (j >= 0) {
    if (i >= 0 && terms_[static_cast<std::size_t>(i)].first > b.terms_[static_cast<std::size_t>(j)].first) {
      terms_[static_cast<std::size_t>(k--)] = std::move(terms_[static_cast<std::size_t>(i--)]);
    } else if (i >= 0 && terms_[static_cast<std::size_t>(i)].first == b.terms_[static_cast<std::size_t>(j)].first) {
      Term t{terms_[static_cast<std::size_t>(i)].first, terms_[static_cast<std::size_t>(i)].second + b.terms_[static_cast<std::size_t>(j)].second};
      --i, --j;
      terms_[static_cast<std::size_t>(k--)] = std::move(t);
    } else {
      terms_[static_cast<std::size_t>(k--)] = b.terms_[static_cast<std::size_t>(j--)];
    }
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const Term& t) { return t.second.is_zero(); }), terms_.end());
  return *this;
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Laurent();
  if (a.terms_.size() == 1) {
    Laurent r;
    r.terms_.reserve(b.terms_.size());
    for (const auto& [e, c] : b.terms_) r.terms_.emplace_back(e + a.terms_[0].first, c * a.terms_[0].second);
    return r;
  }
  if (b.terms_.size() == 1) return b * a;
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int span = a.terms_.back().first + b.terms_.back().first - lo + 1;
  if (span <= 512) {
    // Dense convolution; integer coefficients accumulate in 128 bits.
    std::int64_t ia[64], ib[64];
    bool ints = a.terms_.size() <= 64 && b.terms_.size() <= 64;
    for (std::size_t k = 0; ints && k < a.terms_.size(); ++k) ints = a.terms_[k].second.small_integer(ia[k]);
    for (std::size_t k = 0; ints && k < b.terms_.size(); ++k) ints = b.terms_[k].second.small_integer(ib[k]);
    if (ints) {
      thread_local std::vector<__int128> acc;
      acc.assign(static_cast<std::size_t>(span), 0);
      for (std::size_t x = 0; x < a.terms_.size(); ++x)
        for (std::size_t y = 0; y < b.terms_.size(); ++y)
          acc[static_cast<std::size_t>(a.terms_[x].first + b.terms_[y].first - lo)] +=
              static_cast<__int128>(ia[x]) * ib[y];
      Laurent r;
      r.terms_.reserve(static_cast<std::size_t>(std::count_if(acc.begin(), acc.begin() + span, [](__int128 v) { return v != 0; })));
      bool fit = true;
      for (int k = 0; k < span && fit; ++k) {
        const __int128 v = acc[static_cast<std::size_t>(k)];
        if (v == 0) continue;
        if (v > std::numeric_limits<std::int64_t>::max() || v < -std::numeric_limits<std::int64_t>::max()) {
          fit = false;
        } else {
          r.terms_.emplace_back(k + lo, Rational(static_cast<std::int64_t>(v)));
        }
      }
      if (fit) return r;
    }
    std::vector<Rational> acc(static_cast<std::size_t>(span));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    Laurent r;
    for (int k = 0; k < span; ++k)
      if (!acc[static_cast<std::size_t>(k)].is_zero()) r.terms_.emplace_back(k + lo, std::move(acc[static_cast<std::size_t>(k)]));
    return r;
  }
  std::vector<Laurent::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) raw.emplace_back(ea + eb, ca * cb);
  return Laurent::from_terms(std::move(raw));
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.first += k;
  return r;
}

Laurent Laurent::scaled(const Rational& c) const {
  if (c.is_zero()) return Laurent();
  Laurent r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Laurent Laurent::monomial_inverse() const {
  if (!is_monomial()) throw std::domain_error("Laurent: not a unit: " + str());
  return monomial(terms_[0].second.inverse(), -terms_[0].first);
}

Rational Laurent::evaluate(const Rational& v) const {
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    if (e != 0) {
      if (v.is_zero()) throw std::domain_error("Laurent: evaluation at 0");
      Rational base = e > 0 ? v : v.inverse();
      for (int k = 0; k < std::abs(e); ++k) p *= base;
    }
    sum += c * p;
  }
  return sum;
}

std::uint64_t Laurent::evaluate_mod(std::uint64_t p, std::uint64_t v) const {
  std::uint64_t sum = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = static_cast<std::uint64_t>(static_cast<u128>(c.mod_prime(p)) * pow_mod(v, e, p) % p);
    sum = (sum + term) % p;
  }
  return sum;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c.sign() < 0;
    Rational mag = neg ? -c : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string var;
    if (e == 1) var = "v";
    else if (e != 0) var = "v^" + std::to_string(e);
    if (var.empty()) out += mag.str();
    else if (mag.is_one()) out += var;
    else out += mag.str() + "*" + var;
  }
  return out;
}

}  // namespace hk
