#include "hk/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace hk {

namespace {

using u128 = unsigned __int128;

void require_same_shape(const KMatrix& a, const KMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>(static_cast<u128>(r) * b % p);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

// Row echelon form in place; returns the rank and the sign-adjusted
// product of pivots when the matrix is square.
std::size_t eliminate(std::vector<std::vector<RationalFunction>>& m, std::size_t cols, RationalFunction* det) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  RationalFunction d(1);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) {
      d = RationalFunction();
      continue;
    }
    if (p != rank) {
      std::swap(m[p], m[rank]);
      d = -d;
    }
    const RationalFunction piv = m[rank][c];
    d *= piv;
    const RationalFunction inv = piv.inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!m[rank][k].is_zero()) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  if (det) *det = rank == rows && rows == cols ? d : RationalFunction();
  return rank;
}

}  // namespace

KMatrix KMatrix::identity(std::size_t n) {
  KMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
  return m;
}

KMatrix KMatrix::from_rows(const std::vector<std::vector<RationalFunction>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows.front().size();
  KMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<RationalFunction> KMatrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_), a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool KMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

KMatrix operator+(const KMatrix& a, const KMatrix& b) {
  KMatrix r = a;
  r += b;
  return r;
}

KMatrix& KMatrix::operator+=(const KMatrix& b) {
  require_same_shape(*this, b);
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
  return *this;
}

KMatrix operator-(const KMatrix& a, const KMatrix& b) { return a + b.scaled(RationalFunction(-1)); }

KMatrix operator*(const KMatrix& a, const KMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  KMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RationalFunction& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
    }
  return r;
}

KMatrix KMatrix::scaled(const RationalFunction& c) const {
  KMatrix r(rows_, cols_);
  if (c.is_zero()) return r;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) r.a_[k] = a_[k] * c;
  return r;
}

void KMatrix::set_block(std::size_t r, std::size_t c, const KMatrix& b) {
  if (r + b.rows_ > rows_ || c + b.cols_ > cols_) throw std::invalid_argument("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r + i, c + j) = b(i, j);
}

std::size_t KMatrix::rank() const {
  std::vector<std::vector<RationalFunction>> m;
  for (std::size_t i = 0; i < rows_; ++i) m.push_back(row(i));
  return eliminate(m, cols_, nullptr);
}

RationalFunction KMatrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of a non-square matrix");
  std::vector<std::vector<RationalFunction>> m;
  for (std::size_t i = 0; i < rows_; ++i) m.push_back(row(i));
  RationalFunction d;
  eliminate(m, cols_, &d);
  return d;
}

std::optional<KMatrix> KMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (*this)(i, j);
    m[i][n + i] = RationalFunction(1);
  }
  // Gauss-Jordan.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    const RationalFunction inv = m[c][c].inverse();
    for (auto& x : m[c])
      if (!x.is_zero()) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const RationalFunction f = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k)
        if (!m[c][k].is_zero()) m[r][k] -= f * m[c][k];
    }
  }
  KMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i][n + j];
  return r;
}

std::vector<RationalFunction> KMatrix::char_poly() const {
  if (!is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  // Faddeev-LeVerrier: N_k = M N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M N_k) / k.
  const std::size_t n = rows_;
  std::vector<RationalFunction> c(n + 1);
  c[n] = RationalFunction(1);
  KMatrix acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = *this * acc + identity(n).scaled(c[n - k + 1]);
    const KMatrix prod = *this * acc;
    RationalFunction tr;
    for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    c[n - k] = -(tr / RationalFunction(static_cast<std::int64_t>(k)));
  }
  return c;
}

std::vector<RationalFunction> poly_from_roots(const std::vector<RationalFunction>& roots) {
  std::vector<RationalFunction> p{RationalFunction(1)};
  for (const auto& r : roots) {
    std::vector<RationalFunction> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= r * p[k];
    }
    p = std::move(next);
  }
  return p;
}

std::size_t rank_mod_p(const std::vector<std::vector<Laurent>>& in, std::uint64_t p, std::uint64_t point) {
  if (point % p == 0) throw std::invalid_argument("rank_mod_p: v must be invertible mod p");
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : in) {
    std::vector<std::uint64_t> row;
    row.reserve(r.size());
    for (const auto& x : r) row.push_back(x.evaluate_mod(p, point));
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = pow_mod(m[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t f = static_cast<std::uint64_t>(static_cast<u128>(m[r][c]) * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint64_t sub = static_cast<std::uint64_t>(static_cast<u128>(f) * m[rank][k] % p);
        m[r][k] = (m[r][k] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace hk
