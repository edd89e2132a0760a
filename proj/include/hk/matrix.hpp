#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hk/ratfunc.hpp"

namespace hk {

/// Dense matrix over Q(v).  Vectors are rows: a module element x acts as
/// x * M.
class KMatrix {
 public:
  KMatrix() = default;
  KMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static KMatrix identity(std::size_t n);
  static KMatrix from_rows(const std::vector<std::vector<RationalFunction>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  RationalFunction& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<RationalFunction> row(std::size_t i) const;
  bool is_zero() const;

  friend KMatrix operator+(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator-(const KMatrix& a, const KMatrix& b);
  friend KMatrix operator*(const KMatrix& a, const KMatrix& b);
  KMatrix scaled(const RationalFunction& c) const;
  KMatrix& operator+=(const KMatrix& b);
  friend bool operator==(const KMatrix& a, const KMatrix& b) = default;

  /// Copies b into this matrix with its top-left corner at (r, c).
  void set_block(std::size_t r, std::size_t c, const KMatrix& b);

  std::size_t rank() const;
  RationalFunction det() const;
  std::optional<KMatrix> inverse() const;
  /// Coefficients c_0 .. c_n of det(x I - M), c_n = 1.
  std::vector<RationalFunction> char_poly() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<RationalFunction> a_;
};

/// Coefficients of prod_k (x - roots[k]), lowest degree first.
std::vector<RationalFunction> poly_from_roots(const std::vector<RationalFunction>& roots);

/// Rank of a matrix of Laurent polynomials after substituting v = point and
/// reducing mod the prime p.  A lower bound for the rank over Q(v); equal to
/// it unless the point is unlucky.  Coefficients with denominators divisible
/// by p are rejected.
std::size_t rank_mod_p(const std::vector<std::vector<Laurent>>& m, std::uint64_t p, std::uint64_t point);

}  // namespace hk
