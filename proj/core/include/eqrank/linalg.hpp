#pragma once

// Exact rational scalars, vectors and dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eqrank {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

std::string to_string(const Rational& q);
std::string to_string(const Vec& v);

bool is_integer(const Rational& q);
bool is_integral(const Vec& v);

Rational dot(const Vec& a, const Vec& b);

struct RationalHash {
  std::size_t operator()(const Rational& q) const noexcept;
};

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept;
};

/// Row-major dense matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix block_diagonal(const std::vector<Matrix>& blocks);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Vec operator*(const Vec& v) const;
  Matrix operator*(const Rational& s) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;

  bool operator==(const Matrix& rhs) const = default;

  bool is_symmetric() const;

  /// u^T M v.
  Rational bilinear(const Vec& u, const Vec& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Rational determinant(const Matrix& m);

/// Exact inverse; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Symmetric and every leading principal minor strictly positive.
bool is_positive_definite(const Matrix& m);

/// Rank over Q.
std::size_t rank(const Matrix& m);

/// If `m == s * reference` for some rational s, returns s. `reference` must be nonzero.
std::optional<Rational> proportionality(const Matrix& m, const Matrix& reference);

std::string to_string(const Matrix& m);

/// Primes p >= 5 whose exponent in |q| is odd (q nonzero).
std::set<std::uint64_t> odd_primes_at_least_5(const Rational& q);

/// True iff |q| = 2^a 3^b for integers a, b.
bool in_two_three_group(const Rational& q);

}  // namespace eqrank
