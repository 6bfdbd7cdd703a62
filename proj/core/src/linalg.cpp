#include "eqrank/linalg.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "eqrank/error.hpp"

namespace eqrank {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_integral(const Vec& v) {
  for (const auto& q : v)
    if (!is_integer(q)) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t RationalHash::operator()(const Rational& q) const noexcept {
  const auto n = static_cast<std::size_t>(mpz_get_si(q.get_num_mpz_t()));
  const auto d = static_cast<std::size_t>(mpz_get_ui(q.get_den_mpz_t()));
  return n * 0x9e3779b97f4a7c15ULL ^ (d + (n << 6) + (n >> 2));
}

std::size_t VecHash::operator()(const Vec& v) const noexcept {
  std::size_t h = v.size();
  RationalHash rh;
  for (const auto& q : v) h ^= rh(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) { return from_rows(cols).transpose(); }

Matrix Matrix::block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionError("Matrix product: inner dimensions differ");
  Matrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  return p;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw DimensionError("Matrix-vector product: size mismatch");
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x *= s;
  return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("Matrix sum: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += rhs.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("Matrix difference: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= rhs.data_[i];
  return m;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational Matrix::bilinear(const Vec& u, const Vec& v) const {
  if (u.size() != rows_ || v.size() != cols_) throw DimensionError("bilinear: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (u[i] == 0) continue;
    Rational r = 0;
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) r += (*this)(i, j) * v[j];
    s += u[i] * r;
  }
  return s;
}

Rational determinant(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

bool is_positive_definite(const Matrix& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k)
    if (determinant(m.block(0, 0, k, k)) <= 0) return false;
  return true;
}

std::size_t rank(const Matrix& m) {
  Matrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<Rational> proportionality(const Matrix& m, const Matrix& reference) {
  if (m.rows() != reference.rows() || m.cols() != reference.cols())
    throw DimensionError("proportionality: shape mismatch");
  std::optional<Rational> s;
  for (std::size_t i = 0; i < m.rows() && !s; ++i)
    for (std::size_t j = 0; j < m.cols() && !s; ++j)
      if (reference(i, j) != 0) s = m(i, j) / reference(i, j);
  if (!s) throw DimensionError("proportionality: zero reference matrix");
  if (!(reference * *s == m)) return std::nullopt;
  return s;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).get_str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

void accumulate_prime_exponents(mpz_class n, std::map<std::uint64_t, int>& exps) {
  if (n < 0) n = -n;
  for (std::uint64_t p = 2; mpz_class(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      ++exps[p];
    }
  }
  if (n > 1) {
    if (!n.fits_ulong_p()) throw Error("prime factorization: cofactor too large");
    ++exps[n.get_ui()];
  }
}

}  // namespace

std::set<std::uint64_t> odd_primes_at_least_5(const Rational& q) {
  if (q == 0) throw Error("square class of zero is undefined");
  std::map<std::uint64_t, int> exps;
  accumulate_prime_exponents(q.get_num(), exps);
  accumulate_prime_exponents(q.get_den(), exps);
  std::set<std::uint64_t> out;
  for (const auto& [p, e] : exps)
    if (p >= 5 && e % 2) out.insert(p);
  return out;
}

bool in_two_three_group(const Rational& q) {
  if (q == 0) return false;
  auto strip = [](mpz_class n) {
    if (n < 0) n = -n;
    while (mpz_divisible_ui_p(n.get_mpz_t(), 2)) n /= 2;
    while (mpz_divisible_ui_p(n.get_mpz_t(), 3)) n /= 3;
    return n == 1;
  };
  return strip(q.get_num()) && strip(q.get_den());
}

}  // namespace eqrank
