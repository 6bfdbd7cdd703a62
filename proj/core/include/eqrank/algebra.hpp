#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace eqrank {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// One simple complex Lie algebra, identified by Cartan type.
///
/// Construction enforces the rank bounds of each family and folds the
/// low-rank coincidences B1 = C1 = A1, C2 = B2 and D3 = A3. D2 is refused
/// because so(4) = A1 x A1 is not simple.
class SimpleType {
 public:
  SimpleType(Family family, int rank);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_type_a() const noexcept { return family_ == Family::A; }

  std::string to_string() const;

  auto operator<=>(const SimpleType&) const = default;

 private:
  Family family_;
  int rank_;
};

/// True when `(family, rank)` names a simple algebra after normalization.
bool is_valid_simple(Family family, int rank);

inline SimpleType A(int n) { return {Family::A, n}; }
inline SimpleType B(int n) { return {Family::B, n}; }
inline SimpleType C(int n) { return {Family::C, n}; }
inline SimpleType D(int n) { return {Family::D, n}; }
inline SimpleType E(int n) { return {Family::E, n}; }
inline SimpleType F4() { return {Family::F, 4}; }
inline SimpleType G2() { return {Family::G, 2}; }

/// Nonempty multiset of simple factors kept sorted by (family, rank).
class SemisimpleAlgebra {
 public:
  SemisimpleAlgebra(std::vector<SimpleType> factors);
  SemisimpleAlgebra(std::initializer_list<SimpleType> factors);
  SemisimpleAlgebra(SimpleType t);  // NOLINT: a simple algebra is semisimple

  const std::vector<SimpleType>& factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  int rank() const noexcept;

  /// Number of factors equal to `t`.
  int count(const SimpleType& t) const;
  int count_a(int n) const { return count(SimpleType(Family::A, n)); }
  bool all_type_a() const;

  /// Factors joined by 'x' in canonical order, e.g. "A1xE7".
  std::string to_string() const;

  /// Multiset union.
  SemisimpleAlgebra operator*(const SemisimpleAlgebra& rhs) const;

  auto operator<=>(const SemisimpleAlgebra&) const = default;

 private:
  std::vector<SimpleType> factors_;
};

/// Orthogonal algebras so(n), n >= 3, with so(3) = A1, so(4) = A1xA1, so(6) = A3.
/// so(1) and so(2) contribute no semisimple factor and yield an empty list.
std::vector<SimpleType> so(int n);
/// Symplectic algebras sp(2l) = C_l with sp(2) = A1, sp(4) = B2.
std::vector<SimpleType> sp(int two_l);
/// sl(n) = A_{n-1}.
std::vector<SimpleType> sl(int n);

/// Enumerates every semisimple algebra of total rank exactly `r`.
std::vector<SemisimpleAlgebra> algebras_of_rank(int r);
/// Every simple type of rank <= `max_rank`, in canonical order.
std::vector<SimpleType> simple_types_up_to(int max_rank);
/// Every algebra with 1..max_factors simple factors, each of rank <= max_factor_rank.
std::vector<SemisimpleAlgebra> algebra_catalog(int max_factors, int max_factor_rank);

}  // namespace eqrank
