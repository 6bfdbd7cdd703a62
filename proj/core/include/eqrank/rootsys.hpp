#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "eqrank/algebra.hpp"
#include "eqrank/linalg.hpp"
#include "eqrank/weight.hpp"

namespace eqrank {

/// Root datum of one simple type in its ambient coordinates.
///
/// Long roots have squared length 2. Type A uses the e-basis e_1..e_n of
/// Lambda with e_1 + ... + e_{n+1} = 0; every other family uses the
/// fundamental-weight basis. In both cases the coordinates of a lattice
/// weight are integers.
struct RootSystem {
  SimpleType type;
  std::size_t rank = 0;

  std::vector<Weight> simple_roots{};  // Bourbaki order
  std::vector<Weight> positive_roots{};        // sorted by height, then lexicographically
  std::vector<Weight> roots{};                 // positive then negative
  std::vector<std::vector<int>> cartan{};      // cartan[i][j] = 2<a_i,a_j>/<a_j,a_j>
  Matrix simple_gram{};                        // <a_i,a_j>
  Matrix gram{};                               // inner product on ambient coordinates
  Matrix coroot_functionals{};                 // row j maps w to <w, a_j^vee>
  Matrix simple_root_inverse{};                // w -> coefficients in the simple roots
  std::vector<Weight> fundamental_weights{};
  Weight highest_root{};
  std::vector<int> highest_root_marks{};       // coefficients of the highest root
  std::uint64_t weyl_order = 0;

  Rational inner(const Weight& u, const Weight& v) const { return gram.bilinear(u.coords(), v.coords()); }
  /// Dynkin labels <w, a_j^vee>.
  Vec dynkin_labels(const Weight& w) const;
  Weight from_dynkin_labels(const Vec& labels) const;
  /// Coefficients of w in the simple roots.
  Vec simple_coefficients(const Weight& w) const;
  Weight reflect(const Weight& w, std::size_t j) const;
  bool is_dominant(const Weight& w) const;
  bool is_root(const Weight& w) const;
  Weight rho() const;
};

/// Builds the root system by closing the simple roots under simple reflections.
RootSystem build_root_system(const SimpleType& t);

/// Cached, shared root system for `t`.
std::shared_ptr<const RootSystem> root_system(const SimpleType& t);

/// Standard Cartan matrix of `t` (same convention as RootSystem::cartan).
std::vector<std::vector<int>> cartan_matrix(const SimpleType& t);

/// Order of the group generated by the reflections `nodes` of `rs`,
/// computed as a product of parabolic orbit sizes.
std::uint64_t parabolic_weyl_order(const RootSystem& rs, std::vector<std::size_t> nodes);

/// Weyl orbit of `w` under the simple reflections of `rs`.
std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs);

/// e-basis coordinates of an A_n weight, and back. e_{n+1} maps to (-1,...,-1).
Vec e_basis_coords(const Weight& w, const RootSystem& rs);
Weight from_e_basis(const Vec& v, const RootSystem& rs);
/// e_i for 1 <= i <= n+1 in an A_n block.
Weight e_vector(std::size_t i, std::size_t n);

Weight highest_root(const SimpleType& t);

/// Root data of a semisimple algebra: factor root systems laid out as
/// consecutive coordinate blocks.
class AlgebraModel {
 public:
  explicit AlgebraModel(SemisimpleAlgebra algebra);

  const SemisimpleAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  const RootSystem& factor(std::size_t i) const { return *factors_.at(i); }
  std::size_t offset(std::size_t i) const { return offsets_.at(i); }
  std::size_t factor_dim(std::size_t i) const { return factors_.at(i)->rank; }

  /// Block-diagonal gram of the factors' normalized grams.
  const Matrix& gram() const noexcept { return gram_; }
  const std::vector<Weight>& roots() const noexcept { return roots_; }
  const std::vector<Weight>& positive_roots() const noexcept { return positive_roots_; }
  /// Index of the factor each root (in `roots()`) belongs to.
  const std::vector<std::size_t>& root_factor() const noexcept { return root_factor_; }
  std::size_t num_simple() const noexcept { return dim_; }
  /// Simple root `s` (global numbering) embedded in ambient coordinates.
  Weight simple_root(std::size_t s) const;
  std::size_t factor_of_simple(std::size_t s) const;

  Weight embed(const Weight& block, std::size_t i) const;
  Weight restrict_to(const Weight& w, std::size_t i) const;
  Weight zero() const { return Weight(dim_); }

  Weight reflect(const Weight& w, std::size_t s) const;
  Vec dynkin_labels(const Weight& w) const;
  Weight from_dynkin_labels(const Vec& labels) const;
  bool is_dominant(const Weight& w) const;
  bool in_lattice(const Weight& w) const { return w.is_integral(); }
  /// Matrix of the simple reflection `s` acting on coordinate columns.
  Matrix reflection_matrix(std::size_t s) const;
  void check_dim(const Weight& w) const;

 private:
  SemisimpleAlgebra algebra_;
  std::vector<std::shared_ptr<const RootSystem>> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> simple_owner_;
  std::size_t dim_ = 0;
  Matrix gram_;
  std::vector<Weight> roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::size_t> root_factor_;
};

/// Cached, shared model for `g`.
std::shared_ptr<const AlgebraModel> algebra_model(const SemisimpleAlgebra& g);

}  // namespace eqrank
