#pragma once

#include <set>
#include <string>
#include <vector>

#include "eqrank/chars.hpp"
#include "eqrank/linalg.hpp"

namespace eqrank {

/// Inner product on the weight space induced by a faithful character.
///
/// `dual_form` is sum_w m(w) * w w^T, the product (x, y) = sum alpha(x) alpha(y)
/// on coordinate functionals; `form` is its inverse and measures weights.
/// Each diagonal block of `form` is `block_scalars[i]` times the factor's
/// normalized gram (long roots of squared length 2).
struct CharacterMetric {
  SemisimpleAlgebra algebra;
  Matrix dual_form;
  Matrix form;
  std::vector<Rational> block_scalars;

  Rational inner(const Weight& u, const Weight& v) const;
  Rational norm_sq(const Weight& u) const { return inner(u, u); }
};

/// Throws DegenerateForm when `c` is not faithful.
CharacterMetric character_metric(const FormalCharacter& c);

/// The normalized gram of `g` packaged as a metric (all block scalars 1).
CharacterMetric normalized_metric(const SemisimpleAlgebra& g);

enum class AngleClass { Deg0, Deg30, Deg45, Deg60, Deg90, Deg120, Deg135, Deg150, Deg180, Other };

std::string to_string(AngleClass a);
/// Angle in degrees, or -1 for Other.
int degrees(AngleClass a);

/// 4 cos^2 of the angle between u and v, through `form`.
Rational four_cos_sq(const Weight& u, const Weight& v, const CharacterMetric& m);
/// Same quantity evaluated with `dual_form` on the functionals form*u, form*v.
Rational four_cos_sq_via_dual(const Weight& u, const Weight& v, const CharacterMetric& m);

/// Crystallographic angle class; Other when 4cos^2 is not in {0,...,4}.
/// Throws Error on a zero vector.
AngleClass angle_class(const Weight& u, const Weight& v, const CharacterMetric& m);

/// <u,u> / <v,v>.
Rational ratio_square(const Weight& u, const Weight& v, const CharacterMetric& m);

/// Squared-length ratios <u,u>/<v,v> two roots at angle `a` may have.
/// Empty for Deg90, which constrains nothing, and for Other.
std::set<Rational> allowed_ratio_squares(AngleClass a);

/// Orthogonal projection of u onto the span of factor `q`'s block.
Weight project_to_factor(const Weight& u, std::size_t q, const CharacterMetric& m);

/// (sum a_i^2 + sum_{i<j} (a_i - a_j)^2) / (n + 1): squared length of
/// a_1 e_1 + ... + a_n e_n in A_n.
Rational length_sq_A(const Vec& coeffs, int n);

enum class ProjectionCase { Deg60, Deg45Long, Deg45Short };

/// Squared length of the projection u' of a root (|u|^2 = 2) onto an A_{n'}
/// factor when u' has 0/1 coordinates with k' zeros.
/// Deg60: factor roots have squared length 2, giving (n'-k')(k'+1)/(n'+1).
/// Deg45Long: factor roots of squared length 4, twice the Deg60 value.
/// Deg45Short: factor roots of squared length 1; the projection then has
/// coordinates in {0, 2}, which again gives twice the Deg60 value.
Rational projection_length_case(int n_prime, int k_prime, ProjectionCase c);

struct CrossGeometryEntry {
  Weight h_root;
  std::size_t factor = 0;
  std::set<AngleClass> angles;
  bool projection_nonzero = false;
  bool contained = false;
  bool perpendicular = false;
};

struct CrossGeometryReport {
  std::vector<CrossGeometryEntry> entries;  // one per (h-root, g-factor)
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the angle, ratio and projection constraints between the roots of
/// an equal-rank partner h and the factors of g = m.algebra. Every g-root
/// must lie in a single factor block.
///
/// Flagged: an Other angle or an off-table length ratio; for an A_n factor,
/// n >= 2, that u is neither in nor perpendicular to, an angle to some
/// g-root outside {45, 60, 90, 120, 135}; for such A_n with n >= 4, more than
/// two factors meeting u; for such A_n with n = 6 or n >= 8, any occurrence.
CrossGeometryReport validate_cross_geometry(const std::vector<Weight>& roots_g, const std::vector<Weight>& roots_h,
                                            const CharacterMetric& m);

}  // namespace eqrank
