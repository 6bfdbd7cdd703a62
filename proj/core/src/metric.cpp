#include "eqrank/metric.hpp"

#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

Rational CharacterMetric::inner(const Weight& u, const Weight& v) const {
  if (u.dim() != form.rows() || v.dim() != form.rows())
    throw DimensionError("weight dimension does not match the metric");
  return form.bilinear(u.coords(), v.coords());
}

namespace {

std::vector<Rational> block_scalars_of(const AlgebraModel& model, const Matrix& form) {
  std::vector<Rational> out;
  const std::size_t n = model.dim();
  for (std::size_t i = 0; i < model.num_factors(); ++i) {
    const std::size_t off = model.offset(i), len = model.factor_dim(i);
    for (std::size_t r = off; r < off + len; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((c < off || c >= off + len) && form(r, c) != 0)
          throw Error("character metric is not block-diagonal across factors");
    const auto s = proportionality(form.block(off, off, len, len), model.factor(i).gram);
    if (!s || *s <= 0) throw Error("character metric block is not proportional to the factor gram");
    out.push_back(*s);
  }
  return out;
}

}  // namespace

CharacterMetric character_metric(const FormalCharacter& c) {
  if (!is_faithful(c))
    throw DegenerateForm("character of " + c.algebra().to_string() + " is not faithful; its weights do not span");
  const auto model = algebra_model(c.algebra());
  const std::size_t n = model->dim();
  Matrix dual(n, n);
  for (const auto& [w, mult] : c.weights()) {
    const Rational m(static_cast<unsigned long>(mult));
    const Vec& x = w.coords();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      const Rational mx = m * x[i];
      for (std::size_t j = 0; j < n; ++j)
        if (x[j] != 0) dual(i, j) += mx * x[j];
    }
  }
  if (!is_positive_definite(dual)) throw DegenerateForm("character weights do not span the weight space");
  auto form = inverse(dual);
  if (!form) throw DegenerateForm("dual form is singular");
  CharacterMetric out{c.algebra(), std::move(dual), std::move(*form), {}};
  out.block_scalars = block_scalars_of(*model, out.form);
  return out;
}

CharacterMetric normalized_metric(const SemisimpleAlgebra& g) {
  const auto model = algebra_model(g);
  auto dual = inverse(model->gram());
  return CharacterMetric{g, std::move(*dual), model->gram(), std::vector<Rational>(model->num_factors(), 1)};
}

std::string to_string(AngleClass a) {
  const int d = degrees(a);
  return d < 0 ? "other" : std::to_string(d);
}

int degrees(AngleClass a) {
  switch (a) {
    case AngleClass::Deg0: return 0;
    case AngleClass::Deg30: return 30;
    case AngleClass::Deg45: return 45;
    case AngleClass::Deg60: return 60;
    case AngleClass::Deg90: return 90;
    case AngleClass::Deg120: return 120;
    case AngleClass::Deg135: return 135;
    case AngleClass::Deg150: return 150;
    case AngleClass::Deg180: return 180;
    case AngleClass::Other: return -1;
  }
  return -1;
}

namespace {

void require_nonzero(const Weight& u, const Weight& v) {
  if (u.is_zero() || v.is_zero()) throw Error("angle with the zero vector is undefined");
}

}  // namespace

Rational four_cos_sq(const Weight& u, const Weight& v, const CharacterMetric& m) {
  require_nonzero(u, v);
  const Rational uv = m.inner(u, v);
  return 4 * uv * uv / (m.norm_sq(u) * m.norm_sq(v));
}

Rational four_cos_sq_via_dual(const Weight& u, const Weight& v, const CharacterMetric& m) {
  require_nonzero(u, v);
  const Vec fu = m.form * u.coords();
  const Vec fv = m.form * v.coords();
  const Rational uv = m.dual_form.bilinear(fu, fv);
  return 4 * uv * uv / (m.dual_form.bilinear(fu, fu) * m.dual_form.bilinear(fv, fv));
}

AngleClass angle_class(const Weight& u, const Weight& v, const CharacterMetric& m) {
  const Rational c = four_cos_sq(u, v, m);
  const int sign = sgn(m.inner(u, v));
  if (!is_integer(c) || c > 4) return AngleClass::Other;
  switch (c.get_num().get_si()) {
    case 0: return AngleClass::Deg90;
    case 1: return sign > 0 ? AngleClass::Deg60 : AngleClass::Deg120;
    case 2: return sign > 0 ? AngleClass::Deg45 : AngleClass::Deg135;
    case 3: return sign > 0 ? AngleClass::Deg30 : AngleClass::Deg150;
    case 4: return sign > 0 ? AngleClass::Deg0 : AngleClass::Deg180;
  }
  return AngleClass::Other;
}

Rational ratio_square(const Weight& u, const Weight& v, const CharacterMetric& m) {
  if (v.is_zero()) throw Error("ratio against the zero vector");
  return m.norm_sq(u) / m.norm_sq(v);
}

std::set<Rational> allowed_ratio_squares(AngleClass a) {
  switch (a) {
    case AngleClass::Deg0:
    case AngleClass::Deg180: return {Rational(1, 4), 1, 4};
    case AngleClass::Deg30:
    case AngleClass::Deg150: return {Rational(1, 3), 3};
    case AngleClass::Deg45:
    case AngleClass::Deg135: return {Rational(1, 2), 2};
    case AngleClass::Deg60:
    case AngleClass::Deg120: return {1};
    case AngleClass::Deg90:
    case AngleClass::Other: return {};
  }
  return {};
}

Weight project_to_factor(const Weight& u, std::size_t q, const CharacterMetric& m) {
  const auto model = algebra_model(m.algebra);
  model->check_dim(u);
  if (q >= model->num_factors()) throw Error("factor index " + std::to_string(q) + " out of range");
  const std::size_t n = model->dim(), off = model->offset(q), len = model->factor_dim(q);
  Matrix basis(n, len);
  for (std::size_t k = 0; k < len; ++k) basis(off + k, k) = 1;
  const Matrix bt_f = basis.transpose() * m.form;
  const auto g_inv = inverse(bt_f * basis);
  return Weight(basis * (*g_inv * (bt_f * u.coords())));
}

Rational length_sq_A(const Vec& coeffs, int n) {
  if (n < 1 || coeffs.size() != static_cast<std::size_t>(n)) throw DimensionError("length_sq_A expects n coefficients");
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    s += coeffs[i] * coeffs[i];
    for (std::size_t j = i + 1; j < coeffs.size(); ++j) {
      const Rational d = coeffs[i] - coeffs[j];
      s += d * d;
    }
  }
  return s / (n + 1);
}

Rational projection_length_case(int n_prime, int k_prime, ProjectionCase c) {
  if (k_prime < 0 || k_prime >= n_prime) throw Error("projection_length_case needs 0 <= k' < n'");
  const Rational base = Rational((n_prime - k_prime) * (k_prime + 1)) / (n_prime + 1);
  return c == ProjectionCase::Deg60 ? base : 2 * base;
}

CrossGeometryReport validate_cross_geometry(const std::vector<Weight>& roots_g, const std::vector<Weight>& roots_h,
                                            const CharacterMetric& m) {
  const auto model = algebra_model(m.algebra);
  const std::size_t nf = model->num_factors();
  std::vector<std::vector<const Weight*>> by_factor(nf);
  for (const auto& v : roots_g) {
    model->check_dim(v);
    std::size_t owner = nf;
    for (std::size_t q = 0; q < nf; ++q) {
      if (model->restrict_to(v, q).is_zero()) continue;
      if (owner != nf) throw Error("g-root " + v.to_string() + " spans more than one factor");
      owner = q;
    }
    if (owner == nf) throw Error("zero vector among g-roots");
    by_factor[owner].push_back(&v);
  }

  CrossGeometryReport report;
  auto flag = [&](const Weight& u, const std::string& what) {
    report.violations.push_back("h-root " + u.to_string() + ": " + what);
  };
  for (const auto& u : roots_h) {
    model->check_dim(u);
    std::size_t meeting = 0;
    std::vector<CrossGeometryEntry> rows;
    for (std::size_t q = 0; q < nf; ++q) {
      CrossGeometryEntry e{u, q, {}, false, false, false};
      const Weight p = project_to_factor(u, q, m);
      e.projection_nonzero = !p.is_zero();
      e.contained = p == u;
      e.perpendicular = p.is_zero();
      if (e.projection_nonzero) ++meeting;
      for (const Weight* v : by_factor[q]) {
        const AngleClass a = angle_class(u, *v, m);
        e.angles.insert(a);
        if (a == AngleClass::Other) {
          flag(u, "non-crystallographic angle with " + v->to_string());
        } else if (a != AngleClass::Deg90 && !allowed_ratio_squares(a).contains(ratio_square(u, *v, m))) {
          flag(u, "length ratio off the table at " + to_string(a) + " degrees with " + v->to_string());
        }
      }
      rows.push_back(std::move(e));
    }
    for (const auto& e : rows) {
      const SimpleType t = model->algebra().factors()[e.factor];
      if (!t.is_type_a() || t.rank() < 2 || e.contained || e.perpendicular) continue;
      const int n = t.rank();
      const std::string where = " (factor " + std::to_string(e.factor) + ", " + t.to_string() + ")";
      for (const auto& other : rows)
        for (AngleClass a : other.angles)
          if (a == AngleClass::Deg0 || a == AngleClass::Deg30 || a == AngleClass::Deg150 ||
              a == AngleClass::Deg180)
            flag(u, "angle " + to_string(a) + " with a g-root while skew to an A_n block" + where);
      if (n >= 4 && meeting > 2)
        flag(u, "meets " + std::to_string(meeting) + " factors while skew to an A_n block with n >= 4" + where);
      if (n == 6 || n >= 8) flag(u, "neither contained in nor perpendicular to" + where);
    }
    for (auto& e : rows) report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace eqrank
