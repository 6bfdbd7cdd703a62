#include "eqrank/equiv.hpp"

#include <sstream>
#include <stdexcept>

#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

namespace {

using Parts = std::vector<std::vector<SimpleType>>;

SemisimpleAlgebra join(const Parts& parts) {
  std::vector<SimpleType> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  return SemisimpleAlgebra(std::move(all));
}

std::string so_name(int n) { return "so(" + std::to_string(n) + ")"; }
std::string sp_name(int n) { return "sp(" + std::to_string(n) + ")"; }
std::string sl_name(int n) { return "sl(" + std::to_string(n) + ")"; }

MaximalRankRow row(SimpleType t, const Parts& parts, const std::string& lhs, const std::vector<std::string>& rhs) {
  std::string rule = lhs + " >";
  for (std::size_t i = 0; i < rhs.size(); ++i) rule += (i ? " + " : " ") + rhs[i];
  return {t, join(parts), rule};
}

SemisimpleAlgebra replace_factor(const SemisimpleAlgebra& g, std::size_t index, const SemisimpleAlgebra& sub) {
  std::vector<SimpleType> out;
  for (std::size_t i = 0; i < g.num_factors(); ++i)
    if (i != index) out.push_back(g.factors()[i]);
  out.insert(out.end(), sub.factors().begin(), sub.factors().end());
  return SemisimpleAlgebra(std::move(out));
}

std::map<int, int> a_counts_where(const SemisimpleAlgebra& g, bool (*keep)(int)) {
  std::map<int, int> out;
  for (const auto& t : g.factors())
    if (t.is_type_a() && keep(t.rank())) ++out[t.rank()];
  return out;
}

bool tracked_by_reduction(int n) { return n == 4 || is_protected_rank(n); }

}  // namespace

std::vector<MaximalRankRow> maximal_rank_rows(const SimpleType& t) {
  std::vector<MaximalRankRow> rows;
  const int l = t.rank();
  switch (t.family()) {
    case Family::A: break;
    case Family::B:
      for (int k = 2; k <= l; ++k)
        rows.push_back(row(t, {so(2 * k), so(2 * (l - k) + 1)}, so_name(2 * l + 1),
                           {so_name(2 * k), so_name(2 * (l - k) + 1)}));
      break;
    case Family::C:
      if (l >= 3)
        for (int k = 1; k <= l / 2; ++k)
          rows.push_back(row(t, {sp(2 * k), sp(2 * (l - k))}, sp_name(2 * l), {sp_name(2 * k), sp_name(2 * (l - k))}));
      break;
    case Family::D:
      for (int k = 2; 2 * k <= l + 1; ++k)
        rows.push_back(row(t, {so(2 * k), so(2 * (l - k))}, so_name(2 * l), {so_name(2 * k), so_name(2 * (l - k))}));
      break;
    case Family::E:
      if (l == 6) {
        rows.push_back(row(t, {sl(2), sl(6)}, "E6", {sl_name(2), sl_name(6)}));
        rows.push_back(row(t, {sl(3), sl(3), sl(3)}, "E6", {sl_name(3), sl_name(3), sl_name(3)}));
      } else if (l == 7) {
        rows.push_back(row(t, {sl(2), so(12)}, "E7", {sl_name(2), so_name(12)}));
        rows.push_back(row(t, {sl(3), sl(6)}, "E7", {sl_name(3), sl_name(6)}));
        rows.push_back(row(t, {sl(8)}, "E7", {sl_name(8)}));
      } else {
        rows.push_back(row(t, {sl(2), {E(7)}}, "E8", {sl_name(2), "E7"}));
        rows.push_back(row(t, {sl(3), {E(6)}}, "E8", {sl_name(3), "E6"}));
        rows.push_back(row(t, {sl(5), sl(5)}, "E8", {sl_name(5), sl_name(5)}));
        rows.push_back(row(t, {so(16)}, "E8", {so_name(16)}));
        rows.push_back(row(t, {sl(9)}, "E8", {sl_name(9)}));
      }
      break;
    case Family::F:
      rows.push_back(row(t, {sl(2), sp(6)}, "F4", {sl_name(2), sp_name(6)}));
      rows.push_back(row(t, {sl(3), sl(3)}, "F4", {sl_name(3), sl_name(3)}));
      rows.push_back(row(t, {so(9)}, "F4", {so_name(9)}));
      break;
    case Family::G:
      rows.push_back(row(t, {sl(3)}, "G2", {sl_name(3)}));
      rows.push_back(row(t, {so(4)}, "G2", {so_name(4)}));
      break;
  }
  return rows;
}

std::vector<MaximalRankRow> maximal_rank_table(int max_rank) {
  std::vector<MaximalRankRow> out;
  for (const auto& t : simple_types_up_to(max_rank)) {
    auto rows = maximal_rank_rows(t);
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string maximal_rank_table_text(int max_rank) {
  std::ostringstream os;
  for (const auto& r : maximal_rank_table(max_rank))
    os << r.ambient.to_string() << "\t" << r.sub.to_string() << "\t" << r.rule << "\n";
  return os.str();
}

namespace {

std::vector<SimpleType> concat(std::initializer_list<std::vector<SimpleType>> parts) {
  std::vector<SimpleType> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// One reduction step for a non-A simple type: the replacing factors and the rule.
std::vector<SimpleType> reduction_factors(const SimpleType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::B: return so(2 * l);
    case Family::D: return concat({so(4), so(2 * l - 4)});
    case Family::C: return concat({sp(2), sp(2 * l - 2)});
    case Family::E: return l == 6 ? concat({sl(3), sl(3), sl(3)}) : sl(l == 7 ? 8 : 9);
    case Family::F: return concat({sl(3), sl(3)});
    case Family::G: return sl(3);
    case Family::A: break;
  }
  return {t};
}

std::string reduction_rule(const SimpleType& t) {
  const int l = t.rank();
  switch (t.family()) {
    case Family::B: return so_name(2 * l + 1) + " > " + so_name(2 * l);
    case Family::D: return so_name(2 * l) + " > " + so_name(4) + " + " + so_name(2 * l - 4);
    case Family::C: return sp_name(2 * l) + " > " + sp_name(2) + " + " + sp_name(2 * l - 2);
    case Family::E: return l == 6 ? "E6 > sl(3) + sl(3) + sl(3)" : l == 7 ? "E7 > sl(8)" : "E8 > sl(9)";
    case Family::F: return "F4 > sl(3) + sl(3)";
    case Family::G: return "G2 > sl(3)";
    case Family::A: break;
  }
  return {};
}

// A-type factors of the full reduction, without recording steps.
std::vector<SimpleType> reduced_factors(const SemisimpleAlgebra& g) {
  std::vector<SimpleType> out;
  std::vector<SimpleType> work(g.factors().rbegin(), g.factors().rend());
  while (!work.empty()) {
    const SimpleType t = work.back();
    work.pop_back();
    if (t.is_type_a()) {
      out.push_back(t);
      continue;
    }
    const auto next = reduction_factors(t);
    work.insert(work.end(), next.rbegin(), next.rend());
  }
  return out;
}

}  // namespace

Reduction a_type_reduction(const SemisimpleAlgebra& g) {
  Reduction out{g, {}};
  for (;;) {
    const auto& fs = out.result.factors();
    std::size_t idx = 0;
    while (idx < fs.size() && fs[idx].is_type_a()) ++idx;
    if (idx == fs.size()) break;
    const SimpleType t = fs[idx];
    const std::string rule = reduction_rule(t);
    ReductionStep step{out.result, replace_factor(out.result, idx, SemisimpleAlgebra(reduction_factors(t))), rule};
    if (step.before.rank() != step.after.rank() ||
        a_counts_where(step.before, tracked_by_reduction) != a_counts_where(step.after, tracked_by_reduction))
      throw std::logic_error("reduction step " + rule + " changed the rank or a tracked A_n count");
    out.result = step.after;
    out.steps.push_back(std::move(step));
  }
  return out;
}

std::string EquivClassInvariant::to_string() const {
  std::ostringstream os;
  os << "rank " << rank << ", A_n counts {";
  bool first = true;
  for (const auto& [n, c] : a_counts) {
    os << (first ? "" : ", ") << "A" << n << ": " << c;
    first = false;
  }
  os << "}, A4 parity " << (a4_odd ? "odd" : "even");
  return os.str();
}

EquivClassInvariant invariant(const SemisimpleAlgebra& g) {
  EquivClassInvariant inv;
  inv.rank = g.rank();
  int a4 = 0;
  for (const auto& t : reduced_factors(g)) {
    if (is_protected_rank(t.rank())) ++inv.a_counts[t.rank()];
    if (t.rank() == 4) ++a4;
  }
  inv.a4_odd = a4 % 2 == 1;
  return inv;
}

bool equal_rank_equivalent(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h) {
  return invariant(g) == invariant(h);
}

SemisimpleAlgebra canonical_form(const SemisimpleAlgebra& g) {
  const EquivClassInvariant inv = invariant(g);
  std::vector<SimpleType> fs;
  int used = 0;
  for (const auto& [n, c] : inv.a_counts)
    for (int i = 0; i < c; ++i) {
      fs.push_back(A(n));
      used += n;
    }
  if (inv.a4_odd) {
    fs.push_back(A(4));
    used += 4;
  }
  for (int i = used; i < inv.rank; ++i) fs.push_back(A(1));
  return SemisimpleAlgebra(std::move(fs));
}

std::set<std::uint64_t> square_class_invariant(const SemisimpleAlgebra& g) {
  std::map<std::uint64_t, int> exponents;
  for (const auto& t : reduced_factors(g))
    for (auto p : odd_primes_at_least_5(Rational(t.rank() + 1))) ++exponents[p];
  std::set<std::uint64_t> out;
  for (const auto& [p, e] : exponents)
    if (e % 2) out.insert(p);
  return out;
}

DetIdentityReport det_identity_report(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, const Matrix& a,
                                      const CharacterMetric& q) {
  if (!(q.algebra == g)) throw AlgebraMismatch("metric is over " + q.algebra.to_string() + ", not " + g.to_string());
  const auto mg = algebra_model(g);
  const auto mh = algebra_model(h);
  if (mg->dim() != mh->dim()) throw DimensionError("g and h must have the same rank");
  if (a.rows() != mg->dim() || a.cols() != mh->dim()) throw DimensionError("A must be rank x rank");

  DetIdentityReport rep;
  rep.det_a = determinant(a);
  const Matrix p = a.transpose() * q.form * a;

  rep.block_ok = true;
  Rational rhs = 1;
  std::ostringstream detail;
  for (std::size_t j = 0; j < mh->num_factors(); ++j) {
    const std::size_t off = mh->offset(j), len = mh->factor_dim(j);
    for (std::size_t r = off; r < off + len; ++r)
      for (std::size_t c = 0; c < p.cols(); ++c)
        if ((c < off || c >= off + len) && p(r, c) != 0) rep.block_ok = false;
    const Matrix& gj = mh->factor(j).simple_gram;
    const auto mu = proportionality(p.block(off, off, len, len), gj);
    if (!mu || *mu <= 0) {
      rep.block_ok = false;
      rep.mu.push_back(0);
      detail << "block " << j << " (" << h.factors()[j].to_string() << ") is not a positive multiple of its gram; ";
      continue;
    }
    rep.mu.push_back(*mu);
    Rational mu_pow = 1;
    for (std::size_t k = 0; k < len; ++k) mu_pow *= *mu;
    rhs *= mu_pow * determinant(gj);
  }

  Rational form_det_expected = 1, g_dets = 1;
  for (std::size_t i = 0; i < mg->num_factors(); ++i) {
    Rational gamma_pow = 1;
    for (std::size_t k = 0; k < mg->factor_dim(i); ++k) gamma_pow *= q.block_scalars[i];
    const Rational d = determinant(mg->factor(i).gram);
    form_det_expected *= gamma_pow * d;
    g_dets *= d;
  }
  const Rational form_det = determinant(q.form);
  rep.det_ok = rep.block_ok && form_det == form_det_expected && rep.det_a * rep.det_a * form_det == rhs;
  if (!rep.det_ok) detail << "determinant identity fails; ";

  rep.scalars_in_2_3 = true;
  for (const auto& gamma : q.block_scalars) rep.scalars_in_2_3 = rep.scalars_in_2_3 && in_two_three_group(gamma);
  for (const auto& mu : rep.mu) rep.scalars_in_2_3 = rep.scalars_in_2_3 && mu != 0 && in_two_three_group(mu);

  rep.sq_g = odd_primes_at_least_5(1 / g_dets);
  Rational h_dets = 1;
  for (std::size_t j = 0; j < mh->num_factors(); ++j) h_dets *= determinant(mh->factor(j).simple_gram);
  rep.sq_h = odd_primes_at_least_5(h_dets);
  rep.detail = detail.str();
  return rep;
}

bool verify_det_identity(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, const Matrix& a,
                         const CharacterMetric& q) {
  return det_identity_report(g, h, a, q).ok();
}

}  // namespace eqrank
