#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eqrank/algebra.hpp"
#include "eqrank/linalg.hpp"
#include "eqrank/metric.hpp"

namespace eqrank {

/// One maximal semisimple subalgebra of maximal rank in a simple algebra.
struct MaximalRankRow {
  SimpleType ambient;
  SemisimpleAlgebra sub;
  std::string rule;  // e.g. "so(9) > so(4) + so(5)" or "E8 > sl(5) + sl(5)"
};

/// Rows for one simple type: so(2l+1) > so(2k)+so(2l-2k+1) (2 <= k <= l),
/// sp(2l) > sp(2k)+sp(2l-2k) (l >= 3, 1 <= k <= l/2),
/// so(2l) > so(2k)+so(2l-2k) (l >= 4, 2 <= k <= (l+1)/2), and the
/// exceptional rows. Type A has none.
std::vector<MaximalRankRow> maximal_rank_rows(const SimpleType& t);
/// Rows of every simple type of rank <= max_rank.
std::vector<MaximalRankRow> maximal_rank_table(int max_rank);
/// Plain-text listing of maximal_rank_table.
std::string maximal_rank_table_text(int max_rank);

struct ReductionStep {
  SemisimpleAlgebra before;
  SemisimpleAlgebra after;
  std::string rule;
};

struct Reduction {
  SemisimpleAlgebra result;
  std::vector<ReductionStep> steps;
};

/// True for the A_n whose count is an equivalence invariant: n = 6 or n >= 9.
inline bool is_protected_rank(int n) { return n == 6 || n >= 9; }

/// Rewrites the first non-A factor until only A-type factors remain:
/// B_l -> so(2l), D_l -> A1 x A1 x so(2l-4), C_l -> A1 x C_{l-1},
/// E6 -> A2^3, E7 -> A7, E8 -> A8, F4 -> A2^2, G2 -> A2.
/// Each step keeps the rank and the A_n counts for n = 4, 6 and n >= 9.
Reduction a_type_reduction(const SemisimpleAlgebra& g);

struct EquivClassInvariant {
  int rank = 0;
  std::map<int, int> a_counts;  // protected n -> count, zero counts omitted
  bool a4_odd = false;

  auto operator<=>(const EquivClassInvariant&) const = default;
  std::string to_string() const;
};

EquivClassInvariant invariant(const SemisimpleAlgebra& g);

/// Same rank, same protected A_n counts and same A4 parity.
bool equal_rank_equivalent(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h);

/// Protected A_n factors, then A4 if the parity is odd, then A1 to fill the rank.
SemisimpleAlgebra canonical_form(const SemisimpleAlgebra& g);

/// Primes >= 5 with odd exponent in prod (n_i + 1) over the A-type reduction.
std::set<std::uint64_t> square_class_invariant(const SemisimpleAlgebra& g);

/// Outcome of checking A^T Q A = blockdiag(mu_j G_j), where the columns of A
/// are a base of h's roots in g's coordinates (grouped by h's factors in order)
/// and G_j is the normalized simple-root gram of h's j-th factor (the Cartan
/// matrix when simply laced).
struct DetIdentityReport {
  bool block_ok = false;
  bool det_ok = false;
  std::vector<Rational> mu;
  Rational det_a;
  bool scalars_in_2_3 = false;     // every gamma_i, mu_j in 2^Z 3^Z
  std::set<std::uint64_t> sq_g;    // odd primes >= 5 in prod det(N_i)^-1
  std::set<std::uint64_t> sq_h;    // odd primes >= 5 in prod det(G_j)
  std::string detail;
  bool ok() const { return block_ok && det_ok; }
};

/// Also checks det(A)^2 prod gamma_i^{n_i} det(N_i) = prod mu_j^{r_j} det(G_j).
DetIdentityReport det_identity_report(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, const Matrix& a,
                                      const CharacterMetric& q);
bool verify_det_identity(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, const Matrix& a,
                         const CharacterMetric& q);

}  // namespace eqrank
