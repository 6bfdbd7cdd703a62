#pragma once

// Cross-checks of the whole library, one per acceptance criterion.

#include <string>
#include <vector>

namespace eqrank {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 when the check has no time limit
};

/// solve_D gives the seven known triples and the sweep to 1000 agrees; < 1 s.
CheckResult check_diophantine();
/// k(n-k-1) = 1 has only (3, 1); the 60-degree equation only N = 8, 9; < 1 s.
CheckResult check_auxiliary_equations();
/// Known equivalence chains hold by invariant and by rewriting within 6 steps; < 10 s.
CheckResult check_equivalence_chains();
/// The E8 adjoint restricted along A1xE7 and A4xA4 gives one weight multiset; < 30 s.
CheckResult check_e8_restrictions();
/// Adjoint metrics of rank <= 6 are W-invariant multiples of the gram, and the
/// A_n length formula matches the gram on 200 random weights per n <= 10.
CheckResult check_metric_properties();
/// The determinant identity and its square-class consequence on every
/// computed embedding of E6, E7, E8, F4, G2.
CheckResult check_determinant_identity();
/// Reduction steps, canonical forms and rewrite moves over the catalog of up
/// to 4 factors of rank <= 8, plus the full rewrite graphs of rank <= 8.
CheckResult check_reduction_soundness();
/// Freudenthal dimensions equal the Weyl formula on rank <= 4 with label sum
/// <= 4; the adjoint zero weight has multiplicity rank.
CheckResult check_character_oracle();
/// Cross geometry of the two E8 subsystems is clean; a perturbed root is flagged.
CheckResult check_cross_geometry();

std::vector<CheckResult> run_all_checks();

/// "PASS [3] name (0.12 s): detail"
std::string to_line(const CheckResult& r);

}  // namespace eqrank
