#include "eqrank/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "eqrank/chars.hpp"
#include "eqrank/dioph.hpp"
#include "eqrank/embed.hpp"
#include "eqrank/equiv.hpp"
#include "eqrank/metric.hpp"
#include "eqrank/oracle.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

namespace {

// Collects failures; `detail` reports the first few and a summary.
class Findings {
 public:
  void fail(const std::string& what) {
    if (failures_ < 5) failed_ << (failures_ ? "; " : "") << what;
    ++failures_;
  }
  void check(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string failures() const {
    return failed_.str() + (failures_ > 5 ? " (+" + std::to_string(failures_ - 5) + " more)" : "");
  }

 private:
  std::ostringstream failed_;
  std::size_t failures_ = 0;
};

CheckResult timed(int id, std::string name, double limit, const std::function<std::string(Findings&)>& body) {
  CheckResult r{id, std::move(name), false, {}, 0, limit};
  Findings f;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body(f);
  } catch (const std::exception& e) {
    f.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && r.seconds >= limit) {
    std::ostringstream os;
    os << "took " << std::fixed << std::setprecision(2) << r.seconds << " s, limit " << limit << " s";
    f.fail(os.str());
  }
  r.pass = f.ok();
  if (!r.pass) r.detail = f.failures() + (r.detail.empty() ? "" : " | " + r.detail);
  return r;
}

const EqualRankEmbedding* find_sub(const std::vector<EqualRankEmbedding>& es, const SemisimpleAlgebra& g) {
  for (const auto& e : es)
    if (e.sub == g) return &e;
  return nullptr;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

CheckResult check_diophantine() {
  return timed(1, "Diophantine solutions", 1.0, [](Findings& f) {
    const std::set<DSolution> expected{{1, 5, 2}, {1, 7, 1}, {1, 7, 5}, {2, 5, 1}, {2, 5, 3}, {4, 4, 1}, {4, 4, 2}};
    const auto solved = solve_D();
    f.check(solved == expected, "solve_D differs from the seven known triples");
    for (const auto& s : solved) f.check(satisfies_d(s), "a returned triple does not satisfy the equation");
    const auto swept = brute_force_D(1000);
    f.check(swept == solved, "sweep to 1000 found " + std::to_string(swept.size()) + " solutions");
    return std::to_string(solved.size()) + " solutions, sweep to 1000 agrees";
  });
}

CheckResult check_auxiliary_equations() {
  return timed(2, "auxiliary equations", 1.0, [](Findings& f) {
    f.check(solve_k_equation() == std::set<std::pair<std::int64_t, std::int64_t>>{{3, 1}},
            "k(n-k-1) = 1 solutions differ from {(3,1)}");
    f.check(solve_60_equation() == std::set<std::int64_t>{8, 9}, "60-degree equation solutions differ from {8,9}");
    return std::string("(n,k) = (3,1); N in {8, 9}");
  });
}

CheckResult check_equivalence_chains() {
  return timed(3, "equivalence chains", 10.0, [](Findings& f) {
    const SemisimpleAlgebra a2_4{A(2), A(2), A(2), A(2)};
    const std::vector<std::pair<SemisimpleAlgebra, SemisimpleAlgebra>> pairs{
        {{A(4), A(4)}, {A(8)}},     {{A(8)}, a2_4},  {{A(4), A(4)}, a2_4},
        {{A(7)}, {A(2), A(5)}},     {{A(1), A(5)}, {A(2), A(2), A(2)}},
        {{A(2)}, {A(1), A(1)}},     {{A(3)}, {A(1), A(1), A(1)}},
    };
    std::vector<std::string> depths;
    for (const auto& [g, h] : pairs) {
      const std::string name = g.to_string() + " ~ " + h.to_string();
      f.check(equal_rank_equivalent(g, h), name + " has different invariants");
      const auto d = rewrite_distance(g, h, 6);
      f.check(d.has_value(), name + " not reached by rewriting within 6 steps");
      depths.push_back(name + " in " + (d ? std::to_string(*d) : std::string("-")));
    }
    return join(depths);
  });
}

CheckResult check_e8_restrictions() {
  return timed(4, "E8 restrictions", 30.0, [](Findings& f) {
    const SemisimpleAlgebra e8{E(8)};
    const auto adj = adjoint_character(e8);
    const auto es = maximal_equal_rank_subalgebras(E(8));
    const auto* e7a1 = find_sub(es, {A(1), E(7)});
    const auto* a4a4 = find_sub(es, {A(4), A(4)});
    if (!e7a1 || !a4a4) {
      f.fail("missing E8 embedding");
      return std::string();
    }
    const auto r1 = restrict_character(adj, *e7a1);
    const auto r2 = restrict_character(adj, *a4a4);
    f.check(r1.dim() == 248 && r2.dim() == 248, "restricted dimensions are not 248");
    const auto w1 = ambient_weights(r1, *e7a1);
    const auto w2 = ambient_weights(r2, *a4a4);
    f.check(w1 == w2, "ambient weight multisets differ");
    f.check(w1 == adj.weights(), "restriction along A1xE7 changed the weights");
    f.check(same_formal_character(r1, *e7a1, r2, *a4a4), "same_formal_character is false");
    const EquivClassInvariant expected{8, {}, false};
    f.check(invariant(e7a1->sub) == expected, "invariant(A1xE7) = " + invariant(e7a1->sub).to_string());
    f.check(invariant(a4a4->sub) == expected, "invariant(A4xA4) = " + invariant(a4a4->sub).to_string());
    return "dim 248, " + std::to_string(w1.size()) + " distinct weights, invariant " + expected.to_string();
  });
}

CheckResult check_metric_properties() {
  return timed(5, "metric properties", 0, [](Findings& f) {
    std::size_t types = 0;
    for (const auto& t : simple_types_up_to(6)) {
      const SemisimpleAlgebra g{t};
      const auto m = character_metric(adjoint_character(g));
      const auto model = algebra_model(g);
      for (std::size_t s = 0; s < model->num_simple(); ++s) {
        const Matrix r = model->reflection_matrix(s);
        f.check(r.transpose() * m.form * r == m.form, t.to_string() + " metric not invariant under reflection " +
                                                          std::to_string(s + 1));
      }
      f.check(m.block_scalars.size() == 1 && m.form == model->gram() * m.block_scalars[0],
              t.to_string() + " metric is not a multiple of the gram");
      ++types;
    }
    std::mt19937 rng(20260916);
    std::uniform_int_distribution<int> coef(-5, 5);
    std::size_t samples = 0;
    for (int n = 1; n <= 10; ++n) {
      const auto& gram = root_system(A(n))->gram;
      for (int s = 0; s < 200; ++s, ++samples) {
        Vec a(static_cast<std::size_t>(n));
        for (auto& x : a) x = coef(rng);
        f.check(length_sq_A(a, n) == gram.bilinear(a, a), "A" + std::to_string(n) + " length formula mismatch");
      }
    }
    return std::to_string(types) + " simple types, " + std::to_string(samples) + " sampled A_n weights";
  });
}

CheckResult check_determinant_identity() {
  return timed(6, "determinant identity", 0, [](Findings& f) {
    std::size_t count = 0;
    for (const SimpleType t : {E(6), E(7), E(8), F4(), G2()}) {
      const SemisimpleAlgebra g{t};
      const auto q = normalized_metric(g);
      for (const auto& e : equal_rank_subalgebras(t)) {
        ++count;
        const std::string name = t.to_string() + " > " + e.sub.to_string();
        const auto rep = det_identity_report(g, e.sub, e.sub_simple_roots, q);
        f.check(rep.ok(), name + ": " + rep.detail);
        f.check(verify_det_identity(g, e.sub, e.sub_simple_roots, q), name + ": verify_det_identity is false");
        f.check(rep.sq_g == rep.sq_h, name + ": square classes differ");
        f.check(rep.sq_g == square_class_invariant(g), name + ": ambient square class disagrees with reduction");
        f.check(rep.sq_h == square_class_invariant(e.sub), name + ": sub square class disagrees with reduction");
      }
    }
    return std::to_string(count) + " embeddings";
  });
}

CheckResult check_reduction_soundness() {
  return timed(7, "reduction soundness", 0, [](Findings& f) {
    const auto catalog = algebra_catalog(4, 8);
    const auto relations = rewrite_relations(32);
    std::size_t moves = 0;
    for (const auto& g : catalog) {
      const std::string name = g.to_string();
      const auto red = a_type_reduction(g);
      f.check(red.result.all_type_a(), name + ": reduction left a non-A factor");
      for (const auto& s : red.steps) {
        bool kept = s.before.rank() == s.after.rank() && s.before.count_a(4) == s.after.count_a(4) &&
                    s.before.count_a(6) == s.after.count_a(6);
        for (int n = 9; n <= s.before.rank(); ++n) kept = kept && s.before.count_a(n) == s.after.count_a(n);
        f.check(kept, name + ": step " + s.rule + " changes a protected count");
      }
      const auto inv = invariant(g);
      const auto canon = canonical_form(g);
      f.check(canonical_form(canon) == canon, name + ": canonical form is not idempotent");
      f.check(invariant(canon) == inv, name + ": canonical form changes the invariant");
      // Every single rewrite move keeps the invariant and the canonical form, so
      // both are constant on rewrite-connected pairs at any depth.
      for (const auto& h : rewrite_neighbors(g, relations)) {
        ++moves;
        f.check(invariant(h) == inv, name + " -> " + h.to_string() + " changes the invariant");
        f.check(canonical_form(h) == canon, name + " -> " + h.to_string() + " changes the canonical form");
      }
    }
    std::ostringstream graphs;
    for (int r = 1; r <= 8; ++r) {
      const auto s = rewrite_graph_summary(r);
      for (const auto& p : s.problems) f.fail("rank " + std::to_string(r) + ": " + p);
      graphs << (r > 1 ? ", " : "") << "rank " << r << " depth " << s.max_depth;
    }
    return std::to_string(catalog.size()) + " algebras, " + std::to_string(moves) +
           " rewrite moves; largest rewrite distance per rank: " + graphs.str();
  });
}

CheckResult check_character_oracle() {
  return timed(8, "character oracle", 0, [](Findings& f) {
    std::size_t count = 0;
    for (int r = 1; r <= 4; ++r)
      for (const auto& g : algebras_of_rank(r)) {
        const auto model = algebra_model(g);
        const auto n = static_cast<std::size_t>(r);
        std::vector<int> labels(n, 0);
        // all nonnegative label vectors with sum <= 4, odometer style
        while (true) {
          Vec l(labels.begin(), labels.end());
          const auto c = irreducible_character_from_labels(g, l);
          const auto w = weyl_dim_formula(g, model->from_dynkin_labels(l));
          f.check(c.dim() == w, g.to_string() + " " + to_string(l) + ": " + std::to_string(c.dim()) + " vs " +
                                    std::to_string(w));
          ++count;
          std::size_t i = 0;
          int sum = 0;
          for (int x : labels) sum += x;
          while (i < n && sum == 4) {
            sum -= labels[i];
            labels[i] = 0;
            ++i;
          }
          if (i == n) break;
          ++labels[i];
        }
        f.check(adjoint_character(g).multiplicity(model->zero()) == static_cast<std::uint64_t>(r),
                g.to_string() + ": adjoint zero weight multiplicity is not the rank");
      }
    return std::to_string(count) + " highest weights";
  });
}

CheckResult check_cross_geometry() {
  return timed(9, "cross geometry", 0, [](Findings& f) {
    const auto adj = adjoint_character(SemisimpleAlgebra{E(8)});
    const auto es = maximal_equal_rank_subalgebras(E(8));
    const auto* a44 = find_sub(es, {A(4), A(4)});
    const auto* e7a1 = find_sub(es, {A(1), E(7)});
    if (!a44 || !e7a1) {
      f.fail("missing E8 embedding");
      return std::string();
    }
    std::set<int> seen;
    std::size_t entries = 0;
    bool control_flagged = true;
    for (const auto& [g, h] : {std::pair{a44, e7a1}, std::pair{e7a1, a44}}) {
      const auto m = character_metric(restrict_character(adj, *g));
      std::vector<Weight> roots_h;
      for (const auto& r : algebra_model(h->sub)->roots()) roots_h.push_back(g->sub_coords(h->ambient_coords(r)));
      const auto& roots_g = algebra_model(g->sub)->roots();
      const auto report = validate_cross_geometry(roots_g, roots_h, m);
      for (const auto& v : report.violations) f.fail(g->sub.to_string() + ": " + v);
      for (const auto& e : report.entries) {
        for (const auto a : e.angles) {
          f.check(a != AngleClass::Other, "angle outside the crystallographic set");
          seen.insert(degrees(a));
        }
      }
      entries += report.entries.size();
      auto perturbed = roots_h;
      perturbed.front()[0] += 1;
      control_flagged = control_flagged && !validate_cross_geometry(roots_g, perturbed, m).ok();
    }
    f.check(control_flagged, "perturbed root was not flagged");
    std::string angles;
    for (int d : seen) angles += (angles.empty() ? "" : ", ") + std::to_string(d);
    return std::to_string(entries) + " root/factor pairs, angles {" + angles + "}, perturbed control flagged";
  });
}

std::vector<CheckResult> run_all_checks() {
  return {check_diophantine(),          check_auxiliary_equations(),  check_equivalence_chains(),
          check_e8_restrictions(),      check_metric_properties(),    check_determinant_identity(),
          check_reduction_soundness(),  check_character_oracle(),     check_cross_geometry()};
}

std::string to_line(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " (" << std::fixed << std::setprecision(2)
     << r.seconds << " s";
  if (r.limit_seconds > 0) os << ", limit " << std::setprecision(0) << r.limit_seconds << " s";
  os << "): " << r.detail;
  return os.str();
}

}  // namespace eqrank
