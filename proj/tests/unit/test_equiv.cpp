#include <doctest.h>

#include "eqrank/equiv.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

namespace {

Matrix simple_root_matrix(const SemisimpleAlgebra& g) {
  const auto m = algebra_model(g);
  std::vector<Vec> cols;
  for (std::size_t s = 0; s < m->num_simple(); ++s) cols.push_back(m->simple_root(s).coords());
  return Matrix::from_columns(cols);
}

}  // namespace

TEST_CASE("maximal-rank rows") {
  CHECK(maximal_rank_rows(A(5)).empty());
  const auto e8 = maximal_rank_rows(E(8));
  std::vector<SemisimpleAlgebra> subs;
  for (const auto& r : e8) subs.push_back(r.sub);
  CHECK(subs == std::vector<SemisimpleAlgebra>{{A(1), E(7)}, {A(2), E(6)}, {A(4), A(4)}, {D(8)}, {A(8)}});
  CHECK(e8[2].rule == "E8 > sl(5) + sl(5)");

  const auto b4 = maximal_rank_rows(B(4));
  REQUIRE(b4.size() == 3);
  CHECK(b4[0].sub == SemisimpleAlgebra{A(1), A(1), B(2)});
  CHECK(b4[0].rule == "so(9) > so(4) + so(5)");
  CHECK(b4[2].sub == SemisimpleAlgebra{D(4)});

  CHECK(maximal_rank_rows(C(2)).size() == 1);  // C2 is B2
  CHECK(maximal_rank_rows(C(3)).size() == 1);
  CHECK(maximal_rank_rows(C(3))[0].sub == SemisimpleAlgebra{A(1), B(2)});
  CHECK(maximal_rank_rows(D(4)).size() == 1);
  CHECK(maximal_rank_rows(D(5)).size() == 2);
  CHECK(maximal_rank_rows(G2()).size() == 2);

  for (const auto& r : maximal_rank_table(8)) {
    CAPTURE(r.rule);
    CHECK(r.sub.rank() == r.ambient.rank());
    CHECK_FALSE(r.sub == SemisimpleAlgebra{r.ambient});
  }
  CHECK(maximal_rank_table_text(2).find("G2\tA1xA1\tG2 > so(4)") != std::string::npos);
}

TEST_CASE("A-type reduction examples") {
  const auto b2 = a_type_reduction(SemisimpleAlgebra{B(2)});
  CHECK(b2.result == SemisimpleAlgebra{A(1), A(1)});
  REQUIRE(b2.steps.size() == 1);
  CHECK(b2.steps[0].rule == "so(5) > so(4)");
  CHECK(a_type_reduction(SemisimpleAlgebra{E(8)}).result == SemisimpleAlgebra{A(8)});
  CHECK(a_type_reduction(SemisimpleAlgebra{A(5)}).steps.empty());
  CHECK(a_type_reduction(SemisimpleAlgebra{D(7)}).result == SemisimpleAlgebra{A(1), A(1), A(1), A(1), A(3)});
  CHECK(a_type_reduction(SemisimpleAlgebra{C(4)}).result ==
        SemisimpleAlgebra{A(1), A(1), A(1), A(1)});
  CHECK(a_type_reduction(SemisimpleAlgebra{F4(), G2()}).result == SemisimpleAlgebra{A(2), A(2), A(2)});
}

TEST_CASE("reduction steps keep rank and tracked A_n counts") {
  for (const auto& g : algebra_catalog(2, 12)) {
    const auto red = a_type_reduction(g);
    CHECK(red.result.all_type_a());
    CHECK(red.result.rank() == g.rank());
    for (int n : {4, 6, 9, 10, 11, 12}) CHECK(red.result.count_a(n) == g.count_a(n));
    for (const auto& s : red.steps) CHECK(s.before.rank() == s.after.rank());
  }
}

TEST_CASE("invariants") {
  const auto a6a4 = invariant(SemisimpleAlgebra{A(6), A(4)});
  CHECK(a6a4.rank == 10);
  CHECK(a6a4.a_counts == std::map<int, int>{{6, 1}});
  CHECK(a6a4.a4_odd);
  const auto e8 = invariant(SemisimpleAlgebra{E(8)});
  CHECK(e8.rank == 8);
  CHECK(e8.a_counts.empty());
  CHECK_FALSE(e8.a4_odd);
  CHECK(invariant(SemisimpleAlgebra{A(7)}).a_counts.empty());
  CHECK(invariant(SemisimpleAlgebra{A(9), A(9)}).a_counts == std::map<int, int>{{9, 2}});
  CHECK(a6a4.to_string() == "rank 10, A_n counts {A6: 1}, A4 parity odd");
}

TEST_CASE("equal-rank equivalence") {
  CHECK(equal_rank_equivalent(SemisimpleAlgebra{E(7), A(1)}, SemisimpleAlgebra{A(4), A(4)}));
  CHECK_FALSE(equal_rank_equivalent(SemisimpleAlgebra{A(4)}, SemisimpleAlgebra{A(2), A(2)}));
  CHECK(equal_rank_equivalent(SemisimpleAlgebra{A(3)}, SemisimpleAlgebra{A(1), A(1), A(1)}));
  CHECK_FALSE(equal_rank_equivalent(SemisimpleAlgebra{A(1)}, SemisimpleAlgebra{A(1), A(1)}));
  CHECK_FALSE(equal_rank_equivalent(SemisimpleAlgebra{A(6)}, SemisimpleAlgebra{A(1), A(5)}));
  CHECK(equal_rank_equivalent(SemisimpleAlgebra{A(8)}, SemisimpleAlgebra{A(2), A(2), A(2), A(2)}));
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(SemisimpleAlgebra{A(8)}) == SemisimpleAlgebra(std::vector<SimpleType>(8, A(1))));
  CHECK(canonical_form(SemisimpleAlgebra{A(6), A(4)}) == SemisimpleAlgebra{A(6), A(4)});
  CHECK(canonical_form(SemisimpleAlgebra{G2()}) == SemisimpleAlgebra{A(1), A(1)});
  for (const auto& g : algebra_catalog(2, 12)) {
    const auto c = canonical_form(g);
    CHECK(canonical_form(c) == c);
    CHECK(equal_rank_equivalent(g, c));
    CHECK(square_class_invariant(g) == square_class_invariant(c));
  }
}

TEST_CASE("square classes") {
  CHECK(square_class_invariant(SemisimpleAlgebra{A(4), A(4)}).empty());
  CHECK(square_class_invariant(SemisimpleAlgebra{A(4)}) == std::set<std::uint64_t>{5});
  CHECK(square_class_invariant(SemisimpleAlgebra{A(8)}).empty());
  CHECK(square_class_invariant(SemisimpleAlgebra{A(6), A(10)}) == std::set<std::uint64_t>{7, 11});
  CHECK(square_class_invariant(SemisimpleAlgebra{A(9), A(4)}).empty());
}

TEST_CASE("determinant identity for an algebra against itself") {
  for (const SemisimpleAlgebra g : {SemisimpleAlgebra{A(4)}, SemisimpleAlgebra{E(6)}, SemisimpleAlgebra{B(3), G2()},
                                     SemisimpleAlgebra{A(1), C(4)}}) {
    CAPTURE(g.to_string());
    const Matrix a = simple_root_matrix(g);
    const auto rep = det_identity_report(g, g, a, normalized_metric(g));
    CHECK(rep.ok());
    for (const auto& mu : rep.mu) CHECK(mu == 1);
    CHECK(rep.scalars_in_2_3);
    CHECK(rep.sq_g == rep.sq_h);
  }
  const SemisimpleAlgebra a4{A(4)};
  CHECK(det_identity_report(a4, a4, simple_root_matrix(a4), normalized_metric(a4)).sq_g == std::set<std::uint64_t>{5});
}

TEST_CASE("determinant identity under a character metric") {
  const SemisimpleAlgebra g{A(2), A(3)};
  const auto q = character_metric(adjoint_character(g));
  const auto rep = det_identity_report(g, g, simple_root_matrix(g), q);
  CHECK(rep.ok());
  CHECK(rep.mu == q.block_scalars);
}

TEST_CASE("perturbed base fails the determinant identity") {
  const SemisimpleAlgebra g{A(3)};
  Matrix a = simple_root_matrix(g);
  a(0, 0) += 1;
  CHECK_FALSE(verify_det_identity(g, g, a, normalized_metric(g)));
  CHECK_THROWS(verify_det_identity(g, SemisimpleAlgebra{A(2)}, a, normalized_metric(g)));
}
