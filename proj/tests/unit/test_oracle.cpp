#include <doctest.h>

#include <algorithm>

#include "eqrank/chars.hpp"
#include "eqrank/dioph.hpp"
#include "eqrank/equiv.hpp"
#include "eqrank/error.hpp"
#include "eqrank/oracle.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

TEST_CASE("rewrite reachability, small cases") {
  CHECK(rewrite_reachable({A(2)}, {A(1), A(1)}, 2));
  CHECK(rewrite_distance({A(2)}, {A(1), A(1)}, 6) == 2);
  CHECK_FALSE(rewrite_reachable({A(2)}, {A(1), A(1)}, 1));
  CHECK(rewrite_distance({E(8)}, {E(8)}, 0) == 0);
  CHECK_FALSE(rewrite_reachable({A(4)}, {A(2), A(2)}, 6));
  CHECK_FALSE(rewrite_reachable({A(3)}, {A(2)}, 6));
  CHECK_THROWS_AS(rewrite_distance({A(1)}, {A(1)}, -1), Error);
}

TEST_CASE("known equivalences are reached within six steps") {
  const std::vector<std::pair<SemisimpleAlgebra, SemisimpleAlgebra>> pairs{
      {{A(4), A(4)}, {A(8)}},
      {{A(8)}, {A(2), A(2), A(2), A(2)}},
      {{A(7)}, {A(2), A(5)}},
      {{A(1), A(5)}, {A(2), A(2), A(2)}},
      {{A(3)}, {A(1), A(1), A(1)}},
      {{A(1), E(7)}, {A(4), A(4)}},
  };
  for (const auto& [g, h] : pairs) {
    CAPTURE(g.to_string());
    CAPTURE(h.to_string());
    CHECK(rewrite_reachable(g, h, 6));
    CHECK(rewrite_reachable(h, g, 6));
    CHECK(equal_rank_equivalent(g, h));
  }
}

TEST_CASE("neighbors go both ways") {
  const auto rel = rewrite_relations(2);
  const auto from_a2 = rewrite_neighbors({A(2)}, rel);
  CHECK(std::find(from_a2.begin(), from_a2.end(), SemisimpleAlgebra{G2()}) != from_a2.end());
  const auto from_g2 = rewrite_neighbors({G2()}, rel);
  CHECK(std::find(from_g2.begin(), from_g2.end(), SemisimpleAlgebra{A(1), A(1)}) != from_g2.end());
  CHECK(std::find(from_g2.begin(), from_g2.end(), SemisimpleAlgebra{A(2)}) != from_g2.end());
}

TEST_CASE("rewrite graphs never join inequivalent algebras") {
  for (int r = 1; r <= 8; ++r) {
    const auto s = rewrite_graph_summary(r);
    CAPTURE(r);
    CHECK(s.consistent());
    CHECK(s.nodes == algebras_of_rank(r).size());
    CHECK(s.components >= s.invariant_classes);
    CHECK(s.pairs_checked == s.nodes * (s.nodes - 1) / 2);
    MESSAGE("rank " << r << ": " << s.nodes << " algebras, " << s.components << " components, "
                    << s.invariant_classes << " classes, max depth " << s.max_depth << ", "
                    << s.unconnected_equivalent_pairs << " equivalent pairs not connected");
  }
}

TEST_CASE("brute-force sweep of the D equation") {
  CHECK(brute_force_D(3).empty());
  CHECK(brute_force_D(10) == solve_D());
  CHECK(brute_force_D(1000) == solve_D());
  for (const auto& s : brute_force_D(50)) CHECK(satisfies_d(s));
  CHECK_THROWS_AS(brute_force_D(0), Error);
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim_formula({E(8)}, algebra_model({E(8)})->from_dynkin_labels({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
  CHECK(weyl_dim_formula({G2()}, algebra_model({G2()})->from_dynkin_labels({1, 0})) == 7);
  CHECK(weyl_dim_formula({A(1), A(2)}, algebra_model({A(1), A(2)})->from_dynkin_labels({1, 1, 0})) == 6);
  CHECK(weyl_dim_formula({B(3)}, algebra_model({B(3)})->from_dynkin_labels({0, 0, 1})) == 8);
  CHECK_THROWS_AS(weyl_dim_formula({A(2)}, algebra_model({A(2)})->from_dynkin_labels({-1, 0})), Error);
  for (const auto& g : algebras_of_rank(3)) {
    const auto model = algebra_model(g);
    const Vec labels{1, 0, 2};
    CHECK(weyl_dim_formula(g, model->from_dynkin_labels(labels)) == irreducible_character_from_labels(g, labels).dim());
  }
}
