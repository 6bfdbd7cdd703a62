#include <doctest.h>

#include "eqrank/chars.hpp"
#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

namespace {

// Weyl dimension formula, computed directly from the root system.
Rational weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  const Weight rho = rs.rho();
  Rational num = 1, den = 1;
  for (const auto& a : rs.positive_roots) {
    num *= rs.inner(lambda + rho, a);
    den *= rs.inner(rho, a);
  }
  return num / den;
}

FormalCharacter standard_a1() {
  FormalCharacter::WeightMap w;
  w[Weight::from_ints({1})] = 1;
  w[Weight::from_ints({-1})] = 1;
  return FormalCharacter::from_weights(SemisimpleAlgebra{A(1)}, w);
}

}  // namespace

TEST_CASE("adjoint characters") {
  const auto a1 = adjoint_character(SemisimpleAlgebra{A(1)});
  CHECK(a1.dim() == 3);
  CHECK(a1.multiplicity(Weight::from_ints({2})) == 1);
  CHECK(a1.multiplicity(Weight::from_ints({0})) == 1);
  CHECK(a1.multiplicity(Weight::from_ints({-2})) == 1);

  const auto a2 = adjoint_character(SemisimpleAlgebra{A(2)});
  CHECK(a2.dim() == 8);
  CHECK(a2.multiplicity(Weight(2)) == 2);

  CHECK(adjoint_character(SemisimpleAlgebra{A(1), A(1)}).dim() == 6);
  CHECK(adjoint_character(SemisimpleAlgebra{E(8)}).dim() == 248);
  CHECK(is_weyl_invariant(adjoint_character(SemisimpleAlgebra{F4()})));
}

TEST_CASE("tensor, dual and sum") {
  const auto s = standard_a1();
  const auto t = tensor(s, dual(s));
  CHECK(t.dim() == 4);
  CHECK(t.multiplicity(Weight::from_ints({2})) == 1);
  CHECK(t.multiplicity(Weight::from_ints({0})) == 2);
  CHECK(t.multiplicity(Weight::from_ints({-2})) == 1);
  CHECK((s + s).dim() == 4);
  CHECK_THROWS_AS(tensor(s, trivial_character(SemisimpleAlgebra{A(2)})), AlgebraMismatch);
}

TEST_CASE("saturation") {
  const auto sat = saturate(adjoint_character(SemisimpleAlgebra{A(2)}));
  CHECK(sat.dim() == 64);
  CHECK(is_weyl_invariant(sat));
  const auto lopsided = outer_product(standard_a1(), trivial_character(SemisimpleAlgebra{A(1)}));
  CHECK_THROWS_AS(saturate(lopsided), NotFaithful);
}

TEST_CASE("outer products place blocks by factor") {
  const auto c = outer_product(adjoint_character(SemisimpleAlgebra{G2()}), standard_a1());
  CHECK(c.algebra() == SemisimpleAlgebra{A(1), G2()});
  CHECK(c.dim() == 28);
  CHECK(c.multiplicity(Weight::from_ints({1, 0, 0})) == 2);
  CHECK(is_weyl_invariant(c));
  CHECK(is_faithful(c));
}

TEST_CASE("faithfulness") {
  CHECK(is_faithful(standard_a1()));
  CHECK_FALSE(is_faithful(outer_product(standard_a1(), trivial_character(SemisimpleAlgebra{A(1)}))));
  CHECK_FALSE(is_faithful(FormalCharacter::empty(SemisimpleAlgebra{A(1)})));
  CHECK_FALSE(is_faithful(trivial_character(SemisimpleAlgebra{A(3)})));
}

TEST_CASE("validated construction") {
  FormalCharacter::WeightMap lone;
  lone[Weight::from_ints({1})] = 1;
  CHECK_THROWS_AS(FormalCharacter::from_weights(SemisimpleAlgebra{A(1)}, lone), Error);
  FormalCharacter::WeightMap wrong_dim;
  wrong_dim[Weight::from_ints({0, 0})] = 1;
  CHECK_THROWS_AS(FormalCharacter::from_weights(SemisimpleAlgebra{A(1)}, wrong_dim), DimensionError);
  FormalCharacter::WeightMap half;
  half[Weight(Vec{Rational(1, 2)})] = 1;
  half[Weight(Vec{Rational(-1, 2)})] = 1;
  CHECK_THROWS_AS(FormalCharacter::from_weights(SemisimpleAlgebra{A(1)}, half), Error);
}

TEST_CASE("irreducible characters, small cases") {
  for (int m = 0; m <= 6; ++m) {
    const auto c = irreducible_character_from_labels(SemisimpleAlgebra{A(1)}, Vec{m});
    CHECK(c.num_distinct() == static_cast<std::size_t>(m + 1));
    CHECK(c.dim() == static_cast<std::uint64_t>(m + 1));
  }
  const auto a2 = irreducible_character_from_labels(SemisimpleAlgebra{A(2)}, Vec{1, 1});
  CHECK(a2 == adjoint_character(SemisimpleAlgebra{A(2)}));
  CHECK(irreducible_character_from_labels(SemisimpleAlgebra{A(3)}, Vec{0, 1, 0}).dim() == 6);
  // The highest root gives the adjoint module.
  for (const SimpleType t : {B(3), C(3), G2(), F4(), D(4)}) {
    CAPTURE(t.to_string());
    CHECK(irreducible_character(SemisimpleAlgebra{t}, highest_root(t)) == adjoint_character(SemisimpleAlgebra{t}));
  }
  CHECK_THROWS_AS(irreducible_character_from_labels(SemisimpleAlgebra{A(2)}, Vec{-1, 0}), InvalidHighestWeight);
  CHECK_THROWS_AS(irreducible_character_from_labels(SemisimpleAlgebra{A(2)}, Vec{Rational(1, 2), 0}),
                  InvalidHighestWeight);
}

TEST_CASE("irreducible dimensions agree with the Weyl dimension formula") {
  for (const auto& t : simple_types_up_to(3)) {
    const auto rs = root_system(t);
    CAPTURE(t.to_string());
    std::vector<Vec> labels{Vec(rs->rank, 0)};
    for (int step = 0; step < 3; ++step) {
      std::vector<Vec> next;
      for (const auto& l : labels)
        for (std::size_t i = 0; i < rs->rank; ++i) {
          Vec v = l;
          v[i] += 1;
          next.push_back(v);
        }
      labels.insert(labels.end(), next.begin(), next.end());
    }
    for (const auto& l : labels) {
      const Weight hw = rs->from_dynkin_labels(l);
      const auto c = irreducible_character(SemisimpleAlgebra{t}, hw);
      CHECK(Rational(static_cast<unsigned long>(c.dim())) == weyl_dimension(*rs, hw));
      CHECK(is_weyl_invariant(c));
    }
  }
}

TEST_CASE("dominant weights of the E8 adjoint") {
  const auto dom = dominant_weights(adjoint_character(SemisimpleAlgebra{E(8)}));
  REQUIRE(dom.size() == 2);
  CHECK(dom[0].first.is_zero());
  CHECK(dom[0].second == 8);
}
