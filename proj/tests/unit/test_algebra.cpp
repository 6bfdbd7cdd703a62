#include <doctest.h>

#include "eqrank/algebra.hpp"
#include "eqrank/error.hpp"

using namespace eqrank;

TEST_CASE("rank bounds are enforced") {
  CHECK_THROWS_AS(SimpleType(Family::A, 0), InvalidType);
  CHECK_THROWS_AS(SimpleType(Family::E, 5), InvalidType);
  CHECK_THROWS_AS(SimpleType(Family::E, 9), InvalidType);
  CHECK_THROWS_AS(SimpleType(Family::F, 3), InvalidType);
  CHECK_THROWS_AS(SimpleType(Family::G, 3), InvalidType);
  CHECK_THROWS_AS(SimpleType(Family::D, 1), InvalidType);
  CHECK_NOTHROW(SimpleType(Family::E, 8));
}

TEST_CASE("low-rank coincidences are normalized") {
  CHECK(B(1) == A(1));
  CHECK(C(1) == A(1));
  CHECK(C(2) == B(2));
  CHECK(D(3) == A(3));
  CHECK(C(2).to_string() == "B2");
  CHECK_THROWS_WITH_AS(D(2), doctest::Contains("A1xA1"), InvalidType);
}

TEST_CASE("semisimple algebras compare as multisets") {
  CHECK(SemisimpleAlgebra{E(7), A(1)} == SemisimpleAlgebra{A(1), E(7)});
  CHECK(SemisimpleAlgebra{E(7), A(1)}.to_string() == "A1xE7");
  CHECK(SemisimpleAlgebra{A(4), A(4)}.rank() == 8);
  CHECK(SemisimpleAlgebra{A(4), A(4)}.count_a(4) == 2);
  CHECK_FALSE(SemisimpleAlgebra{A(1)} == SemisimpleAlgebra{A(1), A(1)});
  CHECK_THROWS_AS(SemisimpleAlgebra(std::vector<SimpleType>{}), InvalidType);
}

TEST_CASE("classical algebra names") {
  CHECK(so(3) == std::vector<SimpleType>{A(1)});
  CHECK(so(4) == std::vector<SimpleType>{A(1), A(1)});
  CHECK(so(5) == std::vector<SimpleType>{B(2)});
  CHECK(so(6) == std::vector<SimpleType>{A(3)});
  CHECK(so(16) == std::vector<SimpleType>{D(8)});
  CHECK(so(1).empty());
  CHECK(sp(4) == std::vector<SimpleType>{B(2)});
  CHECK(sl(9) == std::vector<SimpleType>{A(8)});
}

TEST_CASE("catalog enumeration") {
  CHECK(algebras_of_rank(1).size() == 1);
  // rank 2: A2, B2, G2, A1xA1
  CHECK(algebras_of_rank(2).size() == 4);
  // rank 3: A3, B3, C3, A1xA2, A1xB2, A1xG2, A1^3
  CHECK(algebras_of_rank(3).size() == 7);
  for (int r = 1; r <= 8; ++r)
    for (const auto& g : algebras_of_rank(r)) CHECK(g.rank() == r);
  CHECK(simple_types_up_to(8).size() == 31);
}
