#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Classical tables, kept independent of the BFS construction.
std::size_t classical_root_count(const SimpleType& t) {
  const std::size_t n = static_cast<std::size_t>(t.rank());
  switch (t.family()) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
  }
  return 0;
}

std::uint64_t classical_weyl_order(const SimpleType& t) {
  const std::uint64_t n = static_cast<std::uint64_t>(t.rank());
  switch (t.family()) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (1ULL << n) * factorial(n);
    case Family::D: return (1ULL << (n - 1)) * factorial(n);
    case Family::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace

TEST_CASE("root counts and Weyl orders match classical tables for rank <= 8") {
  for (const auto& t : simple_types_up_to(8)) {
    CAPTURE(t.to_string());
    const auto rs = root_system(t);
    CHECK(rs->roots.size() == classical_root_count(t));
    CHECK(rs->positive_roots.size() * 2 == rs->roots.size());
    CHECK(rs->weyl_order == classical_weyl_order(t));
  }
}

TEST_CASE("Weyl order equals the orbit size of rho for small groups") {
  // |W rho| = |W| since rho is regular; brute-force check independent of the parabolic recursion.
  for (const auto& t : simple_types_up_to(6)) {
    const auto rs = root_system(t);
    if (rs->weyl_order > 60000) continue;
    CAPTURE(t.to_string());
    CHECK(weyl_orbit(rs->rho(), *rs).size() == rs->weyl_order);
  }
}

TEST_CASE("A_n gram in the e-basis") {
  for (int n = 1; n <= 10; ++n) {
    const auto rs = root_system(A(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs->gram(i, j) == (i == j ? Rational(n, n + 1) : Rational(-1, n + 1)));
    // <e_i - e_j, e_i - e_j> = 2 for all i != j in 1..n+1
    for (int i = 1; i <= n + 1; ++i)
      for (int j = 1; j <= n + 1; ++j) {
        if (i == j) continue;
        const Weight r = e_vector(i, n) - e_vector(j, n);
        CHECK(rs->inner(r, r) == 2);
        CHECK(rs->is_root(r));
      }
    CHECK(determinant(Matrix::from_rows([&] {
            std::vector<Vec> rows;
            for (const auto& row : rs->cartan) {
              Vec v;
              for (int x : row) v.emplace_back(x);
              rows.push_back(v);
            }
            return rows;
          }())) == n + 1);
  }
}

TEST_CASE("Cartan matrix recomputed from gram and simple roots") {
  for (const auto& t : simple_types_up_to(8)) {
    CAPTURE(t.to_string());
    const auto rs = root_system(t);
    for (std::size_t i = 0; i < rs->rank; ++i) {
      CHECK(rs->cartan[i][i] == 2);
      for (std::size_t j = 0; j < rs->rank; ++j) {
        const Rational c = 2 * rs->inner(rs->simple_roots[i], rs->simple_roots[j]) /
                           rs->inner(rs->simple_roots[j], rs->simple_roots[j]);
        CHECK(c == rs->cartan[i][j]);
        if (i != j) CHECK(rs->cartan[i][j] <= 0);
      }
    }
    // longest root has squared length 2
    Rational longest = 0;
    for (const auto& r : rs->roots) longest = std::max(longest, rs->inner(r, r));
    CHECK(longest == 2);
  }
}

TEST_CASE("roots are closed under negation and form one orbit per length") {
  for (const auto& t : simple_types_up_to(7)) {
    CAPTURE(t.to_string());
    const auto rs = root_system(t);
    std::set<Rational> lengths;
    for (const auto& r : rs->roots) {
      CHECK(rs->is_root(-r));
      lengths.insert(rs->inner(r, r));
    }
    std::size_t total = 0;
    for (const auto& len : lengths) {
      const auto it = std::find_if(rs->roots.begin(), rs->roots.end(),
                                   [&](const Weight& r) { return rs->inner(r, r) == len; });
      total += weyl_orbit(*it, *rs).size();
    }
    CHECK(total == rs->roots.size());
  }
}

TEST_CASE("build_root_system examples") {
  const auto a1 = root_system(A(1));
  CHECK(a1->roots.size() == 2);
  CHECK(a1->is_root(Weight::from_ints({2})));
  CHECK(a1->is_root(Weight::from_ints({-2})));
  CHECK(a1->gram == Matrix{{Rational(1, 2)}});

  const auto a2 = root_system(A(2));
  CHECK(a2->cartan == std::vector<std::vector<int>>{{2, -1}, {-1, 2}});

  const auto e8 = root_system(E(8));
  CHECK(e8->roots.size() == 240);
  CHECK(e8->weyl_order == 696729600ULL);
  CHECK(e8->highest_root_marks == std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("weyl_orbit") {
  const auto a2 = root_system(A(2));
  CHECK(weyl_orbit(Weight(2), *a2).size() == 1);

  auto orbit = weyl_orbit(e_vector(1, 2), *a2);
  std::sort(orbit.begin(), orbit.end());
  std::vector<Weight> expected{e_vector(1, 2), e_vector(2, 2), e_vector(3, 2)};
  std::sort(expected.begin(), expected.end());
  CHECK(orbit == expected);

  const auto g2 = root_system(G2());
  const auto long_orbit = weyl_orbit(g2->highest_root, *g2);
  CHECK(long_orbit.size() == 6);
  for (const auto& r : long_orbit) CHECK(g2->inner(r, r) == 2);

  CHECK_THROWS_AS(weyl_orbit(Weight(3), *a2), DimensionError);
}

TEST_CASE("orbit sizes divide the Weyl order") {
  for (const SimpleType t : {A(3), B(3), C(3), G2(), F4(), D(4)}) {
    const auto rs = root_system(t);
    for (std::size_t i = 0; i < rs->rank; ++i) {
      const auto orbit = weyl_orbit(rs->fundamental_weights[i], *rs);
      CHECK(rs->weyl_order % orbit.size() == 0);
    }
  }
}

TEST_CASE("e-basis coordinates") {
  const auto a2 = root_system(A(2));
  CHECK(e_basis_coords(a2->simple_roots[0], *a2) == Vec{1, -1});
  CHECK(e_vector(3, 2).coords() == Vec{-1, -1});
  CHECK(e_basis_coords(Weight(2), *a2) == Vec{0, 0});
  CHECK(from_e_basis(Vec{3, -2}, *a2) == Weight::from_ints({3, -2}));
  CHECK_THROWS_AS(e_basis_coords(Weight(2), *root_system(B(2))), UnsupportedBasis);
  // simple root a_i = e_i - e_{i+1}
  for (int n = 1; n <= 6; ++n) {
    const auto rs = root_system(A(n));
    for (int i = 1; i <= n; ++i) CHECK(rs->simple_roots[i - 1] == e_vector(i, n) - e_vector(i + 1, n));
    // fundamental weights are e_1 + ... + e_i
    Weight partial(n);
    for (int i = 1; i <= n; ++i) {
      partial += e_vector(i, n);
      CHECK(rs->fundamental_weights[i - 1] == partial);
    }
  }
}

TEST_CASE("highest roots") {
  CHECK(highest_root(A(2)) == Weight::from_ints({2, 1}));
  CHECK(highest_root(A(2)) == e_vector(1, 2) - e_vector(3, 2));
  CHECK(highest_root(A(1)) == Weight::from_ints({2}));
  for (const auto& t : simple_types_up_to(8)) {
    const auto rs = root_system(t);
    const Weight& h = rs->highest_root;
    CHECK(rs->is_root(h));
    CHECK(rs->is_dominant(h));
    CHECK(rs->inner(h, h) == 2);
    for (const auto& a : rs->simple_roots) CHECK_FALSE(rs->is_root(h + a));
  }
}

TEST_CASE("algebra model lays factors out as blocks") {
  const auto m = algebra_model(SemisimpleAlgebra{A(1), G2()});
  CHECK(m->dim() == 3);
  CHECK(m->roots().size() == 14);
  CHECK(m->gram()(0, 1) == 0);
  CHECK(m->simple_root(0) == Weight::from_ints({2, 0, 0}));
  const Weight w = Weight::from_ints({1, 1, 0});
  CHECK(m->reflect(w, 0) == Weight::from_ints({-1, 1, 0}));
  CHECK(m->dynkin_labels(w) == Vec{1, 1, 0});
  CHECK(m->from_dynkin_labels(Vec{1, 1, 0}) == w);
  CHECK_THROWS_AS(m->reflect(Weight(2), 0), DimensionError);
}
