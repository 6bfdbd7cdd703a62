#include <doctest.h>

#include <array>
#include <set>

#include "eqrank/embed.hpp"
#include "eqrank/equiv.hpp"
#include "eqrank/error.hpp"
#include "eqrank/metric.hpp"
#include "eqrank/rootsys.hpp"

using namespace eqrank;

namespace {

std::multiset<SemisimpleAlgebra> subs_of(const std::vector<EqualRankEmbedding>& es) {
  std::multiset<SemisimpleAlgebra> out;
  for (const auto& e : es) out.insert(e.sub);
  return out;
}

const EqualRankEmbedding& find_sub(const std::vector<EqualRankEmbedding>& es, const SemisimpleAlgebra& g) {
  for (const auto& e : es)
    if (e.sub == g) return e;
  throw Error("no embedding of " + g.to_string());
}

}  // namespace

TEST_CASE("identify_simple_type") {
  const auto id = identify_simple_type({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  REQUIRE(id.has_value());
  CHECK(id->first == C(3));
  // the same diagram listed in reverse
  const auto rev = identify_simple_type({{2, -2, 0}, {-1, 2, -1}, {0, -1, 2}});
  REQUIRE(rev.has_value());
  CHECK(rev->first == C(3));
  CHECK(rev->second == std::vector<std::size_t>{2, 1, 0});
  for (const auto& t : simple_types_up_to(8)) CHECK(identify_simple_type(cartan_matrix(t))->first == t);
}

TEST_CASE("maximal equal-rank subalgebras of the exceptional types") {
  using M = std::multiset<SemisimpleAlgebra>;
  CHECK(subs_of(maximal_equal_rank_subalgebras(E(8))) ==
        M{{A(1), E(7)}, {A(2), E(6)}, {A(4), A(4)}, {D(8)}, {A(8)}});
  CHECK(subs_of(maximal_equal_rank_subalgebras(E(7))) == M{{A(1), D(6)}, {A(2), A(5)}, {A(7)}});
  CHECK(subs_of(maximal_equal_rank_subalgebras(E(6))) == M{{A(1), A(5)}, {A(2), A(2), A(2)}});
  CHECK(subs_of(maximal_equal_rank_subalgebras(F4())) == M{{A(1), C(3)}, {A(2), A(2)}, {B(4)}});
  CHECK(subs_of(maximal_equal_rank_subalgebras(G2())) == M{{A(2)}, {A(1), A(1)}});
}

TEST_CASE("node deletion reproduces the maximal-rank rows") {
  for (const auto& t : simple_types_up_to(9)) {
    CAPTURE(t.to_string());
    std::set<SemisimpleAlgebra> rows;
    for (const auto& r : maximal_rank_rows(t)) rows.insert(r.sub);
    std::set<SemisimpleAlgebra> computed;
    for (const auto& e : maximal_equal_rank_subalgebras(t)) computed.insert(e.sub);
    CHECK(rows == computed);
  }
}

TEST_CASE("type A has no proper equal-rank subalgebra") {
  std::string note;
  CHECK(maximal_equal_rank_subalgebras(A(3), &note).empty());
  CHECK_FALSE(note.empty());
  CHECK(equal_rank_subalgebras(A(4)).empty());
}

TEST_CASE("embedding bases are ambient roots with the right Cartan matrix") {
  for (const SimpleType t : {E(6), E(7), E(8), F4(), G2(), B(4), C(4), D(5)}) {
    const auto rs = root_system(t);
    for (const auto& e : equal_rank_subalgebras(t)) {
      CAPTURE(e.origin);
      CHECK(e.sub.rank() == t.rank());
      const auto base = e.simple_roots();
      for (const auto& b : base) CHECK(rs->is_root(b));
      CHECK(rank(e.sub_simple_roots) == rs->rank);
      const auto sub_model = algebra_model(e.sub);
      for (std::size_t j = 0; j < base.size(); ++j) CHECK(e.sub_coords(base[j]) == sub_model->simple_root(j));
      CHECK(e.to_sub * e.to_ambient == Matrix::identity(rs->rank));
    }
  }
  CHECK(equal_rank_subalgebras(E(8)).size() > 5);
}

TEST_CASE("restriction of the E8 adjoint") {
  const auto adj = adjoint_character(SemisimpleAlgebra{E(8)});
  const auto es = maximal_equal_rank_subalgebras(E(8));
  const auto& a8 = find_sub(es, SemisimpleAlgebra{A(8)});
  const auto r8 = restrict_character(adj, a8);
  CHECK(r8.dim() == 248);
  CHECK(ambient_weights(r8, a8) == adj.weights());

  const auto& a44 = find_sub(es, SemisimpleAlgebra{A(4), A(4)});
  const auto r44 = restrict_character(adj, a44);
  const auto sub_adj = adjoint_character(a44.sub);
  CHECK(sub_adj.dim() == 48);
  for (const auto& [w, m] : sub_adj.weights()) CHECK(r44.multiplicity(w) >= m);

  const auto& e7a1 = find_sub(es, SemisimpleAlgebra{A(1), E(7)});
  const auto r71 = restrict_character(adj, e7a1);
  CHECK(same_formal_character(r44, a44, r71, e7a1));
  CHECK(same_formal_character(r71, e7a1, r71, e7a1));
  CHECK(equal_rank_equivalent(a44.sub, e7a1.sub));

  const auto triv = restrict_character(trivial_character(SemisimpleAlgebra{E(8)}), a44);
  CHECK(triv == trivial_character(a44.sub));
  CHECK_THROWS_AS(restrict_character(adjoint_character(SemisimpleAlgebra{E(7)}), a44), AlgebraMismatch);
}

TEST_CASE("different E8 modules restricted to D8 are told apart") {
  const auto es = maximal_equal_rank_subalgebras(E(8));
  const auto& d8 = find_sub(es, SemisimpleAlgebra{D(8)});
  const auto& a8 = find_sub(es, SemisimpleAlgebra{A(8)});
  const auto adj = restrict_character(adjoint_character(SemisimpleAlgebra{E(8)}), a8);
  const auto other = restrict_character(saturate(adjoint_character(SemisimpleAlgebra{E(8)})), d8);
  CHECK_FALSE(same_formal_character(adj, a8, other, d8));
}

TEST_CASE("every embedding satisfies the determinant identity") {
  for (const SimpleType t : {E(6), E(7), E(8), F4(), G2(), B(3), C(3), D(4)}) {
    const SemisimpleAlgebra g{t};
    const auto q = normalized_metric(g);
    for (const auto& e : equal_rank_subalgebras(t)) {
      CAPTURE(e.origin);
      const auto rep = det_identity_report(g, e.sub, e.sub_simple_roots, q);
      CHECK(rep.ok());
      CHECK(rep.scalars_in_2_3);
      CHECK(rep.sq_g == rep.sq_h);
    }
  }
}

TEST_CASE("restricted adjoint characters agree across embeddings of one ambient") {
  for (const SimpleType t : {E(6), E(7), F4(), G2()}) {
    const auto adj = adjoint_character(SemisimpleAlgebra{t});
    const auto es = maximal_equal_rank_subalgebras(t);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        CAPTURE(es[i].sub.to_string());
        CAPTURE(es[j].sub.to_string());
        CHECK(same_formal_character(restrict_character(adj, es[i]), es[i], restrict_character(adj, es[j]), es[j]));
        CHECK(invariant(es[i].sub) == invariant(es[j].sub));
      }
  }
}

TEST_CASE("cross geometry between the two E8 subalgebras") {
  const auto adj = adjoint_character(SemisimpleAlgebra{E(8)});
  const auto es = maximal_equal_rank_subalgebras(E(8));
  const auto& a44 = find_sub(es, SemisimpleAlgebra{A(4), A(4)});
  const auto& e7a1 = find_sub(es, SemisimpleAlgebra{A(1), E(7)});
  for (const auto& pair : {std::array{&a44, &e7a1}, std::array{&e7a1, &a44}}) {
    const auto& g = *pair[0];
    const auto& h = *pair[1];
    CAPTURE(g.sub.to_string());
    const auto m = character_metric(restrict_character(adj, g));
    std::vector<Weight> roots_h;
    for (const auto& r : algebra_model(h.sub)->roots()) roots_h.push_back(g.sub_coords(h.ambient_coords(r)));
    const auto report = validate_cross_geometry(algebra_model(g.sub)->roots(), roots_h, m);
    CHECK(report.ok());
    CHECK(report.entries.size() == roots_h.size() * g.sub.num_factors());
  }
}

TEST_CASE("text export") {
  const auto es = maximal_equal_rank_subalgebras(G2());
  const std::string text = to_text(find_sub(es, SemisimpleAlgebra{A(2)}));
  CHECK(text.find("G2 > A2 (maximal)") == 0);
  CHECK(text.find("A2 simple root 2") != std::string::npos);
}
