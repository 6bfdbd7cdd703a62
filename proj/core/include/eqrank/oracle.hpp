#pragma once

// Brute-force engines used to cross-check the main modules on small inputs.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eqrank/algebra.hpp"
#include "eqrank/dioph.hpp"
#include "eqrank/weight.hpp"

namespace eqrank {

/// `left` (a simple ambient) contains `right` with the same rank.
struct RewriteRelation {
  SemisimpleAlgebra left;
  SemisimpleAlgebra right;
  std::string source;
};

/// Relations from the maximal-rank rows of every simple type of rank <= max_rank.
std::vector<RewriteRelation> rewrite_relations(int max_rank);

/// Algebras one relation application away from `g`, in either direction.
std::vector<SemisimpleAlgebra> rewrite_neighbors(const SemisimpleAlgebra& g,
                                                 const std::vector<RewriteRelation>& relations);

/// Number of relation applications on a shortest path from g to h, if
/// within max_depth. Relations up to rank(g) are used.
std::optional<int> rewrite_distance(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, int max_depth);
bool rewrite_reachable(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, int max_depth);

/// Rewrite graph on every algebra of one rank, compared against the
/// equivalence invariant.
struct RewriteGraphSummary {
  int rank = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t invariant_classes = 0;
  int max_depth = 0;  // largest distance between connected algebras
  std::size_t pairs_checked = 0;
  std::size_t connected_pairs = 0;
  /// Equivalent pairs the rewriting never connects; equivalence also allows
  /// cancelling common factors, which plain rewriting cannot do.
  std::size_t unconnected_equivalent_pairs = 0;
  std::vector<std::string> problems;  // connected but inequivalent
  bool consistent() const { return problems.empty(); }
};

RewriteGraphSummary rewrite_graph_summary(int rank);

/// Every (m, l, k) with m, l <= bound solving 2 = m/(m+1) + (l-k)(k+1)/(l+1),
/// by sweeping (l, k) and solving for m in integers.
std::set<DSolution> brute_force_D(std::int64_t bound);

/// prod over positive roots of <hw + rho, a> / <rho, a>.
std::uint64_t weyl_dim_formula(const SemisimpleAlgebra& g, const Weight& hw);

}  // namespace eqrank
