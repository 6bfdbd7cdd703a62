#include "eqrank/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "eqrank/equiv.hpp"
#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

namespace {

// Removes the factors of `part` from `whole` if all are present.
std::optional<std::vector<SimpleType>> remove_multiset(const std::vector<SimpleType>& whole,
                                                       const std::vector<SimpleType>& part) {
  for (const auto& t : part)
    if (std::find(whole.begin(), whole.end(), t) == whole.end()) return std::nullopt;
  std::vector<SimpleType> rest = whole;
  for (const auto& t : part) {
    const auto it = std::find(rest.begin(), rest.end(), t);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  return rest;
}

std::optional<SemisimpleAlgebra> replace(const SemisimpleAlgebra& g, const SemisimpleAlgebra& from,
                                         const SemisimpleAlgebra& to) {
  auto rest = remove_multiset(g.factors(), from.factors());
  if (!rest) return std::nullopt;
  rest->insert(rest->end(), to.factors().begin(), to.factors().end());
  return SemisimpleAlgebra(std::move(*rest));
}

std::map<SemisimpleAlgebra, int> distances_from(const SemisimpleAlgebra& g,
                                                const std::vector<RewriteRelation>& relations, int max_depth,
                                                const SemisimpleAlgebra* stop_at) {
  std::map<SemisimpleAlgebra, int> dist{{g, 0}};
  std::deque<SemisimpleAlgebra> queue{g};
  while (!queue.empty()) {
    const SemisimpleAlgebra cur = queue.front();
    queue.pop_front();
    const int d = dist.at(cur);
    if (stop_at && cur == *stop_at) break;
    if (max_depth >= 0 && d >= max_depth) continue;
    for (auto& next : rewrite_neighbors(cur, relations))
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
  }
  return dist;
}

}  // namespace

std::vector<RewriteRelation> rewrite_relations(int max_rank) {
  std::vector<RewriteRelation> out;
  for (const auto& row : maximal_rank_table(max_rank)) out.push_back({SemisimpleAlgebra{row.ambient}, row.sub, row.rule});
  return out;
}

std::vector<SemisimpleAlgebra> rewrite_neighbors(const SemisimpleAlgebra& g,
                                                 const std::vector<RewriteRelation>& relations) {
  std::vector<SemisimpleAlgebra> out;
  for (const auto& rel : relations) {
    if (auto down = replace(g, rel.left, rel.right)) out.push_back(std::move(*down));
    if (auto up = replace(g, rel.right, rel.left)) out.push_back(std::move(*up));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<int> rewrite_distance(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, int max_depth) {
  if (max_depth < 0) throw Error("max_depth must be non-negative");
  if (g == h) return 0;
  if (g.rank() != h.rank()) return std::nullopt;
  const auto dist = distances_from(g, rewrite_relations(g.rank()), max_depth, &h);
  const auto it = dist.find(h);
  if (it == dist.end()) return std::nullopt;
  return it->second;
}

bool rewrite_reachable(const SemisimpleAlgebra& g, const SemisimpleAlgebra& h, int max_depth) {
  return rewrite_distance(g, h, max_depth).has_value();
}

RewriteGraphSummary rewrite_graph_summary(int rank) {
  if (rank < 1) throw Error("rank must be positive");
  RewriteGraphSummary s;
  s.rank = rank;
  const auto nodes = algebras_of_rank(rank);
  const auto relations = rewrite_relations(rank);
  s.nodes = nodes.size();

  std::set<EquivClassInvariant> classes;
  for (const auto& g : nodes) {
    classes.insert(invariant(g));
    s.edges += rewrite_neighbors(g, relations).size();
  }
  s.edges /= 2;
  s.invariant_classes = classes.size();

  std::set<SemisimpleAlgebra> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto dist = distances_from(nodes[i], relations, -1, nullptr);
    if (seen.insert(nodes[i]).second) {
      ++s.components;
      for (const auto& [h, d] : dist) seen.insert(h);
    }
    const auto inv = invariant(nodes[i]);
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      ++s.pairs_checked;
      const auto it = dist.find(nodes[j]);
      const bool same = invariant(nodes[j]) == inv;
      if (it != dist.end()) {
        ++s.connected_pairs;
        s.max_depth = std::max(s.max_depth, it->second);
        if (!same)
          s.problems.push_back(nodes[i].to_string() + " reaches " + nodes[j].to_string() +
                               " but the invariants differ");
      } else if (same) {
        ++s.unconnected_equivalent_pairs;
      }
    }
  }
  return s;
}

std::set<DSolution> brute_force_D(std::int64_t bound) {
  if (bound < 1) throw Error("bound must be at least 1");
  std::set<DSolution> out;
  // m/(m+1) = p/q with q = l+1, p = 2q - (l-k)(k+1); then m = p/(q-p).
  for (std::int64_t l = 1; l <= bound; ++l)
    for (std::int64_t k = 1; k <= l; ++k) {
      const std::int64_t q = l + 1;
      const std::int64_t p = 2 * q - (l - k) * (k + 1);
      if (p <= 0 || p >= q) continue;
      if (p % (q - p) != 0) continue;
      const std::int64_t m = p / (q - p);
      if (m >= 1 && m <= bound) out.insert({m, l, k});
    }
  return out;
}

std::uint64_t weyl_dim_formula(const SemisimpleAlgebra& g, const Weight& hw) {
  const auto model = algebra_model(g);
  model->check_dim(hw);
  if (!model->in_lattice(hw) || !model->is_dominant(hw)) throw Error(hw.to_string() + " is not dominant integral");
  Rational dim = 1;
  for (std::size_t i = 0; i < model->num_factors(); ++i) {
    const auto& rs = model->factor(i);
    const Weight lam = model->restrict_to(hw, i);
    const Weight rho = rs.rho();
    const Weight shifted = lam + rho;
    for (const auto& a : rs.positive_roots) dim *= rs.inner(shifted, a) / rs.inner(rho, a);
  }
  if (!is_integer(dim) || !dim.get_num().fits_ulong_p()) throw Error("dimension is not a machine integer");
  return dim.get_num().get_ui();
}

}  // namespace eqrank
