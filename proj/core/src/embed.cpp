#include "eqrank/embed.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

Weight EqualRankEmbedding::sub_coords(const Weight& w) const {
  if (w.dim() != to_sub.cols()) throw DimensionError("ambient weight has the wrong dimension");
  return Weight(to_sub * w.coords());
}

Weight EqualRankEmbedding::ambient_coords(const Weight& w) const {
  if (w.dim() != to_ambient.cols()) throw DimensionError("sub weight has the wrong dimension");
  return Weight(to_ambient * w.coords());
}

std::vector<Weight> EqualRankEmbedding::simple_roots() const {
  std::vector<Weight> out;
  for (std::size_t j = 0; j < sub_simple_roots.cols(); ++j) out.emplace_back(sub_simple_roots.column(j));
  return out;
}

namespace {

bool extend(const std::vector<std::vector<int>>& target, const std::vector<std::vector<int>>& standard,
            std::vector<std::size_t>& order, std::vector<bool>& used) {
  const std::size_t k = order.size();
  if (k == standard.size()) return true;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (used[i]) continue;
    bool fits = true;
    for (std::size_t p = 0; p < k && fits; ++p)
      fits = standard[k][p] == target[i][order[p]] && standard[p][k] == target[order[p]][i];
    if (!fits) continue;
    used[i] = true;
    order.push_back(i);
    if (extend(target, standard, order, used)) return true;
    order.pop_back();
    used[i] = false;
  }
  return false;
}

std::vector<Weight> extended_deletion(const std::vector<Weight>& base, const SimpleType& t, std::size_t node) {
  const auto& marks = root_system(t)->highest_root_marks;
  Weight lowest(base.front().dim());
  for (std::size_t i = 0; i < base.size(); ++i) lowest = lowest - base[i] * Rational(marks[i]);
  std::vector<Weight> out{lowest};
  for (std::size_t i = 0; i < base.size(); ++i)
    if (i != node) out.push_back(base[i]);
  return out;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FactorSlice {
  SimpleType type;
  std::size_t offset;
};

std::vector<FactorSlice> slices(const EqualRankEmbedding& e) {
  std::vector<FactorSlice> out;
  std::size_t off = 0;
  for (const auto& t : e.sub.factors()) {
    out.push_back({t, off});
    off += static_cast<std::size_t>(t.rank());
  }
  return out;
}

}  // namespace

std::optional<std::pair<SimpleType, std::vector<std::size_t>>> identify_simple_type(
    const std::vector<std::vector<int>>& cartan) {
  const int r = static_cast<int>(cartan.size());
  if (r == 0) return std::nullopt;
  for (const auto& t : simple_types_up_to(r)) {
    if (t.rank() != r) continue;
    const auto standard = cartan_matrix(t);
    std::vector<std::size_t> order;
    std::vector<bool> used(cartan.size(), false);
    if (extend(cartan, standard, order, used)) return std::make_pair(t, order);
  }
  return std::nullopt;
}

EqualRankEmbedding make_embedding(const SimpleType& ambient, const std::vector<Weight>& base, std::string origin) {
  const auto rs = root_system(ambient);
  const std::size_t r = rs->rank;
  if (base.size() != r) throw DimensionError("an equal-rank base needs exactly rank-many roots");
  for (const auto& b : base) {
    if (b.dim() != r) throw DimensionError("base vector has the wrong dimension");
    if (!rs->is_root(b)) throw Error(b.to_string() + " is not a root of " + ambient.to_string());
  }
  std::vector<Vec> cols;
  for (const auto& b : base) cols.push_back(b.coords());
  if (rank(Matrix::from_columns(cols)) != r) throw Error("base vectors are linearly dependent");

  std::vector<std::vector<int>> c(r, std::vector<int>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const Rational x = 2 * rs->inner(base[i], base[j]) / rs->inner(base[j], base[j]);
      if (!is_integer(x) || (i != j && x > 0)) throw Error("vectors do not form a base of a root subsystem");
      c[i][j] = static_cast<int>(x.get_num().get_si());
    }

  std::vector<std::size_t> comp(r);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (c[i][j] != 0) comp[find(i)] = find(j);

  struct Component {
    SimpleType type;
    std::vector<std::size_t> nodes;  // in standard order
  };
  std::vector<Component> comps;
  std::set<std::size_t> roots_done;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t root = find(i);
    if (!roots_done.insert(root).second) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = 0; j < r; ++j)
      if (find(j) == root) members.push_back(j);
    std::vector<std::vector<int>> sub(members.size(), std::vector<int>(members.size()));
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = 0; b < members.size(); ++b) sub[a][b] = c[members[a]][members[b]];
    const auto id = identify_simple_type(sub);
    if (!id) throw Error("component of the base matches no simple type");
    Component comp_entry{id->first, {}};
    for (std::size_t k : id->second) comp_entry.nodes.push_back(members[k]);
    comps.push_back(std::move(comp_entry));
  }
  std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.type < b.type; });

  std::vector<SimpleType> types;
  std::vector<Weight> ordered;
  for (const auto& comp_entry : comps) {
    types.push_back(comp_entry.type);
    for (std::size_t n : comp_entry.nodes) ordered.push_back(base[n]);
  }

  EqualRankEmbedding e{ambient, SemisimpleAlgebra(types), {}, {}, {}, false, std::move(origin)};
  std::vector<Vec> ordered_cols;
  for (const auto& b : ordered) ordered_cols.push_back(b.coords());
  e.sub_simple_roots = Matrix::from_columns(ordered_cols);

  // Dynkin labels against the sub coroots, then the sub model's coordinates.
  std::vector<Vec> label_rows;
  for (const auto& b : ordered) label_rows.push_back(rs->gram * b.coords());
  for (std::size_t j = 0; j < r; ++j) {
    const Rational scale = 2 / rs->inner(ordered[j], ordered[j]);
    for (auto& x : label_rows[j]) x *= scale;
  }
  const Matrix labels = Matrix::from_rows(label_rows);
  const auto sub_model = algebra_model(e.sub);
  std::vector<Vec> fundamental;
  for (std::size_t j = 0; j < r; ++j) {
    Vec unit(r, 0);
    unit[j] = 1;
    fundamental.push_back(sub_model->from_dynkin_labels(unit).coords());
  }
  e.to_sub = Matrix::from_columns(fundamental) * labels;
  e.to_ambient = *inverse(e.to_sub);
  return e;
}

std::vector<EqualRankEmbedding> maximal_equal_rank_subalgebras(const SimpleType& t, std::string* note) {
  std::vector<EqualRankEmbedding> out;
  if (t.is_type_a()) {
    if (note) *note = "type A has no proper closed root subsystem of full rank";
    return out;
  }
  const auto rs = root_system(t);
  std::set<SemisimpleAlgebra> seen;
  for (std::size_t i = 0; i < rs->rank; ++i) {
    const int mark = rs->highest_root_marks[i];
    if (!is_prime(mark)) continue;
    auto e = make_embedding(t, extended_deletion(rs->simple_roots, t, i),
                            t.to_string() + ": delete node " + std::to_string(i + 1) + " (mark " +
                                std::to_string(mark) + ")");
    e.maximal = true;
    if (seen.insert(e.sub).second) out.push_back(std::move(e));
  }
  if (note) note->clear();
  return out;
}

std::vector<EqualRankEmbedding> equal_rank_subalgebras(const SimpleType& t) {
  const auto rs = root_system(t);
  std::vector<EqualRankEmbedding> out = maximal_equal_rank_subalgebras(t);
  std::set<SemisimpleAlgebra> seen{SemisimpleAlgebra{t}};
  for (const auto& e : out) seen.insert(e.sub);
  std::deque<EqualRankEmbedding> queue(out.begin(), out.end());
  queue.push_front(make_embedding(t, rs->simple_roots, t.to_string()));
  while (!queue.empty()) {
    const EqualRankEmbedding cur = std::move(queue.front());
    queue.pop_front();
    const auto base = cur.simple_roots();
    for (const auto& s : slices(cur)) {
      if (s.type.is_type_a()) continue;
      const std::vector<Weight> factor(base.begin() + static_cast<std::ptrdiff_t>(s.offset),
                                       base.begin() + static_cast<std::ptrdiff_t>(s.offset) + s.type.rank());
      const auto& marks = root_system(s.type)->highest_root_marks;
      for (std::size_t i = 0; i < factor.size(); ++i) {
        if (marks[i] < 2) continue;
        std::vector<Weight> next = extended_deletion(factor, s.type, i);
        for (std::size_t k = 0; k < base.size(); ++k)
          if (k < s.offset || k >= s.offset + factor.size()) next.push_back(base[k]);
        auto e = make_embedding(t, next, cur.origin + "; " + s.type.to_string() + ": delete node " +
                                             std::to_string(i + 1) + " (mark " + std::to_string(marks[i]) + ")");
        if (!seen.insert(e.sub).second) continue;
        queue.push_back(e);
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

std::string to_text(const EqualRankEmbedding& e) {
  std::ostringstream os;
  os << e.ambient.to_string() << " > " << e.sub.to_string() << (e.maximal ? " (maximal)" : "") << "\n";
  if (!e.origin.empty()) os << "  from " << e.origin << "\n";
  std::size_t j = 0;
  for (const auto& s : slices(e))
    for (int k = 0; k < s.type.rank(); ++k, ++j)
      os << "  " << s.type.to_string() << " simple root " << (k + 1) << ": "
         << to_string(e.sub_simple_roots.column(j)) << "\n";
  return os.str();
}

FormalCharacter restrict_character(const FormalCharacter& c, const EqualRankEmbedding& e) {
  if (!(c.algebra() == SemisimpleAlgebra{e.ambient}))
    throw AlgebraMismatch("character over " + c.algebra().to_string() + " cannot restrict from " +
                          e.ambient.to_string());
  FormalCharacter::WeightMap out;
  out.reserve(c.num_distinct());
  for (const auto& [w, m] : c.weights()) out.emplace(e.sub_coords(w), m);
  return FormalCharacter::from_weights(e.sub, std::move(out));
}

FormalCharacter::WeightMap ambient_weights(const FormalCharacter& c, const EqualRankEmbedding& e) {
  if (!(c.algebra() == e.sub))
    throw AlgebraMismatch("character over " + c.algebra().to_string() + " is not over " + e.sub.to_string());
  FormalCharacter::WeightMap out;
  out.reserve(c.num_distinct());
  for (const auto& [w, m] : c.weights()) out.emplace(e.ambient_coords(w), m);
  return out;
}

bool same_formal_character(const FormalCharacter& c1, const EqualRankEmbedding& e1, const FormalCharacter& c2,
                           const EqualRankEmbedding& e2) {
  if (!(e1.ambient == e2.ambient))
    throw AlgebraMismatch("embeddings live in " + e1.ambient.to_string() + " and " + e2.ambient.to_string());
  return c1.dim() == c2.dim() && ambient_weights(c1, e1) == ambient_weights(c2, e2);
}

}  // namespace eqrank
