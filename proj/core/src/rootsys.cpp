#include "eqrank/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>
#include <utility>

#include "eqrank/error.hpp"

namespace eqrank {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// Inner products <a_i, a_j> of the simple roots, long roots normalized to 2.
Matrix simple_root_gram(const SimpleType& t) {
  const auto n = static_cast<std::size_t>(t.rank());
  Matrix s(n, n);
  auto link = [&](std::size_t i, std::size_t j, const Rational& v) {
    s(i, j) = v;
    s(j, i) = v;
  };
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 2;
      s(n - 1, n - 1) = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) s(i, i) = 1;
      s(n - 1, n - 1) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, Rational(-1, 2));
      link(n - 2, n - 1, -1);
      break;
    case Family::D:
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E: {
      for (std::size_t i = 0; i < n; ++i) s(i, i) = 2;
      const std::vector<Edge> edges = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto [i, j] : edges)
        if (i < n && j < n) link(i, j, -1);
      break;
    }
    case Family::F:
      s(0, 0) = 2;
      s(1, 1) = 2;
      s(2, 2) = 1;
      s(3, 3) = 1;
      link(0, 1, -1);
      link(1, 2, -1);
      link(2, 3, Rational(-1, 2));
      break;
    case Family::G:
      s(0, 0) = Rational(2, 3);
      s(1, 1) = 2;
      link(0, 1, -1);
      break;
  }
  return s;
}

std::vector<std::vector<int>> cartan_from_gram(const Matrix& s) {
  const std::size_t n = s.rows();
  std::vector<std::vector<int>> c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = 2 * s(i, j) / s(j, j);
      c[i][j] = static_cast<int>(v.get_num().get_si());
    }
  return c;
}

// Coordinates of the simple roots, one row each.
Matrix simple_root_coordinates(const SimpleType& t, const std::vector<std::vector<int>>& cartan) {
  const auto n = static_cast<std::size_t>(t.rank());
  Matrix r(n, n);
  if (t.is_type_a()) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      r(i, i) = 1;
      r(i, i + 1) = -1;
    }
    // a_n = e_n - e_{n+1} = e_1 + ... + e_{n-1} + 2 e_n
    for (std::size_t j = 0; j < n; ++j) r(n - 1, j) = 1;
    r(n - 1, n - 1) = 2;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = cartan[i][j];
  }
  return r;
}

std::vector<Weight> orbit_under(const Weight& w, const RootSystem& rs, const std::vector<std::size_t>& nodes) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> out{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight x = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j : nodes) {
      Weight y = rs.reflect(x, j);
      if (seen.insert(y).second) {
        out.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  return out;
}

Rational height(const RootSystem& rs, const Weight& w) {
  Rational h = 0;
  for (const auto& c : rs.simple_coefficients(w)) h += c;
  return h;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) { return cartan_from_gram(simple_root_gram(t)); }

Vec RootSystem::dynkin_labels(const Weight& w) const {
  if (w.dim() != rank) throw DimensionError("weight does not match root system " + type.to_string());
  return coroot_functionals * w.coords();
}

Weight RootSystem::from_dynkin_labels(const Vec& labels) const {
  if (labels.size() != rank) throw DimensionError("label count does not match rank of " + type.to_string());
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i)
    if (labels[i] != 0) w += fundamental_weights[i] * labels[i];
  return w;
}

Vec RootSystem::simple_coefficients(const Weight& w) const {
  if (w.dim() != rank) throw DimensionError("weight does not match root system " + type.to_string());
  // w^T = k^T R  =>  k = R^{-T} w
  return simple_root_inverse.transpose() * w.coords();
}

Weight RootSystem::reflect(const Weight& w, std::size_t j) const {
  const Rational c = dot(coroot_functionals.row(j), w.coords());
  if (c == 0) return w;
  return w - simple_roots[j] * c;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (const auto& l : dynkin_labels(w))
    if (l < 0) return false;
  return true;
}

bool RootSystem::is_root(const Weight& w) const { return std::find(roots.begin(), roots.end(), w) != roots.end(); }

Weight RootSystem::rho() const {
  Weight r(rank);
  for (const auto& f : fundamental_weights) r += f;
  return r;
}

std::uint64_t parabolic_weyl_order(const RootSystem& rs, std::vector<std::size_t> nodes) {
  std::uint64_t order = 1;
  while (!nodes.empty()) {
    const std::size_t k = nodes.back();
    order *= orbit_under(rs.fundamental_weights[k], rs, nodes).size();
    nodes.pop_back();
  }
  return order;
}

RootSystem build_root_system(const SimpleType& t) {
  RootSystem rs{t, static_cast<std::size_t>(t.rank())};
  const std::size_t n = rs.rank;
  rs.simple_gram = simple_root_gram(t);
  rs.cartan = cartan_from_gram(rs.simple_gram);
  const Matrix r = simple_root_coordinates(t, rs.cartan);
  const auto r_inv = inverse(r);
  if (!r_inv) throw Error("singular simple-root matrix for " + t.to_string());
  rs.simple_root_inverse = *r_inv;
  rs.gram = *r_inv * rs.simple_gram * r_inv->transpose();
  for (std::size_t i = 0; i < n; ++i) rs.simple_roots.emplace_back(r.row(i));

  rs.coroot_functionals = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec ga = rs.gram * rs.simple_roots[j].coords();
    for (std::size_t i = 0; i < n; ++i) rs.coroot_functionals(j, i) = 2 * ga[i] / rs.simple_gram(j, j);
  }
  const auto fw = inverse(rs.coroot_functionals);
  if (!fw) throw Error("singular coroot matrix for " + t.to_string());
  for (std::size_t i = 0; i < n; ++i) rs.fundamental_weights.emplace_back(fw->column(i));

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  std::unordered_set<Weight, WeightHash> seen;
  for (const auto& a : rs.simple_roots)
    if (!seen.contains(a))
      for (auto& x : orbit_under(a, rs, all)) seen.insert(std::move(x));

  std::vector<std::pair<Rational, Weight>> pos, neg;
  for (const auto& w : seen) {
    const Rational h = height(rs, w);
    (h > 0 ? pos : neg).emplace_back(h, w);
  }
  auto by_height = [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  };
  std::sort(pos.begin(), pos.end(), by_height);
  std::sort(neg.begin(), neg.end(), by_height);
  for (auto& [h, w] : pos) rs.positive_roots.push_back(w);
  rs.roots = rs.positive_roots;
  for (auto& [h, w] : neg) rs.roots.push_back(w);

  rs.highest_root = rs.positive_roots.back();
  for (const auto& c : rs.simple_coefficients(rs.highest_root))
    rs.highest_root_marks.push_back(static_cast<int>(c.get_num().get_si()));
  rs.weyl_order = parabolic_weyl_order(rs, all);
  return rs;
}

std::shared_ptr<const RootSystem> root_system(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, std::shared_ptr<const RootSystem>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(t); it != cache.end()) return it->second;
  }
  auto rs = std::make_shared<const RootSystem>(build_root_system(t));
  std::lock_guard lock(mu);
  return cache.emplace(t, std::move(rs)).first->second;
}

std::vector<Weight> weyl_orbit(const Weight& w, const RootSystem& rs) {
  if (w.dim() != rs.rank) throw DimensionError("weight of dimension " + std::to_string(w.dim()) +
                                               " does not live on " + rs.type.to_string());
  std::vector<std::size_t> all(rs.rank);
  for (std::size_t i = 0; i < rs.rank; ++i) all[i] = i;
  return orbit_under(w, rs, all);
}

Vec e_basis_coords(const Weight& w, const RootSystem& rs) {
  if (!rs.type.is_type_a()) throw UnsupportedBasis("e-basis exists only for A_n blocks, not " + rs.type.to_string());
  if (w.dim() != rs.rank) throw DimensionError("weight does not match " + rs.type.to_string());
  return w.coords();
}

Weight from_e_basis(const Vec& v, const RootSystem& rs) {
  if (!rs.type.is_type_a()) throw UnsupportedBasis("e-basis exists only for A_n blocks, not " + rs.type.to_string());
  if (v.size() != rs.rank) throw DimensionError("e-basis vector does not match " + rs.type.to_string());
  return Weight(v);
}

Weight e_vector(std::size_t i, std::size_t n) {
  if (i < 1 || i > n + 1) throw DimensionError("e_i needs 1 <= i <= n+1");
  Weight w(n);
  if (i == n + 1) {
    for (std::size_t j = 0; j < n; ++j) w[j] = -1;
  } else {
    w[i - 1] = 1;
  }
  return w;
}

Weight highest_root(const SimpleType& t) { return root_system(t)->highest_root; }

// ---------------------------------------------------------------------------

AlgebraModel::AlgebraModel(SemisimpleAlgebra algebra) : algebra_(std::move(algebra)) {
  std::vector<Matrix> blocks;
  for (const auto& t : algebra_.factors()) {
    factors_.push_back(root_system(t));
    offsets_.push_back(dim_);
    for (std::size_t k = 0; k < factors_.back()->rank; ++k) simple_owner_.push_back(factors_.size() - 1);
    dim_ += factors_.back()->rank;
    blocks.push_back(factors_.back()->gram);
  }
  gram_ = Matrix::block_diagonal(blocks);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (const auto& r : factors_[i]->roots) {
      roots_.push_back(embed(r, i));
      root_factor_.push_back(i);
    }
    for (const auto& r : factors_[i]->positive_roots) positive_roots_.push_back(embed(r, i));
  }
}

void AlgebraModel::check_dim(const Weight& w) const {
  if (w.dim() != dim_)
    throw DimensionError("weight of dimension " + std::to_string(w.dim()) + " does not live on " +
                         algebra_.to_string() + " (dimension " + std::to_string(dim_) + ")");
}

Weight AlgebraModel::embed(const Weight& block, std::size_t i) const {
  if (block.dim() != factor_dim(i)) throw DimensionError("block weight does not match factor");
  Weight w(dim_);
  for (std::size_t k = 0; k < block.dim(); ++k) w[offsets_[i] + k] = block[k];
  return w;
}

Weight AlgebraModel::restrict_to(const Weight& w, std::size_t i) const {
  check_dim(w);
  Weight b(factor_dim(i));
  for (std::size_t k = 0; k < b.dim(); ++k) b[k] = w[offsets_[i] + k];
  return b;
}

std::size_t AlgebraModel::factor_of_simple(std::size_t s) const { return simple_owner_.at(s); }

Weight AlgebraModel::simple_root(std::size_t s) const {
  const std::size_t i = factor_of_simple(s);
  return embed(factors_[i]->simple_roots[s - offsets_[i]], i);
}

Weight AlgebraModel::reflect(const Weight& w, std::size_t s) const {
  check_dim(w);
  const std::size_t i = factor_of_simple(s);
  const RootSystem& rs = *factors_[i];
  const std::size_t j = s - offsets_[i];
  const Vec row = rs.coroot_functionals.row(j);
  Rational c = 0;
  for (std::size_t k = 0; k < rs.rank; ++k) c += row[k] * w[offsets_[i] + k];
  if (c == 0) return w;
  Weight out = w;
  for (std::size_t k = 0; k < rs.rank; ++k) out[offsets_[i] + k] -= c * rs.simple_roots[j][k];
  return out;
}

Vec AlgebraModel::dynkin_labels(const Weight& w) const {
  check_dim(w);
  Vec out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Vec l = factors_[i]->dynkin_labels(restrict_to(w, i));
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

Weight AlgebraModel::from_dynkin_labels(const Vec& labels) const {
  if (labels.size() != dim_)
    throw DimensionError("expected " + std::to_string(dim_) + " Dynkin labels for " + algebra_.to_string());
  Weight w(dim_);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    Vec part(labels.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
             labels.begin() + static_cast<std::ptrdiff_t>(offsets_[i] + factor_dim(i)));
    w += embed(factors_[i]->from_dynkin_labels(part), i);
  }
  return w;
}

bool AlgebraModel::is_dominant(const Weight& w) const {
  for (const auto& l : dynkin_labels(w))
    if (l < 0) return false;
  return true;
}

Matrix AlgebraModel::reflection_matrix(std::size_t s) const {
  Matrix m(dim_, dim_);
  for (std::size_t c = 0; c < dim_; ++c) {
    Weight e(dim_);
    e[c] = 1;
    const Weight img = reflect(e, s);
    for (std::size_t r = 0; r < dim_; ++r) m(r, c) = img[r];
  }
  return m;
}

std::shared_ptr<const AlgebraModel> algebra_model(const SemisimpleAlgebra& g) {
  static std::mutex mu;
  static std::map<SemisimpleAlgebra, std::shared_ptr<const AlgebraModel>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(g); it != cache.end()) return it->second;
  }
  auto m = std::make_shared<const AlgebraModel>(g);
  std::lock_guard lock(mu);
  return cache.emplace(g, std::move(m)).first->second;
}

}  // namespace eqrank
