#include "eqrank/chars.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "eqrank/error.hpp"
#include "eqrank/rootsys.hpp"

namespace eqrank {

using WeightMap = FormalCharacter::WeightMap;

FormalCharacter::FormalCharacter(SemisimpleAlgebra g, WeightMap weights)
    : algebra_(std::move(g)), weights_(std::move(weights)) {
  for (const auto& [w, m] : weights_) dim_ += m;
}

FormalCharacter FormalCharacter::empty(SemisimpleAlgebra g) { return FormalCharacter(std::move(g), {}); }

FormalCharacter FormalCharacter::from_weights(SemisimpleAlgebra g, WeightMap weights) {
  const auto model = algebra_model(g);
  for (const auto& [w, m] : weights) {
    model->check_dim(w);
    if (!model->in_lattice(w)) throw Error("weight " + w.to_string() + " is not in the weight lattice");
    if (m == 0) throw Error("multiplicities must be positive");
  }
  FormalCharacter c(std::move(g), std::move(weights));
  if (!is_weyl_invariant(c)) throw Error("weight multiset is not Weyl-invariant");
  return c;
}

std::uint64_t FormalCharacter::multiplicity(const Weight& w) const {
  const auto it = weights_.find(w);
  return it == weights_.end() ? 0 : it->second;
}

std::vector<std::pair<Weight, std::uint64_t>> FormalCharacter::sorted() const {
  std::vector<std::pair<Weight, std::uint64_t>> out(weights_.begin(), weights_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

void require_same_algebra(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.algebra() == b.algebra()))
    throw AlgebraMismatch("characters over " + a.algebra().to_string() + " and " + b.algebra().to_string());
}

// Integer copy of a root system. Lattice weights have integer coordinates in
// every model basis, and the gram is scaled to integers.
using IntWeight = std::vector<std::int64_t>;

struct IntWeightHash {
  std::size_t operator()(const IntWeight& w) const noexcept {
    std::size_t h = w.size();
    for (auto x : w) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::int64_t to_int(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) throw std::logic_error("expected a machine integer");
  return x.get_num().get_si();
}

IntWeight to_int(const Weight& w) {
  IntWeight out(w.dim());
  for (std::size_t i = 0; i < w.dim(); ++i) out[i] = to_int(w[i]);
  return out;
}

Weight to_weight(const IntWeight& w) {
  Weight out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = Rational(static_cast<long>(w[i]));
  return out;
}

struct IntRoots {
  std::size_t n = 0;
  std::vector<IntWeight> simple;
  std::vector<IntWeight> positive;
  std::vector<IntWeight> coroot;  // row j gives <w, a_j^vee>
  std::vector<IntWeight> gram;    // scaled gram

  explicit IntRoots(const RootSystem& rs) : n(rs.rank) {
    for (const auto& a : rs.simple_roots) simple.push_back(to_int(a));
    for (const auto& a : rs.positive_roots) positive.push_back(to_int(a));
    for (std::size_t j = 0; j < n; ++j) coroot.push_back(to_int(Weight(rs.coroot_functionals.row(j))));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), rs.gram(i, j).get_den_mpz_t());
    for (std::size_t i = 0; i < n; ++i) {
      IntWeight row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = to_int(rs.gram(i, j) * scale);
      gram.push_back(std::move(row));
    }
  }

  std::int64_t label(const IntWeight& w, std::size_t j) const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s += coroot[j][k] * w[k];
    return s;
  }
  bool dominant(const IntWeight& w) const {
    for (std::size_t j = 0; j < n; ++j)
      if (label(w, j) < 0) return false;
    return true;
  }
  void reflect(IntWeight& w, std::size_t j, std::int64_t c) const {
    for (std::size_t k = 0; k < n; ++k) w[k] -= c * simple[j][k];
  }
  IntWeight to_dominant(IntWeight w) const {
    for (;;) {
      std::size_t j = 0;
      std::int64_t c = 0;
      for (; j < n; ++j)
        if ((c = label(w, j)) < 0) break;
      if (j == n) return w;
      reflect(w, j, c);
    }
  }
  std::int64_t inner(const IntWeight& u, const IntWeight& v) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += u[i] * gram[i][j] * v[j];
    return s;
  }
  std::vector<IntWeight> orbit(const IntWeight& w) const {
    std::unordered_set<IntWeight, IntWeightHash> seen{w};
    std::vector<IntWeight> out{w};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t c = label(out[i], j);
        if (c == 0) continue;
        IntWeight x = out[i];
        reflect(x, j, c);
        if (seen.insert(x).second) out.push_back(std::move(x));
      }
    return out;
  }
};

// Dominant weight -> multiplicity for the irreducible module V(lambda).
std::vector<std::pair<IntWeight, std::uint64_t>> freudenthal_dominant(const RootSystem& rs, const IntRoots& ir,
                                                                      const Weight& lambda) {
  const IntWeight top_weight = to_int(lambda);
  std::unordered_set<IntWeight, IntWeightHash> seen{top_weight};
  std::vector<IntWeight> dominant{top_weight};
  for (std::size_t i = 0; i < dominant.size(); ++i)
    for (const auto& a : ir.positive) {
      IntWeight nu = dominant[i];
      for (std::size_t k = 0; k < ir.n; ++k) nu[k] -= a[k];
      if (ir.dominant(nu) && seen.insert(nu).second) dominant.push_back(std::move(nu));
    }
  auto depth = [&](const IntWeight& mu) {
    Rational h = 0;
    for (const auto& c : rs.simple_coefficients(lambda - to_weight(mu))) h += c;
    return to_int(h);
  };
  std::vector<std::pair<std::int64_t, IntWeight>> order;
  for (auto& mu : dominant) order.emplace_back(depth(mu), std::move(mu));
  std::sort(order.begin(), order.end());

  const IntWeight rho = to_int(rs.rho());
  auto shifted_norm = [&](const IntWeight& mu) {
    IntWeight s = mu;
    for (std::size_t k = 0; k < ir.n; ++k) s[k] += rho[k];
    return ir.inner(s, s);
  };
  const std::int64_t top = shifted_norm(top_weight);
  std::unordered_map<IntWeight, std::uint64_t, IntWeightHash> mult;
  std::vector<std::pair<IntWeight, std::uint64_t>> out;
  for (const auto& [d, mu] : order) {
    std::uint64_t value = 1;
    if (d > 0) {
      __int128 acc = 0;
      for (const auto& a : ir.positive) {
        IntWeight up = mu;
        for (;;) {
          for (std::size_t k = 0; k < ir.n; ++k) up[k] += a[k];
          const auto it = mult.find(ir.to_dominant(up));
          if (it == mult.end()) break;
          acc += static_cast<__int128>(it->second) * ir.inner(up, a);
        }
      }
      const std::int64_t denom = top - shifted_norm(mu);
      if (denom <= 0 || (2 * acc) % denom != 0 || 2 * acc <= 0)
        throw Error("Freudenthal recursion produced a non-positive-integer multiplicity");
      const __int128 q = 2 * acc / denom;
      if (q > static_cast<__int128>(UINT64_MAX)) throw Error("multiplicity overflows 64 bits");
      value = static_cast<std::uint64_t>(q);
    }
    mult.emplace(mu, value);
    out.emplace_back(mu, value);
  }
  return out;
}

std::shared_ptr<const WeightMap> simple_irreducible(const SimpleType& t, const Weight& lambda) {
  static std::mutex mu;
  static std::map<std::pair<SimpleType, Vec>, std::shared_ptr<const WeightMap>> cache;
  const auto key = std::make_pair(t, lambda.coords());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto rs = root_system(t);
  const IntRoots ir(*rs);
  WeightMap out;
  for (const auto& [dom, m] : freudenthal_dominant(*rs, ir, lambda))
    for (const auto& w : ir.orbit(dom)) out.emplace(to_weight(w), m);
  auto ptr = std::make_shared<const WeightMap>(std::move(out));
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(ptr)).first->second;
}

}  // namespace

FormalCharacter adjoint_character(const SemisimpleAlgebra& g) {
  const auto model = algebra_model(g);
  WeightMap w;
  for (const auto& r : model->roots()) w[r] = 1;
  w[model->zero()] = static_cast<std::uint64_t>(g.rank());
  return detail::CharacterAccess::make(g, std::move(w));
}

FormalCharacter trivial_character(const SemisimpleAlgebra& g) {
  WeightMap w;
  w[algebra_model(g)->zero()] = 1;
  return detail::CharacterAccess::make(g, std::move(w));
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  require_same_algebra(a, b);
  WeightMap out;
  out.reserve(a.num_distinct() * b.num_distinct());
  for (const auto& [u, m] : a.weights())
    for (const auto& [v, n] : b.weights()) out[u + v] += m * n;
  return detail::CharacterAccess::make(a.algebra(), std::move(out));
}

FormalCharacter dual(const FormalCharacter& c) {
  WeightMap out;
  for (const auto& [w, m] : c.weights()) out.emplace(-w, m);
  return detail::CharacterAccess::make(c.algebra(), std::move(out));
}

FormalCharacter sum(const FormalCharacter& a, const FormalCharacter& b) {
  require_same_algebra(a, b);
  WeightMap out = a.weights();
  for (const auto& [w, m] : b.weights()) out[w] += m;
  return detail::CharacterAccess::make(a.algebra(), std::move(out));
}

FormalCharacter outer_product(const FormalCharacter& a, const FormalCharacter& b) {
  const SemisimpleAlgebra g = a.algebra() * b.algebra();
  const auto ma = algebra_model(a.algebra());
  const auto mb = algebra_model(b.algebra());
  const auto mg = algebra_model(g);
  // Assign each factor of g to a source block: a's factors first, then b's.
  std::vector<std::pair<int, std::size_t>> source(mg->num_factors());
  std::vector<bool> used_a(ma->num_factors()), used_b(mb->num_factors());
  for (std::size_t i = 0; i < mg->num_factors(); ++i) {
    const SimpleType t = g.factors()[i];
    bool found = false;
    for (std::size_t j = 0; j < ma->num_factors() && !found; ++j)
      if (!used_a[j] && a.algebra().factors()[j] == t) {
        used_a[j] = true;
        source[i] = {0, j};
        found = true;
      }
    for (std::size_t j = 0; j < mb->num_factors() && !found; ++j)
      if (!used_b[j] && b.algebra().factors()[j] == t) {
        used_b[j] = true;
        source[i] = {1, j};
        found = true;
      }
  }
  WeightMap out;
  for (const auto& [u, m] : a.weights())
    for (const auto& [v, n] : b.weights()) {
      Weight w(mg->dim());
      for (std::size_t i = 0; i < mg->num_factors(); ++i) {
        const auto [side, j] = source[i];
        const Weight block = side == 0 ? ma->restrict_to(u, j) : mb->restrict_to(v, j);
        for (std::size_t k = 0; k < block.dim(); ++k) w[mg->offset(i) + k] = block[k];
      }
      out[w] += m * n;
    }
  return detail::CharacterAccess::make(g, std::move(out));
}

FormalCharacter saturate(const FormalCharacter& c) {
  if (!is_faithful(c))
    throw NotFaithful("saturation needs a faithful character; " + c.algebra().to_string() +
                      " has a factor acting trivially");
  return tensor(c, dual(c));
}

FormalCharacter irreducible_character(const SemisimpleAlgebra& g, const Weight& hw) {
  const auto model = algebra_model(g);
  model->check_dim(hw);
  if (!model->in_lattice(hw)) throw InvalidHighestWeight("highest weight " + hw.to_string() + " is not integral");
  if (!model->is_dominant(hw)) throw InvalidHighestWeight("highest weight " + hw.to_string() + " is not dominant");
  std::vector<std::pair<Weight, std::uint64_t>> acc{{model->zero(), 1}};
  for (std::size_t i = 0; i < model->num_factors(); ++i) {
    const auto block = simple_irreducible(g.factors()[i], model->restrict_to(hw, i));
    std::vector<std::pair<Weight, std::uint64_t>> next;
    next.reserve(acc.size() * block->size());
    for (const auto& [w, m] : acc)
      for (const auto& [b, n] : *block) {
        Weight x = w;
        for (std::size_t k = 0; k < b.dim(); ++k) x[model->offset(i) + k] = b[k];
        next.emplace_back(std::move(x), m * n);
      }
    acc = std::move(next);
  }
  WeightMap out(acc.begin(), acc.end());
  return detail::CharacterAccess::make(g, std::move(out));
}

FormalCharacter irreducible_character_from_labels(const SemisimpleAlgebra& g, const Vec& labels) {
  for (const auto& l : labels)
    if (!is_integer(l) || l < 0) throw InvalidHighestWeight("Dynkin labels must be non-negative integers");
  return irreducible_character(g, algebra_model(g)->from_dynkin_labels(labels));
}

bool is_faithful(const FormalCharacter& c) {
  const auto model = algebra_model(c.algebra());
  for (std::size_t i = 0; i < model->num_factors(); ++i) {
    bool acts = false;
    for (const auto& [w, m] : c.weights()) {
      if (!model->restrict_to(w, i).is_zero()) {
        acts = true;
        break;
      }
    }
    if (!acts) return false;
  }
  return true;
}

bool is_weyl_invariant(const FormalCharacter& c) {
  const auto model = algebra_model(c.algebra());
  for (std::size_t s = 0; s < model->num_simple(); ++s)
    for (const auto& [w, m] : c.weights())
      if (c.multiplicity(model->reflect(w, s)) != m) return false;
  return true;
}

std::vector<std::pair<Weight, std::uint64_t>> dominant_weights(const FormalCharacter& c) {
  const auto model = algebra_model(c.algebra());
  std::vector<std::pair<Weight, std::uint64_t>> out;
  for (const auto& [w, m] : c.weights())
    if (model->is_dominant(w)) out.emplace_back(w, m);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace eqrank
