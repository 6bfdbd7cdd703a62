#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eqrank/algebra.hpp"
#include "eqrank/weight.hpp"

namespace eqrank {

namespace detail {
struct CharacterAccess;
}

/// Formal character: a Weyl-invariant multiset of lattice weights.
class FormalCharacter {
 public:
  using WeightMap = std::unordered_map<Weight, std::uint64_t, WeightHash>;

  /// Validated construction: dimensions, lattice membership, positive
  /// multiplicities and Weyl invariance are all checked.
  static FormalCharacter from_weights(SemisimpleAlgebra g, WeightMap weights);
  /// The zero character (no weights).
  static FormalCharacter empty(SemisimpleAlgebra g);

  const SemisimpleAlgebra& algebra() const noexcept { return algebra_; }
  const WeightMap& weights() const noexcept { return weights_; }
  std::uint64_t dim() const noexcept { return dim_; }
  std::size_t num_distinct() const noexcept { return weights_.size(); }
  std::uint64_t multiplicity(const Weight& w) const;
  bool is_empty() const noexcept { return weights_.empty(); }

  /// Weights sorted lexicographically, for stable listings.
  std::vector<std::pair<Weight, std::uint64_t>> sorted() const;

  bool operator==(const FormalCharacter& o) const { return algebra_ == o.algebra_ && weights_ == o.weights_; }

 private:
  friend struct detail::CharacterAccess;
  FormalCharacter(SemisimpleAlgebra g, WeightMap weights);

  SemisimpleAlgebra algebra_;
  WeightMap weights_;
  std::uint64_t dim_ = 0;
};

namespace detail {
struct CharacterAccess {
  static FormalCharacter make(SemisimpleAlgebra g, FormalCharacter::WeightMap weights) {
    return FormalCharacter(std::move(g), std::move(weights));
  }
};
}  // namespace detail

/// Roots with multiplicity 1 plus the zero weight with multiplicity rank.
FormalCharacter adjoint_character(const SemisimpleAlgebra& g);
FormalCharacter trivial_character(const SemisimpleAlgebra& g);

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);
FormalCharacter dual(const FormalCharacter& c);
FormalCharacter sum(const FormalCharacter& a, const FormalCharacter& b);
inline FormalCharacter operator+(const FormalCharacter& a, const FormalCharacter& b) { return sum(a, b); }
inline FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) { return tensor(a, b); }

/// External tensor product: a character of `a.algebra() x b.algebra()`.
FormalCharacter outer_product(const FormalCharacter& a, const FormalCharacter& b);

/// c (x) c*: all pairwise differences of weights. Requires a faithful c.
FormalCharacter saturate(const FormalCharacter& c);

/// Irreducible character with highest weight `hw` (ambient coordinates),
/// by Freudenthal's multiplicity recursion on each simple factor.
FormalCharacter irreducible_character(const SemisimpleAlgebra& g, const Weight& hw);
/// Same, with the highest weight given by its Dynkin labels.
FormalCharacter irreducible_character_from_labels(const SemisimpleAlgebra& g, const Vec& labels);

/// True iff every simple factor acts nontrivially.
bool is_faithful(const FormalCharacter& c);

bool is_weyl_invariant(const FormalCharacter& c);

/// Dominant weights of `c` with their multiplicities, sorted.
std::vector<std::pair<Weight, std::uint64_t>> dominant_weights(const FormalCharacter& c);

}  // namespace eqrank
