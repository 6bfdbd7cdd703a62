#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqrank/chars.hpp"
#include "eqrank/linalg.hpp"

namespace eqrank {

/// A semisimple subalgebra of full rank in a simple algebra, given by a base
/// of its root system inside the ambient root system.
struct EqualRankEmbedding {
  SimpleType ambient;
  SemisimpleAlgebra sub;
  /// Columns are ambient-coordinate simple roots of `sub`, grouped by the
  /// factors of `sub` in order, each factor in its standard node order.
  Matrix sub_simple_roots;
  /// Ambient coordinates -> sub coordinates and back.
  Matrix to_sub;
  Matrix to_ambient;
  bool maximal = false;
  std::string origin;  // how the base was obtained, e.g. "E8: delete node 4 (mark 6)"

  Weight sub_coords(const Weight& ambient_weight) const;
  Weight ambient_coords(const Weight& sub_weight) const;
  std::vector<Weight> simple_roots() const;
};

/// Finds the simple type whose standard Cartan matrix matches `cartan` (a
/// connected diagram) and the node order realizing it: order[k] is the
/// index in `cartan` playing node k of the standard type.
std::optional<std::pair<SimpleType, std::vector<std::size_t>>> identify_simple_type(
    const std::vector<std::vector<int>>& cartan);

/// Builds an embedding from any base of a closed full-rank subsystem given in
/// ambient coordinates; identifies the factor types and orders the columns.
EqualRankEmbedding make_embedding(const SimpleType& ambient, const std::vector<Weight>& base,
                                  std::string origin = {});

/// Maximal equal-rank semisimple subalgebras: delete a node of prime mark
/// from the extended Dynkin diagram. One embedding per subalgebra type.
/// Type A has none; `note`, when given, receives the reason.
std::vector<EqualRankEmbedding> maximal_equal_rank_subalgebras(const SimpleType& t, std::string* note = nullptr);

/// Every proper equal-rank semisimple subalgebra type reachable by repeated
/// node deletions on factors, one embedding per type.
std::vector<EqualRankEmbedding> equal_rank_subalgebras(const SimpleType& t);

/// Text block: ambient, sub, origin, and the simple-root columns.
std::string to_text(const EqualRankEmbedding& e);

/// The same weights, read in the subalgebra's coordinates.
FormalCharacter restrict_character(const FormalCharacter& c, const EqualRankEmbedding& e);

/// Weights of a character over `e.sub`, mapped back to ambient coordinates.
FormalCharacter::WeightMap ambient_weights(const FormalCharacter& c, const EqualRankEmbedding& e);

/// Equality of the two weight multisets in the shared ambient coordinates.
bool same_formal_character(const FormalCharacter& c1, const EqualRankEmbedding& e1, const FormalCharacter& c2,
                           const EqualRankEmbedding& e2);

}  // namespace eqrank
