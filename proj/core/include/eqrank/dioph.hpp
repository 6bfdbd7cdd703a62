#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "eqrank/linalg.hpp"

namespace eqrank {

/// Positive integers with 2 = m/(m+1) + (l-k)(k+1)/(l+1).
struct DSolution {
  std::int64_t m = 0;
  std::int64_t l = 0;
  std::int64_t k = 0;
  auto operator<=>(const DSolution&) const = default;
};

/// Right-hand side m/(m+1) + (l-k)(k+1)/(l+1), exactly.
Rational d_rhs(std::int64_t m, std::int64_t l, std::int64_t k);
bool satisfies_d(const DSolution& s);

/// The m that solves the equation for given (l, k), if it is a positive integer.
std::optional<std::int64_t> solve_d_for_m(std::int64_t l, std::int64_t k);

/// All solutions, found by the case split on a = l - k, b = k + 1:
/// a = 1 has none, a = 2 or b = 2 reduce to m(b-2) = 4 resp. m(a-2) = 4,
/// and otherwise 1 <= (a-2)(b-2) <= 3 leaves finitely many pairs.
std::set<DSolution> solve_D();

/// Positive (n, k), k < n, with k(n-k-1) = 1.
std::set<std::pair<std::int64_t, std::int64_t>> solve_k_equation();

struct SixtySolution {
  std::int64_t n = 0;
  std::int64_t discriminant = 0;  // sqrt(N^2 - 8N)
  std::vector<std::int64_t> k_values;
};

/// N >= 2 for which K^2 - N K + 2N = 0 has a positive integer root K.
/// With d = N - sqrt(N^2 - 8N) one gets N = d^2/(2d - 8), forcing 4 < d <= 8.
std::vector<SixtySolution> solve_60_equation_detailed();
std::set<std::int64_t> solve_60_equation();

}  // namespace eqrank
