#include "eqrank/dioph.hpp"

namespace eqrank {

Rational d_rhs(std::int64_t m, std::int64_t l, std::int64_t k) {
  return Rational(static_cast<long>(m)) / (m + 1) + Rational(static_cast<long>((l - k) * (k + 1))) / (l + 1);
}

bool satisfies_d(const DSolution& s) {
  return s.m > 0 && s.l > 0 && s.k > 0 && d_rhs(s.m, s.l, s.k) == 2;
}

std::optional<std::int64_t> solve_d_for_m(std::int64_t l, std::int64_t k) {
  if (l <= 0 || k <= 0) return std::nullopt;
  // m/(m+1) = t  <=>  m = t/(1-t)
  const Rational t = 2 - Rational(static_cast<long>((l - k) * (k + 1))) / (l + 1);
  if (t <= 0 || t >= 1) return std::nullopt;
  const Rational m = t / (1 - t);
  if (!is_integer(m)) return std::nullopt;
  return m.get_num().get_si();
}

namespace {

void add_if_solution(std::set<DSolution>& out, std::int64_t a, std::int64_t b) {
  const std::int64_t l = a + b - 1, k = b - 1;
  if (const auto m = solve_d_for_m(l, k)) {
    const DSolution s{*m, l, k};
    if (satisfies_d(s)) out.insert(s);
  }
}

}  // namespace

std::set<DSolution> solve_D() {
  std::set<DSolution> out;
  // k >= 1 gives b >= 2. a <= 0 makes the second term non-positive, and
  // a = 1 makes it b/(b+1) < 1, so m/(m+1) > 1: neither branch has solutions.
  // a = 2: m(b-2) = 4.
  for (std::int64_t d : {1, 2, 4}) add_if_solution(out, 2, d + 2);
  // b = 2: m(a-2) = 4.
  for (std::int64_t d : {1, 2, 4}) add_if_solution(out, d + 2, 2);
  // a, b >= 3: 1 <= (a-2)(b-2) <= 3.
  for (std::int64_t x = 1; x <= 3; ++x)
    for (std::int64_t y = 1; x * y <= 3; ++y) add_if_solution(out, x + 2, y + 2);
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> solve_k_equation() {
  // Both factors are positive integers with product 1.
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  const std::int64_t k = 1, n = k + 2;
  if (k * (n - k - 1) == 1 && k < n) out.emplace(n, k);
  return out;
}

std::vector<SixtySolution> solve_60_equation_detailed() {
  std::vector<SixtySolution> out;
  for (std::int64_t d = 5; d <= 8; ++d) {
    if ((d * d) % (2 * d - 8) != 0) continue;
    const std::int64_t n = d * d / (2 * d - 8);
    const std::int64_t disc = n - d;
    if (n < 2 || disc < 0 || disc * disc != n * n - 8 * n) continue;
    SixtySolution s{n, disc, {}};
    for (std::int64_t num : {n - disc, n + disc}) {
      if (num <= 0 || num % 2 != 0) continue;
      const std::int64_t k = num / 2;
      if (k * k - n * k + 2 * n == 0 && (s.k_values.empty() || s.k_values.back() != k)) s.k_values.push_back(k);
    }
    if (!s.k_values.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::set<std::int64_t> solve_60_equation() {
  std::set<std::int64_t> out;
  for (const auto& s : solve_60_equation_detailed()) out.insert(s.n);
  return out;
}

}  // namespace eqrank
