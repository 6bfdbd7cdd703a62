#include "eqrank/algebra.hpp"

#include <algorithm>
#include <functional>

#include "eqrank/error.hpp"

namespace eqrank {

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

namespace {

std::string rank_bound(Family f) {
  switch (f) {
    case Family::A: return "A_n needs n >= 1";
    case Family::B: return "B_n needs n >= 2";
    case Family::C: return "C_n needs n >= 2";
    case Family::D: return "D_n needs n >= 3";
    case Family::E: return "E_n needs n in {6,7,8}";
    case Family::F: return "F_n needs n = 4";
    case Family::G: return "G_n needs n = 2";
  }
  return {};
}

}  // namespace

bool is_valid_simple(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 1;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  if (family == Family::D && rank == 2)
    throw InvalidType("D2 = so(4) is not simple; write it as A1xA1");
  if (!is_valid_simple(family, rank))
    throw InvalidType(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                      family_letter(family) + ": " + rank_bound(family));
  if ((family == Family::B || family == Family::C) && rank == 1) family_ = Family::A;
  if (family == Family::C && rank == 2) family_ = Family::B;
  if (family == Family::D && rank == 3) family_ = Family::A;
}

std::string SimpleType::to_string() const { return family_letter(family_) + std::to_string(rank_); }

SemisimpleAlgebra::SemisimpleAlgebra(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidType("a semisimple algebra needs at least one simple factor");
  std::sort(factors_.begin(), factors_.end());
}

SemisimpleAlgebra::SemisimpleAlgebra(std::initializer_list<SimpleType> factors)
    : SemisimpleAlgebra(std::vector<SimpleType>(factors)) {}

SemisimpleAlgebra::SemisimpleAlgebra(SimpleType t) : factors_{t} {}

int SemisimpleAlgebra::rank() const noexcept {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

int SemisimpleAlgebra::count(const SimpleType& t) const {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), t));
}

bool SemisimpleAlgebra::all_type_a() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const SimpleType& t) { return t.is_type_a(); });
}

std::string SemisimpleAlgebra::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += factors_[i].to_string();
  }
  return s;
}

SemisimpleAlgebra SemisimpleAlgebra::operator*(const SemisimpleAlgebra& rhs) const {
  std::vector<SimpleType> f = factors_;
  f.insert(f.end(), rhs.factors_.begin(), rhs.factors_.end());
  return SemisimpleAlgebra(std::move(f));
}

std::vector<SimpleType> so(int n) {
  if (n < 1) throw InvalidType("so(n) needs n >= 1");
  if (n <= 2) return {};
  if (n == 4) return {A(1), A(1)};
  if (n % 2) return {B((n - 1) / 2)};
  return {D(n / 2)};
}

std::vector<SimpleType> sp(int two_l) {
  if (two_l < 2 || two_l % 2) throw InvalidType("sp(2l) needs an even argument >= 2");
  return {C(two_l / 2)};
}

std::vector<SimpleType> sl(int n) {
  if (n < 2) throw InvalidType("sl(n) needs n >= 2");
  return {A(n - 1)};
}

std::vector<SimpleType> simple_types_up_to(int max_rank) {
  std::vector<SimpleType> out;
  for (int f = 0; f <= static_cast<int>(Family::G); ++f)
    for (int r = 1; r <= max_rank; ++r) {
      const auto fam = static_cast<Family>(f);
      if (fam == Family::D && r == 2) continue;
      if (!is_valid_simple(fam, r)) continue;
      SimpleType t(fam, r);
      if (t.family() == fam && t.rank() == r) out.push_back(t);  // skip aliases
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SemisimpleAlgebra> algebras_of_rank(int r) {
  const auto types = simple_types_up_to(r);
  std::vector<SemisimpleAlgebra> out;
  std::vector<SimpleType> cur;
  // Nondecreasing sequences over `types` with rank sum r.
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t i = start; i < types.size(); ++i) {
      if (types[i].rank() > left) continue;
      cur.push_back(types[i]);
      rec(i, left - types[i].rank());
      cur.pop_back();
    }
  };
  if (r >= 1) rec(0, r);
  return out;
}

std::vector<SemisimpleAlgebra> algebra_catalog(int max_factors, int max_factor_rank) {
  std::vector<SemisimpleAlgebra> out;
  const auto types = simple_types_up_to(max_factor_rank);
  std::vector<std::vector<SimpleType>> level{{}};
  for (int f = 1; f <= max_factors; ++f) {
    std::vector<std::vector<SimpleType>> next;
    for (const auto& base : level)
      for (const auto& t : types)
        if (base.empty() || !(t < base.back())) {
          auto v = base;
          v.push_back(t);
          out.emplace_back(v);
          next.push_back(std::move(v));
        }
    level = std::move(next);
  }
  return out;
}

}  // namespace eqrank
