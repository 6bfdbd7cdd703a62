#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>

#include "eqrank/error.hpp"
#include "eqrank/linalg.hpp"

namespace eqrank {

/// A point of Lambda (x) Q, stored in the ambient coordinates of its algebra:
/// e-basis for A_n blocks, fundamental-weight basis for every other family,
/// blocks concatenated in the algebra's canonical factor order.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim) {}
  explicit Weight(Vec coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight from_ints(std::initializer_list<long> xs) {
    Weight w;
    for (long x : xs) w.coords_.emplace_back(x);
    return w;
  }

  const Vec& coords() const noexcept { return coords_; }
  Vec& coords() noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const {
    for (const auto& x : coords_)
      if (x != 0) return false;
    return true;
  }
  bool is_integral() const { return eqrank::is_integral(coords_); }

  Weight operator+(const Weight& o) const {
    check(o);
    Weight r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords_[i] += o.coords_[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    check(o);
    Weight r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& x : r.coords_) x = -x;
    return r;
  }
  Weight operator*(const Rational& s) const {
    Weight r = *this;
    for (auto& x : r.coords_) x *= s;
    return r;
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }

  bool operator==(const Weight& o) const { return coords_ == o.coords_; }
  /// Lexicographic; used only for deterministic listings.
  bool operator<(const Weight& o) const { return coords_ < o.coords_; }

  std::string to_string() const { return eqrank::to_string(coords_); }

 private:
  void check(const Weight& o) const {
    if (o.dim() != dim()) throw DimensionError("weights of different dimension");
  }
  Vec coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return VecHash{}(w.coords()); }
};

}  // namespace eqrank
