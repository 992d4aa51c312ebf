#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "eventling/error.hpp"

namespace eventling {

/// Exact rational count/population. Unlike a normalized rational the
/// denominator is kept as given, so a membership value over |M| subjects
/// prints as k/|M|. Comparisons are by value.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0) throw Error(ErrorCode::RangeError, "fraction denominator must be positive");
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const { return fmt::format("{}/{}", num_, den_); }

  /// Same value expressed over denominator `den`, which must be a multiple
  /// of the current one.
  Fraction rescaled(std::int64_t den) const {
    if (den % den_ != 0) {
      throw Error(ErrorCode::RangeError, "denominator is not a multiple of the current one");
    }
    return Fraction(num_ * (den / den_), den);
  }

  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    const auto [x, y, d] = common(a, b);
    return Fraction(x + y, d);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    const auto [x, y, d] = common(a, b);
    return Fraction(x - y, d);
  }
  friend Fraction operator*(std::int64_t k, const Fraction& a) {
    return Fraction(k * a.num_, a.den_);
  }

  friend bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  struct Common {
    std::int64_t a, b, den;
  };
  static Common common(const Fraction& a, const Fraction& b) {
    if (a.den_ == b.den_) return {a.num_, b.num_, a.den_};
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {a.num_ * (l / a.den_), b.num_ * (l / b.den_), l};
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace eventling
