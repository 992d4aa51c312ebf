#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string_view>

#include <fmt/format.h>

#include "eventling/error.hpp"
#include "eventling/step_function.hpp"

namespace eventling {

enum class TNormKind { Minimum, Product, Lukasiewicz };

inline constexpr std::array<TNormKind, 3> kAllTNorms{TNormKind::Minimum, TNormKind::Product,
                                                     TNormKind::Lukasiewicz};

/// Short names used on the command line: min, prod, luk.
constexpr std::string_view short_name(TNormKind kind) noexcept {
  switch (kind) {
    case TNormKind::Minimum: return "min";
    case TNormKind::Product: return "prod";
    case TNormKind::Lukasiewicz: return "luk";
  }
  return "?";
}

inline std::optional<TNormKind> parse_tnorm(std::string_view s) {
  for (auto k : kAllTNorms) {
    if (s == short_name(k)) return k;
  }
  return std::nullopt;
}

using RealCurve = StepFunction<double>;

namespace detail {

inline void check_unit(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw Error(ErrorCode::RangeError, fmt::format("t-norm arguments must lie in [0, 1], got {}, {}", a, b));
  }
}

}  // namespace detail

inline double tnorm_apply(TNormKind kind, double a, double b) {
  detail::check_unit(a, b);
  switch (kind) {
    case TNormKind::Minimum: return std::min(a, b);
    case TNormKind::Product: return a * b;
    case TNormKind::Lukasiewicz: return std::max(a + b - 1.0, 0.0);
  }
  return 0.0;
}

/// Dual conorms: maximum, probabilistic sum, bounded sum.
inline double tconorm_apply(TNormKind kind, double a, double b) {
  detail::check_unit(a, b);
  switch (kind) {
    case TNormKind::Minimum: return std::max(a, b);
    case TNormKind::Product: return a + b - a * b;
    case TNormKind::Lukasiewicz: return std::min(a + b, 1.0);
  }
  return 0.0;
}

inline RealCurve curve_tnorm(TNormKind kind, const RealCurve& a, const RealCurve& b) {
  return lift(a, b, [kind](double x, double y) { return tnorm_apply(kind, x, y); });
}

inline RealCurve curve_tconorm(TNormKind kind, const RealCurve& a, const RealCurve& b) {
  return lift(a, b, [kind](double x, double y) { return tconorm_apply(kind, x, y); });
}

}  // namespace eventling
