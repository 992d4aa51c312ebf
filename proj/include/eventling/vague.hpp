#pragma once

// Vague values (t, f) with t + f <= 1, vague sets over named elements, and
// the componentwise connectives and hedges lifted to piecewise curves.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "eventling/error.hpp"
#include "eventling/step_function.hpp"

namespace eventling {

/// Slack allowed on t + f <= 1 for values produced by floating arithmetic.
inline constexpr double kVagueTolerance = 1e-12;

struct VagueSpan {
  double lower;
  double upper;
  friend bool operator==(const VagueSpan&, const VagueSpan&) = default;
};

/// Truth membership t and false membership f; the grade of membership lies
/// somewhere in [t, 1 - f].
class VagueValue {
 public:
  /// Exact check, for values read from input data.
  static VagueValue make(double t, double f) {
    check_range(t, f);
    if (t + f > 1.0) {
      throw Error(ErrorCode::ConstraintViolation,
                  fmt::format("t + f = {} + {} exceeds 1", t, f));
    }
    return VagueValue(t, f);
  }

  /// For values computed by arithmetic: an excess of at most kVagueTolerance
  /// is clamped away by lowering f.
  static VagueValue from_computed(double t, double f) {
    check_range(t, f);
    const double excess = t + f - 1.0;
    if (excess > kVagueTolerance) {
      throw Error(ErrorCode::ConstraintViolation,
                  fmt::format("t + f = {} + {} exceeds 1 beyond tolerance", t, f));
    }
    if (excess > 0) f = 1.0 - t;
    return VagueValue(t, f);
  }

  double t() const noexcept { return t_; }
  double f() const noexcept { return f_; }

  VagueSpan span() const noexcept { return {t_, 1.0 - f_}; }

  friend bool operator==(const VagueValue&, const VagueValue&) = default;

 private:
  VagueValue(double t, double f) : t_(t), f_(f) {}

  static void check_range(double t, double f) {
    if (!(t >= 0.0 && t <= 1.0) || !(f >= 0.0 && f <= 1.0)) {
      throw Error(ErrorCode::ConstraintViolation,
                  fmt::format("components must lie in [0, 1], got ({}, {})", t, f));
    }
  }

  double t_ = 0.0;
  double f_ = 0.0;
};

inline VagueValue mk_vague(double t, double f) { return VagueValue::make(t, f); }

inline VagueSpan span(const VagueValue& v) noexcept { return v.span(); }

inline VagueValue vv_and(const VagueValue& a, const VagueValue& b) {
  return VagueValue::make(std::min(a.t(), b.t()), std::max(a.f(), b.f()));
}

inline VagueValue vv_or(const VagueValue& a, const VagueValue& b) {
  return VagueValue::make(std::max(a.t(), b.t()), std::min(a.f(), b.f()));
}

inline VagueValue vv_not(const VagueValue& a) { return VagueValue::make(a.f(), a.t()); }

/// Concentration (exponent > 1) or dilation (exponent < 1) applied to t and
/// to 1 - f alike.
inline VagueValue vv_hedge(const VagueValue& a, double exponent) {
  if (!(exponent > 0) || !std::isfinite(exponent)) {
    throw Error(ErrorCode::InvalidHedge, fmt::format("hedge exponent must be > 0, got {}", exponent));
  }
  if (exponent == 1.0) return a;
  return VagueValue::from_computed(std::pow(a.t(), exponent),
                                   1.0 - std::pow(1.0 - a.f(), exponent));
}

enum class HedgeKind { Very, MoreOrLess, Essentially };

/// Exponents used for the linguistic hedges; all configurable.
struct HedgeExponents {
  double very = 2.0;
  double more_or_less = 0.5;
  double essentially = 3.0;

  double of(HedgeKind kind) const noexcept {
    switch (kind) {
      case HedgeKind::Very: return very;
      case HedgeKind::MoreOrLess: return more_or_less;
      case HedgeKind::Essentially: return essentially;
    }
    return 1.0;
  }
};

/// A vague set over a finite universe of named elements.
class VagueSet {
 public:
  VagueSet() = default;
  VagueSet(std::initializer_list<std::pair<std::string, VagueValue>> items) {
    for (const auto& [name, v] : items) insert(name, v);
  }

  void insert(const std::string& element, const VagueValue& v) {
    if (!members_.emplace(element, v).second) {
      throw Error(ErrorCode::ConstraintViolation, "element '" + element + "' assigned twice");
    }
    order_.push_back(element);
  }

  const VagueValue& at(const std::string& element) const {
    auto it = members_.find(element);
    if (it == members_.end()) throw Error(ErrorCode::UnknownAtom, element);
    return it->second;
  }

  /// Elements in insertion order.
  const std::vector<std::string>& elements() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

 private:
  std::map<std::string, VagueValue> members_;
  std::vector<std::string> order_;
};

using VagueCurve = StepFunction<VagueValue>;

inline VagueCurve curve_and(const VagueCurve& a, const VagueCurve& b) {
  return lift(a, b, [](const VagueValue& x, const VagueValue& y) { return vv_and(x, y); });
}

inline VagueCurve curve_or(const VagueCurve& a, const VagueCurve& b) {
  return lift(a, b, [](const VagueValue& x, const VagueValue& y) { return vv_or(x, y); });
}

inline VagueCurve curve_not(const VagueCurve& a) {
  return a.map([](const VagueValue& x) { return vv_not(x); });
}

inline VagueCurve curve_hedge(const VagueCurve& a, double exponent) {
  return a.map([exponent](const VagueValue& x) { return vv_hedge(x, exponent); }).coalesced();
}

}  // namespace eventling
