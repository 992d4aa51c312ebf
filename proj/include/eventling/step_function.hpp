#pragma once

// Piecewise-constant functions over a Universe with right-open pieces.
// Membership curves (exact fractions), real-valued t-norm curves and vague
// curves are all instances.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <iterator>
#include <type_traits>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "eventling/error.hpp"
#include "eventling/region.hpp"

namespace eventling {

template <typename T>
class StepFunction {
 public:
  using value_type = T;

  /// breakpoints b_0 < b_1 < ... < b_n with b_0 = u.lo and b_n = u.hi;
  /// values[i] holds on [b_i, b_{i+1}).
  StepFunction(Universe u, std::vector<double> breakpoints, std::vector<T> values)
      : universe_(u), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.size() != values_.size() + 1 || values_.empty()) {
      throw Error(ErrorCode::RangeError, "step function needs one more breakpoint than pieces");
    }
    if (breakpoints_.front() != u.lo || breakpoints_.back() != u.hi) {
      throw Error(ErrorCode::RangeError, "step function must span its universe exactly");
    }
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
      if (!(breakpoints_[i] < breakpoints_[i + 1])) {
        throw Error(ErrorCode::RangeError, "step function breakpoints must strictly increase");
      }
    }
  }

  static StepFunction constant(const Universe& u, T value) {
    return StepFunction(u, {u.lo, u.hi}, {std::move(value)});
  }

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<T>& values() const noexcept { return values_; }
  std::size_t pieces() const noexcept { return values_.size(); }

  std::size_t piece_index(double omega) const {
    if (!universe_.contains(omega)) {
      throw Error(ErrorCode::OutOfUniverse,
                  fmt::format("{} outside [{}, {})", omega, universe_.lo, universe_.hi));
    }
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), omega);
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  }

  const T& at(double omega) const { return values_[piece_index(omega)]; }

  /// Merge adjacent pieces holding equal values.
  StepFunction coalesced() const {
    std::vector<double> b{breakpoints_.front()};
    std::vector<T> v{values_.front()};
    for (std::size_t i = 1; i < values_.size(); ++i) {
      if (values_[i] == v.back()) continue;
      b.push_back(breakpoints_[i]);
      v.push_back(values_[i]);
    }
    b.push_back(breakpoints_.back());
    return StepFunction(universe_, std::move(b), std::move(v));
  }

  template <typename F>
  auto map(F&& f) const -> StepFunction<std::decay_t<std::invoke_result_t<F, const T&>>> {
    using R = std::decay_t<std::invoke_result_t<F, const T&>>;
    std::vector<R> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(f(v));
    return StepFunction<R>(universe_, breakpoints_, std::move(out));
  }

  /// Midpoints of every piece plus every interior breakpoint: the probe set
  /// on which two step functions over these breakpoints are fully compared.
  std::vector<double> probe_points() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      out.push_back(breakpoints_[i]);
      out.push_back(breakpoints_[i] + (breakpoints_[i + 1] - breakpoints_[i]) / 2);
    }
    return out;
  }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    const auto ca = a.coalesced();
    const auto cb = b.coalesced();
    return ca.universe_ == cb.universe_ && ca.breakpoints_ == cb.breakpoints_ &&
           ca.values_ == cb.values_;
  }

 private:
  Universe universe_;
  std::vector<double> breakpoints_;
  std::vector<T> values_;
};

/// Common refinement of both operands, then f applied per piece.
template <typename A, typename B, typename F>
auto lift(const StepFunction<A>& a, const StepFunction<B>& b, F&& f)
    -> StepFunction<std::decay_t<std::invoke_result_t<F, const A&, const B&>>> {
  using R = std::decay_t<std::invoke_result_t<F, const A&, const B&>>;
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorCode::UniverseMismatch, "curves over different universes");
  }
  std::vector<double> cuts;
  std::set_union(a.breakpoints().begin(), a.breakpoints().end(), b.breakpoints().begin(),
                 b.breakpoints().end(), std::back_inserter(cuts));
  std::vector<R> values;
  values.reserve(cuts.size() - 1);
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    while (a.breakpoints()[ia + 1] <= cuts[i]) ++ia;
    while (b.breakpoints()[ib + 1] <= cuts[i]) ++ib;
    values.push_back(f(a.values()[ia], b.values()[ib]));
  }
  return StepFunction<R>(a.universe(), std::move(cuts), std::move(values)).coalesced();
}

/// Grid lo, lo+step, ... strictly below hi.
inline std::vector<double> sample_grid(const Universe& u, double step) {
  if (!(step > 0) || !std::isfinite(step)) {
    throw Error(ErrorCode::RangeError, fmt::format("sample step must be positive, got {}", step));
  }
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double omega = u.lo + static_cast<double>(i) * step;
    if (!(omega < u.hi)) break;
    grid.push_back(omega);
  }
  return grid;
}

template <typename T>
struct Sample {
  double omega;
  T value;
};

template <typename T>
std::vector<Sample<T>> sample(const StepFunction<T>& c, double step) {
  std::vector<Sample<T>> out;
  for (double omega : sample_grid(c.universe(), step)) out.push_back({omega, c.at(omega)});
  return out;
}

}  // namespace eventling
