#pragma once

// Exact set algebra on finite unions of half-open intervals [lo, hi) inside a
// bounded universe. Endpoints are never produced by arithmetic, only selected
// from operands, so equality is exact.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "eventling/error.hpp"

namespace eventling {

/// The carrier set [lo, hi).
struct Universe {
  double lo = 0.0;
  double hi = 1.0;

  Universe() = default;
  Universe(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw Error(ErrorCode::InvalidInterval,
                  fmt::format("universe requires finite lo < hi, got [{}, {})", lo, hi));
    }
  }

  double width() const noexcept { return hi - lo; }
  bool contains(double omega) const noexcept { return lo <= omega && omega < hi; }

  friend bool operator==(const Universe&, const Universe&) = default;
};

/// Half-open [lo, hi). Stored intervals are never empty.
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

class Region;
Region normalize(std::span<const Interval> intervals, const Universe& u);

/// Canonical union of disjoint, non-adjacent intervals sorted by lo.
class Region {
 public:
  explicit Region(Universe u) : universe_(u) {}

  static Region empty(const Universe& u) { return Region(u); }
  static Region full(const Universe& u) { return Region(u, {Interval{u.lo, u.hi}}); }
  static Region interval(double lo, double hi, const Universe& u) {
    const Interval one{lo, hi};
    return normalize(std::span<const Interval>(&one, 1), u);
  }

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Interval>& parts() const noexcept { return parts_; }
  bool is_empty() const noexcept { return parts_.empty(); }

  /// Lebesgue measure of the region.
  double measure() const noexcept {
    double total = 0.0;
    for (const auto& p : parts_) total += p.length();
    return total;
  }

  bool contains(double omega) const noexcept {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), omega,
                               [](double w, const Interval& p) { return w < p.lo; });
    if (it == parts_.begin()) return false;
    --it;
    return omega < it->hi;
  }

  /// Structural check of the canonical-form invariants.
  bool is_canonical() const noexcept {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const auto& p = parts_[i];
      if (!(p.lo < p.hi) || p.lo < universe_.lo || p.hi > universe_.hi) return false;
      if (i + 1 < parts_.size() && !(p.hi < parts_[i + 1].lo)) return false;
    }
    return true;
  }

  std::string to_string() const {
    if (parts_.empty()) return "{}";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += " u ";
      out += fmt::format("[{}, {})", parts_[i].lo, parts_[i].hi);
    }
    return out;
  }

  friend bool operator==(const Region&, const Region&) = default;

 private:
  friend Region normalize(std::span<const Interval>, const Universe&);
  template <typename Pred>
  friend Region combine(const Region&, const Region&, Pred);

  Region(Universe u, std::vector<Interval> parts) : universe_(u), parts_(std::move(parts)) {}

  Universe universe_;
  std::vector<Interval> parts_;
};

/// Union of the inputs clipped to the universe. Zero-length pairs contribute
/// nothing; a pair lying entirely outside the universe is an error.
inline Region normalize(std::span<const Interval> intervals, const Universe& u) {
  std::vector<Interval> kept;
  kept.reserve(intervals.size());
  for (const auto& iv : intervals) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
      throw Error(ErrorCode::InvalidInterval, "non-finite interval endpoint");
    }
    if (iv.lo > iv.hi) {
      throw Error(ErrorCode::InvalidInterval,
                  fmt::format("interval [{}, {}) has lo > hi", iv.lo, iv.hi));
    }
    if (iv.lo == iv.hi) continue;
    if (iv.hi <= u.lo || iv.lo >= u.hi) {
      throw Error(ErrorCode::OutOfUniverse, fmt::format("interval [{}, {}) lies outside [{}, {})",
                                                        iv.lo, iv.hi, u.lo, u.hi));
    }
    kept.push_back({std::max(iv.lo, u.lo), std::min(iv.hi, u.hi)});
  }
  std::sort(kept.begin(), kept.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  std::vector<Interval> parts;
  for (const auto& iv : kept) {
    if (!parts.empty() && iv.lo <= parts.back().hi) {
      parts.back().hi = std::max(parts.back().hi, iv.hi);
    } else {
      parts.push_back(iv);
    }
  }
  return Region(u, std::move(parts));
}

inline Region normalize(std::initializer_list<Interval> intervals, const Universe& u) {
  return normalize(std::span<const Interval>(intervals.begin(), intervals.size()), u);
}

namespace detail {

inline void require_same_universe(const Region& a, const Region& b) {
  if (!(a.universe() == b.universe())) {
    throw Error(ErrorCode::UniverseMismatch,
                fmt::format("[{}, {}) vs [{}, {})", a.universe().lo, a.universe().hi,
                            b.universe().lo, b.universe().hi));
  }
}

}  // namespace detail

/// Generic boolean combination: sweep the merged endpoint list and keep each
/// elementary segment whose membership pair satisfies pred(in_a, in_b).
template <typename Pred>
Region combine(const Region& a, const Region& b, Pred pred) {
  detail::require_same_universe(a, b);
  const Universe& u = a.universe();

  std::vector<double> cuts{u.lo, u.hi};
  cuts.reserve(2 + 2 * (a.parts().size() + b.parts().size()));
  for (const auto& p : a.parts()) cuts.insert(cuts.end(), {p.lo, p.hi});
  for (const auto& p : b.parts()) cuts.insert(cuts.end(), {p.lo, p.hi});
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> parts;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double x = cuts[i];
    if (!pred(a.contains(x), b.contains(x))) continue;
    if (!parts.empty() && parts.back().hi == x) {
      parts.back().hi = cuts[i + 1];
    } else {
      parts.push_back({x, cuts[i + 1]});
    }
  }
  return Region(u, std::move(parts));
}

inline Region unite(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

inline Region intersect(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

inline Region difference(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

inline Region symdiff(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

inline Region complement(const Region& a, const Universe& u) {
  return difference(Region::full(u), a);
}

inline Region complement(const Region& a) { return complement(a, a.universe()); }

/// Sorted distinct endpoints of all parts plus the universe endpoints.
inline std::vector<double> breakpoints(std::span<const Region> regions, const Universe& u) {
  std::vector<double> out{u.lo, u.hi};
  for (const auto& r : regions) {
    if (!(r.universe() == u)) {
      throw Error(ErrorCode::UniverseMismatch, "breakpoints over regions of another universe");
    }
    for (const auto& p : r.parts()) out.insert(out.end(), {p.lo, p.hi});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace eventling
