#pragma once

// Brute-force reference models used by the tests. None of this goes through
// the region algebra or the membership sweep: sets are bit vectors over unit
// cells and membership is a direct count over the raw judgment intervals.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eventling/eventology.hpp"
#include "eventling/region.hpp"

namespace eventling::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng);
}

/// Cell k stands for [k, k+1) in an integer universe [0, n).
using Bits = std::vector<bool>;

struct RawInterval {
  int lo;
  int hi;
};

inline Bits bits_of(const std::vector<RawInterval>& raw, int n) {
  Bits b(static_cast<std::size_t>(n), false);
  for (const auto& iv : raw) {
    for (int k = iv.lo; k < iv.hi; ++k) b[static_cast<std::size_t>(k)] = true;
  }
  return b;
}

/// Reads a region back into cells straight from its parts.
inline Bits bits_of(const Region& r, int n) {
  Bits b(static_cast<std::size_t>(n), false);
  for (const auto& p : r.parts()) {
    for (int k = static_cast<int>(p.lo); k < static_cast<int>(p.hi); ++k) {
      b[static_cast<std::size_t>(k)] = true;
    }
  }
  return b;
}

template <typename F>
Bits zip(const Bits& a, const Bits& b, F f) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f(a[i], b[i]);
  return out;
}

inline std::vector<RawInterval> random_raw(Rng& rng, int n, int max_parts) {
  std::vector<RawInterval> out;
  const int parts = uniform(rng, 0, max_parts);
  for (int i = 0; i < parts; ++i) {
    int a = uniform(rng, 0, n);
    int b = uniform(rng, 0, n);
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  return out;
}

inline Region to_region(const std::vector<RawInterval>& raw, const Universe& u) {
  std::vector<Interval> ivs;
  for (const auto& r : raw) ivs.push_back({static_cast<double>(r.lo), static_cast<double>(r.hi)});
  return normalize(ivs, u);
}

/// A random matrix with the raw judgments it was built from.
struct RandomMatrix {
  int n = 100;
  std::vector<std::string> names;
  std::vector<SubjectId> subjects;
  /// raw[name][subject] = the for-intervals as drawn
  std::vector<std::vector<std::vector<RawInterval>>> raw;
  SelectionMatrix matrix;
};

inline RandomMatrix random_matrix(Rng& rng, int max_subjects = 100, int max_names = 8,
                                  int n = 100) {
  const Universe u(0, n);
  const int n_subjects = uniform(rng, 1, max_subjects);
  const int n_names = uniform(rng, 1, max_names);
  std::vector<std::string> names;
  for (int i = 0; i < n_names; ++i) names.push_back("x" + std::to_string(i));
  std::vector<SubjectId> subjects;
  for (int i = 0; i < n_subjects; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "m%03d", i);
    subjects.emplace_back(buf);
  }
  std::vector<std::vector<std::vector<RawInterval>>> raw(
      names.size(), std::vector<std::vector<RawInterval>>(subjects.size()));
  std::vector<Judgment> judgments;
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t s = 0; s < subjects.size(); ++s) {
      raw[x][s] = random_raw(rng, n, 3);
      for (const auto& iv : raw[x][s]) {
        judgments.push_back(
            {subjects[s], names[x], Region::interval(iv.lo, iv.hi, u), Polarity::For});
      }
    }
  }
  auto m = build_matrix(judgments, u, subjects, names);
  return RandomMatrix{n, std::move(names), std::move(subjects), std::move(raw), std::move(m)};
}

/// Number of subjects whose raw intervals for `name_index` cover omega.
inline std::int64_t raw_count(const RandomMatrix& rm, std::size_t name_index, double omega) {
  std::int64_t count = 0;
  for (const auto& intervals : rm.raw[name_index]) {
    for (const auto& iv : intervals) {
      if (iv.lo <= omega && omega < iv.hi) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline bool raw_covers(const std::vector<RawInterval>& intervals, double omega) {
  for (const auto& iv : intervals) {
    if (iv.lo <= omega && omega < iv.hi) return true;
  }
  return false;
}

/// Every integer point and every half-integer point of [0, n).
inline std::vector<double> integer_probes(int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(k);
    out.push_back(k + 0.5);
  }
  return out;
}

}  // namespace eventling::testing
