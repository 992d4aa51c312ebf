#pragma once

// Vague events built from per-subject interval judgments.
//
// Every reasonable subject assigns a region of the universe to every name.
// The rows of that (name x subject) matrix are vague events; the membership
// function of a vague event is the fraction of subjects whose region covers
// a point. Set operations on vague events act subject by subject before the
// averaging, so the combined membership carries the dependence structure of
// the subjects' judgments rather than a fixed t-norm.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "eventling/error.hpp"
#include "eventling/fraction.hpp"
#include "eventling/region.hpp"
#include "eventling/step_function.hpp"
#include "eventling/tnorm.hpp"
#include "eventling/vague.hpp"

namespace eventling {

class SubjectId {
 public:
  explicit SubjectId(std::string id) : id_(std::move(id)) {
    if (id_.empty()) throw Error(ErrorCode::MalformedRow, "subject identifier must be non-empty");
  }
  const std::string& str() const noexcept { return id_; }
  friend auto operator<=>(const SubjectId&, const SubjectId&) = default;

 private:
  std::string id_;
};

enum class Polarity { For, Against };

constexpr std::string_view to_string(Polarity p) noexcept {
  return p == Polarity::For ? "for" : "against";
}

struct Judgment {
  SubjectId subject;
  std::string name;
  Region region;
  Polarity polarity = Polarity::For;
};

using MembershipCurve = StepFunction<Fraction>;

inline RealCurve to_real(const MembershipCurve& c) {
  return c.map([](const Fraction& v) { return v.to_double(); });
}

/// One row of the selection matrix: a region per subject, aligned with the
/// subject order.
class VagueEvent {
 public:
  VagueEvent(std::string name, Universe u, std::vector<SubjectId> subjects,
             std::vector<Region> regions)
      : name_(std::move(name)),
        universe_(u),
        subjects_(std::move(subjects)),
        regions_(std::move(regions)) {
    if (subjects_.size() != regions_.size()) {
      throw Error(ErrorCode::PopulationMismatch, "one region per subject required");
    }
    for (const auto& r : regions_) {
      if (!(r.universe() == universe_)) {
        throw Error(ErrorCode::UniverseMismatch, "region of event '" + name_ + "'");
      }
    }
  }

  const std::string& name() const noexcept { return name_; }
  const Universe& universe() const noexcept { return universe_; }
  const std::vector<SubjectId>& subjects() const noexcept { return subjects_; }
  const std::vector<Region>& regions() const noexcept { return regions_; }
  std::size_t population() const noexcept { return subjects_.size(); }

  /// Same events per subject; the name is only a label.
  bool same_regions(const VagueEvent& other) const {
    return universe_ == other.universe_ && subjects_ == other.subjects_ &&
           regions_ == other.regions_;
  }

 private:
  std::string name_;
  Universe universe_;
  std::vector<SubjectId> subjects_;
  std::vector<Region> regions_;
};

/// Names x subjects -> region, for both polarities. Subjects and names are
/// kept in lexicographic order.
class SelectionMatrix {
 public:
  struct Row {
    std::vector<Region> for_regions;
    std::vector<Region> against_regions;
  };

  SelectionMatrix(Universe u, std::vector<SubjectId> subjects, std::map<std::string, Row> rows)
      : universe_(u), subjects_(std::move(subjects)), rows_(std::move(rows)) {
    for (const auto& [name, row] : rows_) names_.push_back(name);
  }

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<SubjectId>& subjects() const noexcept { return subjects_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_name(const std::string& name) const { return rows_.count(name) != 0; }

  const Row& row(const std::string& name) const {
    auto it = rows_.find(name);
    if (it == rows_.end()) throw Error(ErrorCode::UnknownAtom, "'" + name + "'");
    return it->second;
  }

  const Region& cell(const std::string& name, std::size_t subject, Polarity p) const {
    const Row& r = row(name);
    return p == Polarity::For ? r.for_regions.at(subject) : r.against_regions.at(subject);
  }

  /// The vague event of a name: its for-regions across all subjects.
  VagueEvent event(const std::string& name) const {
    return VagueEvent(name, universe_, subjects_, row(name).for_regions);
  }

 private:
  Universe universe_;
  std::vector<SubjectId> subjects_;
  std::vector<std::string> names_;
  std::map<std::string, Row> rows_;
};

namespace detail {

inline Region rehome(const Region& r, const Universe& u) {
  if (r.universe() == u) return r;
  for (const auto& p : r.parts()) {
    if (p.lo < u.lo || p.hi > u.hi) {
      throw Error(ErrorCode::OutOfUniverse,
                  fmt::format("judgment region {} not inside [{}, {})", r.to_string(), u.lo, u.hi));
    }
  }
  return normalize(r.parts(), u);
}

}  // namespace detail

/// Builds the selection matrix. Repeated judgments of one (name, subject,
/// polarity) are unioned; absent cells become empty regions. Declared subjects
/// and names are included even if they never appear in a judgment.
inline SelectionMatrix build_matrix(std::span<const Judgment> judgments, const Universe& u,
                                    std::span<const SubjectId> declared_subjects = {},
                                    std::span<const std::string> declared_names = {}) {
  std::vector<SubjectId> subjects(declared_subjects.begin(), declared_subjects.end());
  std::vector<std::string> names(declared_names.begin(), declared_names.end());
  for (const auto& j : judgments) {
    subjects.push_back(j.subject);
    names.push_back(j.name);
  }
  std::sort(subjects.begin(), subjects.end());
  subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  std::map<std::string, SelectionMatrix::Row> rows;
  for (const auto& name : names) {
    if (name.empty()) throw Error(ErrorCode::MalformedRow, "atom name must be non-empty");
    rows.emplace(name, SelectionMatrix::Row{std::vector<Region>(subjects.size(), Region(u)),
                                            std::vector<Region>(subjects.size(), Region(u))});
  }

  for (const auto& j : judgments) {
    const auto idx = static_cast<std::size_t>(
        std::lower_bound(subjects.begin(), subjects.end(), j.subject) - subjects.begin());
    auto& row = rows.at(j.name);
    auto& cell = j.polarity == Polarity::For ? row.for_regions[idx] : row.against_regions[idx];
    cell = unite(cell, detail::rehome(j.region, u));
  }

  for (const auto& [name, row] : rows) {
    for (std::size_t i = 0; i < subjects.size(); ++i) {
      const Region overlap = intersect(row.for_regions[i], row.against_regions[i]);
      if (!overlap.is_empty()) {
        throw Error(ErrorCode::ContradictoryJudgment,
                    fmt::format("subject '{}' judges '{}' both for and against on {}",
                                subjects[i].str(), name, overlap.to_string()));
      }
    }
  }
  return SelectionMatrix(u, std::move(subjects), std::move(rows));
}

namespace detail {

/// Counting sweep: at every point, how many of the regions contain it.
inline std::vector<std::pair<double, std::int64_t>> coverage_steps(std::span<const Region> regions,
                                                                    const Universe& u) {
  std::vector<std::pair<double, int>> deltas;
  for (const auto& r : regions) {
    for (const auto& p : r.parts()) {
      deltas.emplace_back(p.lo, +1);
      deltas.emplace_back(p.hi, -1);
    }
  }
  std::sort(deltas.begin(), deltas.end());

  // (start of piece, count on the piece), starting at u.lo
  std::vector<std::pair<double, std::int64_t>> steps{{u.lo, 0}};
  std::int64_t count = 0;
  std::size_t i = 0;
  while (i < deltas.size()) {
    const double x = deltas[i].first;
    while (i < deltas.size() && deltas[i].first == x) count += deltas[i++].second;
    if (x >= u.hi) break;
    if (steps.back().first == x) {
      steps.back().second = count;
    } else if (steps.back().second != count) {
      steps.emplace_back(x, count);
    }
  }
  return steps;
}

}  // namespace detail

/// Fraction of subjects whose region contains each point, as an exact
/// piecewise-constant curve with denominator |M|.
inline MembershipCurve membership(const VagueEvent& e) {
  if (e.population() == 0) {
    throw Error(ErrorCode::EmptyPopulation, "vague event '" + e.name() + "' has no subjects");
  }
  const auto m = static_cast<std::int64_t>(e.population());
  const auto steps = detail::coverage_steps(e.regions(), e.universe());
  std::vector<double> bps;
  std::vector<Fraction> values;
  for (const auto& [x, count] : steps) {
    if (!values.empty() && values.back().num() == count) continue;
    bps.push_back(x);
    values.emplace_back(count, m);
  }
  bps.push_back(e.universe().hi);
  return MembershipCurve(e.universe(), std::move(bps), std::move(values));
}

enum class MinkOp { And, Or, Not, SymDiff };

constexpr std::string_view to_string(MinkOp op) noexcept {
  switch (op) {
    case MinkOp::And: return "and";
    case MinkOp::Or: return "or";
    case MinkOp::Not: return "not";
    case MinkOp::SymDiff: return "xor";
  }
  return "?";
}

/// Set operation applied subject by subject: (a op b)_mu = a_mu op b_mu.
inline VagueEvent mink_combine(MinkOp op, const VagueEvent& a,
                               const std::optional<VagueEvent>& b = std::nullopt) {
  std::vector<Region> out;
  out.reserve(a.population());
  if (op == MinkOp::Not) {
    if (b) throw Error(ErrorCode::PopulationMismatch, "'not' takes a single operand");
    for (const auto& r : a.regions()) out.push_back(complement(r, a.universe()));
    return VagueEvent("(not " + a.name() + ")", a.universe(), a.subjects(), std::move(out));
  }
  if (!b) throw Error(ErrorCode::PopulationMismatch, "binary operation needs two operands");
  if (a.subjects() != b->subjects()) {
    throw Error(ErrorCode::PopulationMismatch,
                "events '" + a.name() + "' and '" + b->name() + "' have different subjects");
  }
  if (!(a.universe() == b->universe())) {
    throw Error(ErrorCode::UniverseMismatch, "events over different universes");
  }
  for (std::size_t i = 0; i < a.population(); ++i) {
    const Region& x = a.regions()[i];
    const Region& y = b->regions()[i];
    switch (op) {
      case MinkOp::And: out.push_back(intersect(x, y)); break;
      case MinkOp::Or: out.push_back(unite(x, y)); break;
      case MinkOp::SymDiff: out.push_back(symdiff(x, y)); break;
      case MinkOp::Not: break;
    }
  }
  return VagueEvent(fmt::format("({} {} {})", a.name(), to_string(op), b->name()), a.universe(),
                    a.subjects(), std::move(out));
}

/// t = share of subjects judging "for" at a point, f = share judging
/// "against". Disjointness of each subject's two regions gives t + f <= 1.
inline VagueCurve derive_vague_curve(const SelectionMatrix& m, const std::string& name) {
  const auto& row = m.row(name);
  if (m.subjects().empty()) {
    throw Error(ErrorCode::EmptyPopulation, "matrix has no subjects");
  }
  const auto pop = static_cast<std::int64_t>(m.subjects().size());
  const Universe& u = m.universe();
  const auto t = membership(VagueEvent(name, u, m.subjects(), row.for_regions));
  const auto f = membership(VagueEvent(name, u, m.subjects(), row.against_regions));
  return lift(t, f, [pop](const Fraction& x, const Fraction& y) {
    if (x.num() + y.num() > pop) {
      throw Error(ErrorCode::ConstraintViolation, "for and against shares exceed the population");
    }
    return VagueValue::from_computed(x.to_double(), y.to_double());
  });
}

}  // namespace eventling
