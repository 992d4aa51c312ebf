#pragma once

// Judgment datasets (CSV), the flat key = value configuration file, and the
// synthetic age-experiment generator.
//
// Dataset format:
//
//   # comment lines start with '#'
//   subject,name,lo,hi[,polarity]
//   s001,young_man,12,35,for
//
// Each row is one judgment [lo, hi) of one subject about one name. The
// polarity column is optional and defaults to "for".

#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "eventling/error.hpp"
#include "eventling/eventology.hpp"
#include "eventling/region.hpp"
#include "eventling/syntagma.hpp"
#include "eventling/vague.hpp"

namespace eventling {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::optional<double> parse_real(std::string_view s) {
  double v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) return std::nullopt;
  return v;
}

[[noreturn]] inline void row_error(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, fmt::format("line {}: {}", line, what));
}

}  // namespace detail

struct Dataset {
  Universe universe;
  std::vector<Judgment> judgments;
  /// Source line of every judgment, for diagnostics.
  std::vector<std::size_t> lines;

  std::vector<SubjectId> subjects() const {
    std::set<SubjectId> s;
    for (const auto& j : judgments) s.insert(j.subject);
    return {s.begin(), s.end()};
  }

  std::vector<std::string> names() const {
    std::set<std::string> s;
    for (const auto& j : judgments) s.insert(j.name);
    return {s.begin(), s.end()};
  }

  SelectionMatrix matrix() const { return build_matrix(judgments, universe); }
};

/// Reads a judgment dataset. Every endpoint must lie inside the universe;
/// lo == hi is an explicit empty judgment.
inline Dataset read_dataset(std::istream& in, const Universe& u) {
  Dataset ds{u, {}, {}};
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  bool has_polarity = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = detail::split_fields(line);

    if (!have_header) {
      const bool four = fields.size() == 4;
      const bool five = fields.size() == 5 && fields[4] == "polarity";
      if (!(four || five) || fields[0] != "subject" || fields[1] != "name" || fields[2] != "lo" ||
          fields[3] != "hi") {
        detail::row_error(ErrorCode::MalformedRow, line_no,
                          "expected header 'subject,name,lo,hi[,polarity]'");
      }
      have_header = true;
      has_polarity = five;
      continue;
    }

    const std::size_t expected = has_polarity ? 5 : 4;
    if (fields.size() != expected) {
      detail::row_error(ErrorCode::MalformedRow, line_no,
                        fmt::format("expected {} fields, found {}", expected, fields.size()));
    }
    if (fields[0].empty()) detail::row_error(ErrorCode::MalformedRow, line_no, "empty subject");
    if (!is_atom_name(fields[1])) {
      detail::row_error(ErrorCode::MalformedRow, line_no,
                        fmt::format("name '{}' is not a valid atom identifier", fields[1]));
    }
    const auto lo = detail::parse_real(fields[2]);
    const auto hi = detail::parse_real(fields[3]);
    if (!lo || !hi || !std::isfinite(*lo) || !std::isfinite(*hi)) {
      detail::row_error(ErrorCode::MalformedRow, line_no, "endpoints must be finite decimals");
    }
    if (*lo > *hi) {
      detail::row_error(ErrorCode::MalformedRow, line_no,
                        fmt::format("lo {} greater than hi {}", *lo, *hi));
    }
    if (*lo < u.lo || *hi > u.hi) {
      detail::row_error(ErrorCode::OutOfUniverse, line_no,
                        fmt::format("[{}, {}) not inside [{}, {})", *lo, *hi, u.lo, u.hi));
    }
    Polarity polarity = Polarity::For;
    if (has_polarity && !fields[4].empty()) {
      if (fields[4] == "against") {
        polarity = Polarity::Against;
      } else if (fields[4] != "for") {
        detail::row_error(ErrorCode::MalformedRow, line_no,
                          fmt::format("polarity must be 'for' or 'against', found '{}'", fields[4]));
      }
    }
    ds.judgments.push_back(Judgment{SubjectId(std::string(fields[0])), std::string(fields[1]),
                                    Region::interval(*lo, *hi, u), polarity});
    ds.lines.push_back(line_no);
  }
  if (!have_header) detail::row_error(ErrorCode::MalformedRow, line_no, "missing header");
  return ds;
}

struct SvgLayout {
  int width = 800;
  int height = 480;
  int margin = 60;
};

struct Config {
  Universe universe{0.0, 80.0};
  HedgeExponents hedges;
  double step = 1.0;
  int precision = 6;
  SvgLayout svg;
};

/// Flat `key = value` lines; '#' starts a comment line. Keys: universe_lo,
/// universe_hi, very, more_or_less, essentially, step, precision, svg_width,
/// svg_height, svg_margin.
inline Config read_config(std::istream& in, Config cfg = {}) {
  std::string raw;
  std::size_t line_no = 0;
  double lo = cfg.universe.lo;
  double hi = cfg.universe.hi;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      detail::row_error(ErrorCode::ConfigError, line_no, "expected 'key = value'");
    }
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::parse_real(detail::trim(line.substr(eq + 1)));
    if (!value) detail::row_error(ErrorCode::ConfigError, line_no, "value must be a number");
    const double v = *value;

    if (key == "universe_lo") lo = v;
    else if (key == "universe_hi") hi = v;
    else if (key == "very") cfg.hedges.very = v;
    else if (key == "more_or_less") cfg.hedges.more_or_less = v;
    else if (key == "essentially") cfg.hedges.essentially = v;
    else if (key == "step") cfg.step = v;
    else if (key == "precision") cfg.precision = static_cast<int>(v);
    else if (key == "svg_width") cfg.svg.width = static_cast<int>(v);
    else if (key == "svg_height") cfg.svg.height = static_cast<int>(v);
    else if (key == "svg_margin") cfg.svg.margin = static_cast<int>(v);
    else detail::row_error(ErrorCode::ConfigError, line_no, fmt::format("unknown key '{}'", key));
  }
  try {
    cfg.universe = Universe(lo, hi);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigError, e.what());
  }
  return cfg;
}

inline void validate(const Config& cfg) {
  const auto& h = cfg.hedges;
  for (double e : {h.very, h.more_or_less, h.essentially}) {
    if (!(e > 0) || !std::isfinite(e)) {
      throw Error(ErrorCode::ConfigError, fmt::format("hedge exponent must be > 0, got {}", e));
    }
  }
  if (!(cfg.step > 0) || !std::isfinite(cfg.step)) {
    throw Error(ErrorCode::ConfigError, fmt::format("step must be > 0, got {}", cfg.step));
  }
  if (cfg.precision < 1) throw Error(ErrorCode::ConfigError, "precision must be >= 1");
  if (cfg.svg.width <= 2 * cfg.svg.margin || cfg.svg.height <= 2 * cfg.svg.margin) {
    throw Error(ErrorCode::ConfigError, "svg dimensions must exceed twice the margin");
  }
}

// ---------------------------------------------------------------------------
// Synthetic age experiment

/// Endpoint ranges of the synthetic population, in years over [0, 80).
/// young_man:   lo uniform in [0, 18], hi uniform in [22, 45]
/// young_woman: the same subject's young_man endpoints shifted by up to
///              +-3 years (lo) and +-5 years (hi), clamped to those ranges.
/// Every lo range sits below every hi range, so each membership curve rises
/// then falls.
struct ExampleRanges {
  int lo_min = 0, lo_max = 18;
  int hi_min = 22, hi_max = 45;
  int lo_jitter = 3, hi_jitter = 5;
};

namespace detail {

/// Portable uniform integer in [a, b]: mt19937_64 output is fully specified,
/// the standard distributions are not.
inline int draw(std::mt19937_64& rng, int a, int b) {
  const auto span = static_cast<std::uint64_t>(b - a + 1);
  return a + static_cast<int>(rng() % span);
}

}  // namespace detail

inline void write_example(std::ostream& out, std::uint64_t seed, int subjects,
                          const ExampleRanges& r = {}) {
  if (subjects <= 0) {
    throw Error(ErrorCode::EmptyPopulation, fmt::format("subject count must be >= 1, got {}", subjects));
  }
  std::mt19937_64 rng(seed);
  const int width = std::max(3, static_cast<int>(std::to_string(subjects).size()));
  out << fmt::format("# synthetic age experiment: seed={} subjects={} universe=[0,80)\n", seed,
                     subjects);
  out << "subject,name,lo,hi\n";
  for (int i = 1; i <= subjects; ++i) {
    const std::string id = fmt::format("s{:0{}}", i, width);
    const int man_lo = detail::draw(rng, r.lo_min, r.lo_max);
    const int man_hi = detail::draw(rng, r.hi_min, r.hi_max);
    const int woman_lo =
        std::clamp(man_lo + detail::draw(rng, -r.lo_jitter, r.lo_jitter), r.lo_min, r.lo_max);
    const int woman_hi =
        std::clamp(man_hi + detail::draw(rng, -r.hi_jitter, r.hi_jitter), r.hi_min, r.hi_max);
    out << fmt::format("{},young_man,{},{}\n", id, man_lo, man_hi);
    out << fmt::format("{},young_woman,{},{}\n", id, woman_lo, woman_hi);
  }
}

}  // namespace eventling
