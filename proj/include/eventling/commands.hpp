#pragma once

// Implementation of the command-line subcommands. Each command writes its
// result to `out`, diagnostics to `err`, and returns the process exit code:
//
//   0  success
//   1  usage, configuration or expression error
//   2  data validation error
//   3  internal invariant violation

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "eventling/dataset.hpp"
#include "eventling/eventology.hpp"
#include "eventling/svg.hpp"
#include "eventling/syntagma.hpp"
#include "eventling/tnorm.hpp"

namespace eventling::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

inline int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::LexError:
    case ErrorCode::ParseError:
    case ErrorCode::UnknownAtom:
    case ErrorCode::UnsupportedComparison:
    case ErrorCode::UnsupportedHedgePlacement:
    case ErrorCode::ConfigError:
    case ErrorCode::InvalidHedge:
      return kUsage;
    case ErrorCode::MalformedRow:
    case ErrorCode::OutOfUniverse:
    case ErrorCode::InvalidInterval:
    case ErrorCode::ContradictoryJudgment:
    case ErrorCode::EmptyPopulation:
    case ErrorCode::PopulationMismatch:
    case ErrorCode::UniverseMismatch:
    case ErrorCode::IoError:
      return kData;
    case ErrorCode::ConstraintViolation:
    case ErrorCode::RangeError:
      return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string dataset;
  std::string expr;
  std::string semantics = "event";
  std::optional<double> step;
  std::string format = "csv";
  std::string config;
  std::uint64_t seed = 1;
  int subjects = 71;
  std::string out;
  std::optional<double> lo;
  std::optional<double> hi;
};

/// Defaults, then the config file, then command-line overrides.
inline Config resolve_config(const Options& o) {
  Config cfg;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot open config file '" + o.config + "'");
    cfg = read_config(in);
  }
  if (o.lo || o.hi) {
    try {
      cfg.universe = Universe(o.lo.value_or(cfg.universe.lo), o.hi.value_or(cfg.universe.hi));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
  }
  if (o.step) cfg.step = *o.step;
  validate(cfg);
  return cfg;
}

inline Dataset load_dataset(const std::string& path, const Universe& u) {
  if (path.empty()) throw Error(ErrorCode::ConfigError, "--dataset is required");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open dataset '" + path + "'");
  return read_dataset(in, u);
}

namespace detail {

/// Fixed precision with trailing zeros removed: 12.500000 -> 12.5, 3.000 -> 3.
inline std::string format_coord(double v, int precision) {
  std::string s = fmt::format("{:.{}f}", v, precision);
  if (s.find('.') != std::string::npos) {
    s.erase(s.find_last_not_of('0') + 1);
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

inline std::string format_value(double v, int precision) { return fmt::format("{:.{}f}", v, precision); }

/// Writes to --out when given, otherwise to the command's output stream.
inline void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot write '" + o.out + "'");
  file << text;
}

inline double max_abs_deviation(const RealCurve& a, const RealCurve& b) {
  double worst = 0.0;
  const auto diff = lift(a, b, [](double x, double y) { return std::abs(x - y); });
  for (double d : diff.values()) {
    worst = std::max(worst, d);
  }
  return worst;
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace detail

/// Summary of a dataset, or the first violation found in it.
inline int run_validate(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Config cfg = resolve_config(o);
    const Dataset ds = load_dataset(o.dataset, cfg.universe);
    const SelectionMatrix m = ds.matrix();

    std::ostringstream text;
    text << fmt::format("subjects={} names={} judgments={}\n", m.subjects().size(),
                        m.names().size(), ds.judgments.size());
    for (const auto& name : m.names()) {
      std::size_t n_for = 0;
      std::size_t n_against = 0;
      for (const auto& j : ds.judgments) {
        if (j.name != name) continue;
        (j.polarity == Polarity::For ? n_for : n_against)++;
      }
      const auto& row = m.row(name);
      std::size_t covering = 0;
      Region covered(m.universe());
      for (const auto& r : row.for_regions) {
        if (!r.is_empty()) ++covering;
        covered = unite(covered, r);
      }
      text << fmt::format(
          "name={} for={} against={} subjects_covering={} covered_measure={}\n", name, n_for,
          n_against, covering, detail::format_coord(covered.measure(), cfg.precision));
    }
    detail::emit(o, out, text.str());
    return int{kOk};
  });
}

/// Evaluates an expression under one semantics and emits CSV or SVG.
inline int run_eval(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Config cfg = resolve_config(o);
    if (o.expr.empty()) throw Error(ErrorCode::ConfigError, "--expr is required");
    if (o.format != "csv" && o.format != "svg") {
      throw Error(ErrorCode::ConfigError, "--format must be csv or svg");
    }
    const auto expr = parse(o.expr);
    const Dataset ds = load_dataset(o.dataset, cfg.universe);
    const SelectionMatrix m = ds.matrix();
    const int prec = cfg.precision;
    const auto grid = sample_grid(m.universe(), cfg.step);
    const std::string title = to_text(*expr);

    std::ostringstream text;
    if (o.semantics == "event") {
      const EventCurve curve = eval_event(*expr, m, cfg.hedges);
      const RealCurve real = curve.real();
      if (o.format == "svg") {
        text << render_step_plot({{title + " (event)", real, default_palette()[0]}}, m.universe(),
                                 cfg.svg, title);
      } else {
        text << "omega,value,value_exact\n";
        for (double w : grid) {
          text << detail::format_coord(w, prec) << ',' << detail::format_value(real.at(w), prec)
               << ',' << (curve.is_exact() ? curve.exact().at(w).to_string() : "") << '\n';
        }
      }
    } else if (o.semantics == "vague") {
      VagueBindings bindings;
      std::vector<std::string> atoms;
      collect_atoms(*expr, atoms);
      for (const auto& a : atoms) {
        if (!m.has_name(a)) throw Error(ErrorCode::UnknownAtom, "'" + a + "'");
        bindings.emplace(a, derive_vague_curve(m, a));
      }
      const VagueCurve curve = eval_vague(*expr, bindings, cfg.hedges);
      if (o.format == "svg") {
        const auto& pal = default_palette();
        text << render_step_plot(
            {{"t (lower)", curve.map([](const VagueValue& v) { return v.t(); }), pal[0]},
             {"1 - f (upper)", curve.map([](const VagueValue& v) { return 1.0 - v.f(); }), pal[1],
              true}},
            m.universe(), cfg.svg, title + " (vague)");
      } else {
        text << "omega,t,f,lower,upper\n";
        for (double w : grid) {
          const VagueValue& v = curve.at(w);
          const VagueSpan s = v.span();
          text << fmt::format("{},{},{},{},{}\n", detail::format_coord(w, prec),
                              detail::format_value(v.t(), prec), detail::format_value(v.f(), prec),
                              detail::format_value(s.lower, prec),
                              detail::format_value(s.upper, prec));
        }
      }
    } else if (o.semantics.rfind("tnorm:", 0) == 0) {
      const auto kind = parse_tnorm(o.semantics.substr(6));
      if (!kind) {
        throw Error(ErrorCode::ConfigError, "unknown t-norm '" + o.semantics.substr(6) +
                                                "' (expected min, prod or luk)");
      }
      RealBindings bindings;
      std::vector<std::string> atoms;
      collect_atoms(*expr, atoms);
      for (const auto& a : atoms) {
        if (!m.has_name(a)) throw Error(ErrorCode::UnknownAtom, "'" + a + "'");
        bindings.emplace(a, to_real(membership(m.event(a))));
      }
      const RealCurve curve = eval_tnorm(*expr, *kind, bindings, cfg.hedges);
      if (o.format == "svg") {
        text << render_step_plot({{title + " (t-norm " + std::string(short_name(*kind)) + ")",
                                   curve, default_palette()[0]}},
                                 m.universe(), cfg.svg, title);
      } else {
        text << "omega,value\n";
        for (double w : grid) {
          text << detail::format_coord(w, prec) << ',' << detail::format_value(curve.at(w), prec)
               << '\n';
        }
      }
    } else {
      throw Error(ErrorCode::ConfigError,
                  "--semantics must be event, vague, tnorm:min, tnorm:prod or tnorm:luk");
    }
    detail::emit(o, out, text.str());
    return int{kOk};
  });
}

/// Result of comparing the per-subject combination of two atoms against the
/// three t-norms (or their conorms for "or").
struct Comparison {
  MinkOp op;
  MembershipCurve p;
  MembershipCurve q;
  MembershipCurve minkowski;
  RealCurve t_min;
  RealCurve t_prod;
  RealCurve t_luk;

  /// Frechet envelope check at a point, in exact arithmetic.
  bool frechet_ok(double omega) const {
    const Fraction a = p.at(omega);
    const Fraction b = q.at(omega);
    const Fraction k = minkowski.at(omega);
    const Fraction zero(0, a.den());
    const Fraction one(a.den(), a.den());
    const Fraction sum = a + b;
    if (op == MinkOp::And) {
      const Fraction lower = std::max(sum - one, zero);
      return lower <= k && k <= std::min(a, b);
    }
    return std::max(a, b) <= k && k <= std::min(sum, one);
  }
};

inline Comparison compare_atoms(const Expr& e, const SelectionMatrix& m) {
  const bool binary_of_atoms = (e.kind() == Expr::Kind::And || e.kind() == Expr::Kind::Or) &&
                               e.lhs().kind() == Expr::Kind::Atom &&
                               e.rhs().kind() == Expr::Kind::Atom;
  if (!binary_of_atoms || e.lhs().name() == e.rhs().name()) {
    throw Error(ErrorCode::UnsupportedComparison,
                "compare needs 'x and y' or 'x or y' with two distinct atoms, got " + to_text(e));
  }
  const VagueEvent x = m.event(e.lhs().name());
  const VagueEvent y = m.event(e.rhs().name());
  const MinkOp op = e.kind() == Expr::Kind::And ? MinkOp::And : MinkOp::Or;
  MembershipCurve p = membership(x);
  MembershipCurve q = membership(y);
  MembershipCurve mk = membership(mink_combine(op, x, y));
  const RealCurve rp = to_real(p);
  const RealCurve rq = to_real(q);
  auto pick = [&](TNormKind k) {
    return op == MinkOp::And ? curve_tnorm(k, rp, rq) : curve_tconorm(k, rp, rq);
  };
  return Comparison{op,
                    std::move(p),
                    std::move(q),
                    std::move(mk),
                    pick(TNormKind::Minimum),
                    pick(TNormKind::Product),
                    pick(TNormKind::Lukasiewicz)};
}

/// Minkowski combination of two atoms next to the three t-norm readings.
inline int run_compare(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const Config cfg = resolve_config(o);
    if (o.expr.empty()) throw Error(ErrorCode::ConfigError, "--expr is required");
    if (o.format != "csv" && o.format != "svg") {
      throw Error(ErrorCode::ConfigError, "--format must be csv or svg");
    }
    const auto expr = parse(o.expr);
    const Dataset ds = load_dataset(o.dataset, cfg.universe);
    const SelectionMatrix m = ds.matrix();
    const Comparison c = compare_atoms(*expr, m);
    const int prec = cfg.precision;
    const RealCurve mk = to_real(c.minkowski);

    std::ostringstream text;
    if (o.format == "svg") {
      const auto& pal = default_palette();
      const bool conj = c.op == MinkOp::And;
      text << render_step_plot({{"Minkowski", mk, pal[0]},
                                {conj ? "T_M (minimum)" : "S_M (maximum)", c.t_min, pal[1], true},
                                {conj ? "T_P (product)" : "S_P (prob. sum)", c.t_prod, pal[2], true},
                                {conj ? "T_L (Lukasiewicz)" : "S_L (bounded sum)", c.t_luk, pal[3],
                                 true}},
                               m.universe(), cfg.svg, to_text(*expr));
    } else {
      text << "omega,minkowski,t_min,t_prod,t_luk,frechet_ok\n";
      for (double w : sample_grid(m.universe(), cfg.step)) {
        text << fmt::format("{},{},{},{},{},{}\n", detail::format_coord(w, prec),
                            detail::format_value(mk.at(w), prec),
                            detail::format_value(c.t_min.at(w), prec),
                            detail::format_value(c.t_prod.at(w), prec),
                            detail::format_value(c.t_luk.at(w), prec),
                            c.frechet_ok(w) ? "true" : "false");
      }
      text << fmt::format("# max_abs_deviation t_min={} t_prod={} t_luk={}\n",
                          detail::format_value(detail::max_abs_deviation(c.t_min, mk), prec),
                          detail::format_value(detail::max_abs_deviation(c.t_prod, mk), prec),
                          detail::format_value(detail::max_abs_deviation(c.t_luk, mk), prec));
    }
    detail::emit(o, out, text.str());
    return int{kOk};
  });
}

/// Deterministic synthetic two-name dataset.
inline int run_example(const Options& o, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    std::ostringstream text;
    write_example(text, o.seed, o.subjects);
    detail::emit(o, out, text.str());
    return int{kOk};
  });
}

}  // namespace eventling::cli
