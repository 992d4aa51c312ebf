#pragma once

// The linguistic-expression language.
//
//   expr   := term (("or" | "xor") term)*
//   term   := factor ("and" factor)*
//   factor := "not" factor | HEDGE factor | atom | "(" expr ")"
//   HEDGE  := "very" | "more_or_less" | "essentially"
//   atom   := [A-Za-z_][A-Za-z0-9_]*   (keywords excluded)
//
// Binary operators are left-associative. Three semantics are provided:
// eval_event (per-subject set operations, then averaging), eval_vague
// (componentwise vague connectives) and eval_tnorm (pointwise t-norms).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eventling/error.hpp"
#include "eventling/eventology.hpp"
#include "eventling/tnorm.hpp"
#include "eventling/vague.hpp"

namespace eventling {

enum class TokenKind { Atom, And, Or, Xor, Not, Very, MoreOrLess, Essentially, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;
};

inline std::string describe(const Token& t) {
  return t.kind == TokenKind::End ? std::string("end of input") : "'" + t.text + "'";
}

inline std::optional<TokenKind> keyword(std::string_view word) {
  static const std::map<std::string_view, TokenKind> table{
      {"and", TokenKind::And},   {"or", TokenKind::Or},
      {"xor", TokenKind::Xor},   {"not", TokenKind::Not},
      {"very", TokenKind::Very}, {"more_or_less", TokenKind::MoreOrLess},
      {"essentially", TokenKind::Essentially}};
  auto it = table.find(word);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

/// Usable as an atom: an identifier that is not a keyword.
inline bool is_atom_name(std::string_view s) { return is_identifier(s) && !keyword(s); }

inline std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < input.size()) {
    const auto c = static_cast<unsigned char>(input[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({c == '(' ? TokenKind::LParen : TokenKind::RParen, std::string(1, input[i]), i});
      ++i;
    } else if (std::isalpha(c) || c == '_') {
      const std::size_t start = i;
      while (i < input.size() &&
             (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_')) {
        ++i;
      }
      std::string word(input.substr(start, i - start));
      out.push_back({keyword(word).value_or(TokenKind::Atom), std::move(word), start});
    } else {
      throw SyntaxError(ErrorCode::LexError, i, "identifier, keyword or parenthesis",
                        "'" + std::string(1, input[i]) + "'");
    }
  }
  out.push_back({TokenKind::End, "", input.size()});
  return out;
}

/// Immutable expression tree; subtrees are shared.
class Expr {
 public:
  enum class Kind { Atom, Not, And, Or, SymDiff, Hedge };
  using Ptr = std::shared_ptr<const Expr>;

  static Ptr atom(std::string name) {
    if (name.empty()) throw Error(ErrorCode::ParseError, "atom name must be non-empty");
    return Ptr(new Expr(Kind::Atom, std::move(name), {}, nullptr, nullptr));
  }
  static Ptr negate(Ptr e) { return Ptr(new Expr(Kind::Not, {}, {}, std::move(e), nullptr)); }
  static Ptr conj(Ptr a, Ptr b) { return binary(Kind::And, std::move(a), std::move(b)); }
  static Ptr disj(Ptr a, Ptr b) { return binary(Kind::Or, std::move(a), std::move(b)); }
  static Ptr symdiff(Ptr a, Ptr b) { return binary(Kind::SymDiff, std::move(a), std::move(b)); }
  static Ptr hedge(HedgeKind h, Ptr e) {
    return Ptr(new Expr(Kind::Hedge, {}, h, std::move(e), nullptr));
  }
  static Ptr binary(Kind k, Ptr a, Ptr b) {
    return Ptr(new Expr(k, {}, {}, std::move(a), std::move(b)));
  }

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  HedgeKind hedge_kind() const noexcept { return hedge_; }
  /// Operand of Not/Hedge, left operand of binary nodes.
  const Expr& lhs() const noexcept { return *lhs_; }
  const Expr& rhs() const noexcept { return *rhs_; }
  bool is_binary() const noexcept {
    return kind_ == Kind::And || kind_ == Kind::Or || kind_ == Kind::SymDiff;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::Atom: return a.name_ == b.name_;
      case Kind::Not: return *a.lhs_ == *b.lhs_;
      case Kind::Hedge: return a.hedge_ == b.hedge_ && *a.lhs_ == *b.lhs_;
      default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
  }

 private:
  Expr(Kind k, std::string name, HedgeKind h, Ptr lhs, Ptr rhs)
      : kind_(k), name_(std::move(name)), hedge_(h), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {}

  Kind kind_;
  std::string name_;
  HedgeKind hedge_ = HedgeKind::Very;
  Ptr lhs_;
  Ptr rhs_;
};

constexpr std::string_view hedge_keyword(HedgeKind h) noexcept {
  switch (h) {
    case HedgeKind::Very: return "very";
    case HedgeKind::MoreOrLess: return "more_or_less";
    case HedgeKind::Essentially: return "essentially";
  }
  return "?";
}

namespace detail {

class Parser {
 public:
  static constexpr std::size_t kMaxDepth = 1000;

  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::End) {
      const std::size_t end = tokens_.empty() ? 0 : tokens_.back().position + tokens_.back().text.size();
      tokens_.push_back({TokenKind::End, "", end});
    }
  }

  Expr::Ptr parse_all() {
    auto e = expr();
    if (peek().kind != TokenKind::End) fail("operator or end of input");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(ErrorCode::ParseError, peek().position, expected, describe(peek()));
  }

  Expr::Ptr expr() {
    auto lhs = term();
    while (peek().kind == TokenKind::Or || peek().kind == TokenKind::Xor) {
      const auto kind = take().kind == TokenKind::Or ? Expr::Kind::Or : Expr::Kind::SymDiff;
      lhs = Expr::binary(kind, std::move(lhs), term());
    }
    return lhs;
  }

  Expr::Ptr term() {
    auto lhs = factor();
    while (peek().kind == TokenKind::And) {
      take();
      lhs = Expr::conj(std::move(lhs), factor());
    }
    return lhs;
  }

  Expr::Ptr factor() {
    if (++depth_ > kMaxDepth) fail("shallower nesting");
    auto e = factor_body();
    --depth_;
    return e;
  }

  Expr::Ptr factor_body() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Not: take(); return Expr::negate(factor());
      case TokenKind::Very: take(); return Expr::hedge(HedgeKind::Very, factor());
      case TokenKind::MoreOrLess: take(); return Expr::hedge(HedgeKind::MoreOrLess, factor());
      case TokenKind::Essentially: take(); return Expr::hedge(HedgeKind::Essentially, factor());
      case TokenKind::Atom: return Expr::atom(take().text);
      case TokenKind::LParen: {
        take();
        auto inner = expr();
        if (peek().kind != TokenKind::RParen) fail("')'");
        take();
        return inner;
      }
      default: fail("atom, 'not', hedge or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace detail

inline Expr::Ptr parse(std::vector<Token> tokens) {
  return detail::Parser(std::move(tokens)).parse_all();
}

inline Expr::Ptr parse(std::string_view text) { return parse(tokenize(text)); }

/// Fully parenthesized rendering; atoms print bare.
inline std::string to_text(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Atom: return e.name();
    case Expr::Kind::Not: return "(not " + to_text(e.lhs()) + ")";
    case Expr::Kind::Hedge:
      return "(" + std::string(hedge_keyword(e.hedge_kind())) + " " + to_text(e.lhs()) + ")";
    case Expr::Kind::And: return "(" + to_text(e.lhs()) + " and " + to_text(e.rhs()) + ")";
    case Expr::Kind::Or: return "(" + to_text(e.lhs()) + " or " + to_text(e.rhs()) + ")";
    case Expr::Kind::SymDiff: return "(" + to_text(e.lhs()) + " xor " + to_text(e.rhs()) + ")";
  }
  return {};
}

inline void collect_atoms(const Expr& e, std::vector<std::string>& out) {
  if (e.kind() == Expr::Kind::Atom) {
    if (std::find(out.begin(), out.end(), e.name()) == out.end()) out.push_back(e.name());
    return;
  }
  collect_atoms(e.lhs(), out);
  if (e.is_binary()) collect_atoms(e.rhs(), out);
}

// ---------------------------------------------------------------------------
// Eventological semantics

/// Result of eventological evaluation. Without hedges the curve is exact;
/// a hedge turns the aggregated curve real-valued.
class EventCurve {
 public:
  explicit EventCurve(MembershipCurve exact) : value_(std::move(exact)) {}
  explicit EventCurve(RealCurve real) : value_(std::move(real)) {}

  bool is_exact() const noexcept { return std::holds_alternative<MembershipCurve>(value_); }
  const MembershipCurve& exact() const { return std::get<MembershipCurve>(value_); }

  RealCurve real() const {
    if (is_exact()) return to_real(exact());
    return std::get<RealCurve>(value_);
  }

 private:
  std::variant<MembershipCurve, RealCurve> value_;
};

namespace detail {

/// While no hedge has been met the subtree is a vague event; after a hedge
/// it is an aggregated real curve, on which only negation stays defined.
using EventOrCurve = std::variant<VagueEvent, RealCurve>;

inline EventOrCurve eval_event_rec(const Expr& e, const SelectionMatrix& m,
                                   const HedgeExponents& hedges) {
  switch (e.kind()) {
    case Expr::Kind::Atom: return m.event(e.name());
    case Expr::Kind::Not: {
      auto inner = eval_event_rec(e.lhs(), m, hedges);
      if (auto* ev = std::get_if<VagueEvent>(&inner)) return mink_combine(MinkOp::Not, *ev);
      return std::get<RealCurve>(inner).map([](double v) { return 1.0 - v; });
    }
    case Expr::Kind::Hedge: {
      const double k = hedges.of(e.hedge_kind());
      if (!(k > 0) || !std::isfinite(k)) {
        throw Error(ErrorCode::InvalidHedge, fmt::format("hedge exponent must be > 0, got {}", k));
      }
      auto inner = eval_event_rec(e.lhs(), m, hedges);
      if (k == 1.0) return inner;
      RealCurve base = std::holds_alternative<VagueEvent>(inner)
                           ? to_real(membership(std::get<VagueEvent>(inner)))
                           : std::get<RealCurve>(inner);
      return base.map([k](double v) { return std::pow(v, k); }).coalesced();
    }
    case Expr::Kind::And:
    case Expr::Kind::Or:
    case Expr::Kind::SymDiff: {
      auto a = eval_event_rec(e.lhs(), m, hedges);
      auto b = eval_event_rec(e.rhs(), m, hedges);
      auto* ea = std::get_if<VagueEvent>(&a);
      auto* eb = std::get_if<VagueEvent>(&b);
      if (!ea || !eb) {
        throw Error(ErrorCode::UnsupportedHedgePlacement,
                    "a hedged operand of '" + to_text(e) +
                        "' has no per-subject events to combine; hedge the whole connective");
      }
      const MinkOp op = e.kind() == Expr::Kind::And  ? MinkOp::And
                        : e.kind() == Expr::Kind::Or ? MinkOp::Or
                                                     : MinkOp::SymDiff;
      return mink_combine(op, *ea, *eb);
    }
  }
  throw Error(ErrorCode::ParseError, "unknown expression node");
}

inline void require_atoms(const Expr& e, const std::function<bool(const std::string&)>& known) {
  std::vector<std::string> atoms;
  collect_atoms(e, atoms);
  for (const auto& a : atoms) {
    if (!known(a)) throw Error(ErrorCode::UnknownAtom, "'" + a + "'");
  }
}

}  // namespace detail

inline EventCurve eval_event(const Expr& e, const SelectionMatrix& m,
                             const HedgeExponents& hedges = {}) {
  detail::require_atoms(e, [&m](const std::string& a) { return m.has_name(a); });
  auto result = detail::eval_event_rec(e, m, hedges);
  if (auto* ev = std::get_if<VagueEvent>(&result)) return EventCurve(membership(*ev));
  return EventCurve(std::get<RealCurve>(std::move(result)));
}

// ---------------------------------------------------------------------------
// Classic vague-set semantics

using VagueBindings = std::map<std::string, VagueCurve>;

namespace detail {

inline VagueCurve eval_vague_rec(const Expr& e, const VagueBindings& b, const HedgeExponents& h) {
  switch (e.kind()) {
    case Expr::Kind::Atom: return b.at(e.name());
    case Expr::Kind::Not: return curve_not(eval_vague_rec(e.lhs(), b, h));
    case Expr::Kind::Hedge: return curve_hedge(eval_vague_rec(e.lhs(), b, h), h.of(e.hedge_kind()));
    case Expr::Kind::And: return curve_and(eval_vague_rec(e.lhs(), b, h), eval_vague_rec(e.rhs(), b, h));
    case Expr::Kind::Or: return curve_or(eval_vague_rec(e.lhs(), b, h), eval_vague_rec(e.rhs(), b, h));
    case Expr::Kind::SymDiff: {
      const auto x = eval_vague_rec(e.lhs(), b, h);
      const auto y = eval_vague_rec(e.rhs(), b, h);
      return curve_or(curve_and(x, curve_not(y)), curve_and(curve_not(x), y));
    }
  }
  throw Error(ErrorCode::ParseError, "unknown expression node");
}

}  // namespace detail

inline VagueCurve eval_vague(const Expr& e, const VagueBindings& bindings,
                             const HedgeExponents& hedges = {}) {
  detail::require_atoms(e, [&bindings](const std::string& a) { return bindings.count(a) != 0; });
  return detail::eval_vague_rec(e, bindings, hedges);
}

// ---------------------------------------------------------------------------
// t-norm semantics

using RealBindings = std::map<std::string, RealCurve>;

namespace detail {

inline RealCurve eval_tnorm_rec(const Expr& e, TNormKind kind, const RealBindings& b,
                                const HedgeExponents& h) {
  switch (e.kind()) {
    case Expr::Kind::Atom: return b.at(e.name());
    case Expr::Kind::Not:
      return eval_tnorm_rec(e.lhs(), kind, b, h).map([](double v) { return 1.0 - v; });
    case Expr::Kind::Hedge: {
      const double k = h.of(e.hedge_kind());
      if (!(k > 0) || !std::isfinite(k)) {
        throw Error(ErrorCode::InvalidHedge, fmt::format("hedge exponent must be > 0, got {}", k));
      }
      auto inner = eval_tnorm_rec(e.lhs(), kind, b, h);
      if (k == 1.0) return inner;
      return inner.map([k](double v) { return std::pow(v, k); }).coalesced();
    }
    case Expr::Kind::And:
      return curve_tnorm(kind, eval_tnorm_rec(e.lhs(), kind, b, h), eval_tnorm_rec(e.rhs(), kind, b, h));
    case Expr::Kind::Or:
      return curve_tconorm(kind, eval_tnorm_rec(e.lhs(), kind, b, h), eval_tnorm_rec(e.rhs(), kind, b, h));
    case Expr::Kind::SymDiff: {
      const auto x = eval_tnorm_rec(e.lhs(), kind, b, h);
      const auto y = eval_tnorm_rec(e.rhs(), kind, b, h);
      const auto not_x = x.map([](double v) { return 1.0 - v; });
      const auto not_y = y.map([](double v) { return 1.0 - v; });
      return curve_tconorm(kind, curve_tnorm(kind, x, not_y), curve_tnorm(kind, not_x, y));
    }
  }
  throw Error(ErrorCode::ParseError, "unknown expression node");
}

}  // namespace detail

inline RealCurve eval_tnorm(const Expr& e, TNormKind kind, const RealBindings& bindings,
                            const HedgeExponents& hedges = {}) {
  detail::require_atoms(e, [&bindings](const std::string& a) { return bindings.count(a) != 0; });
  return detail::eval_tnorm_rec(e, kind, bindings, hedges);
}

}  // namespace eventling
