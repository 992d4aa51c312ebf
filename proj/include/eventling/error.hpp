#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eventling {

enum class ErrorCode {
  InvalidInterval,
  OutOfUniverse,
  UniverseMismatch,
  ConstraintViolation,
  InvalidHedge,
  RangeError,
  ContradictoryJudgment,
  EmptyPopulation,
  PopulationMismatch,
  UnknownAtom,
  LexError,
  ParseError,
  UnsupportedComparison,
  UnsupportedHedgePlacement,
  MalformedRow,
  ConfigError,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::OutOfUniverse: return "OutOfUniverse";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::InvalidHedge: return "InvalidHedge";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::ContradictoryJudgment: return "ContradictoryJudgment";
    case ErrorCode::EmptyPopulation: return "EmptyPopulation";
    case ErrorCode::PopulationMismatch: return "PopulationMismatch";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedComparison: return "UnsupportedComparison";
    case ErrorCode::UnsupportedHedgePlacement: return "UnsupportedHedgePlacement";
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Base exception for every library failure. The code is stable and is what
/// callers (and the CLI exit-code mapping) should switch on; the message is
/// for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Lexer and parser failures carry the byte offset into the expression text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, std::string expected, std::string found)
      : Error(code, "at position " + std::to_string(position) + ": expected " + expected +
                        ", found " + found),
        position_(position),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t position_;
  std::string expected_;
  std::string found_;
};

}  // namespace eventling
