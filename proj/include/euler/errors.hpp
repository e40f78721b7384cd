#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace euler {

enum class ErrorKind {
  DuplicateVariable,
  CharacteristicTwo,
  NotPrime,
  ParseError,
  UnknownVariable,
  RingMismatch,
  NotMember,
  ArityMismatch,
  EquationViolated,
  UnsupportedN,
  NotOriented,
  MoveFailed,
  ConstructionFailed,
  NotCompleteIntersection,
  NotComaximal,
  HeightViolation,
  RangeViolation,
  NotZeroDimensional,
  Unimodularity,
  TooManyVariables,
  ExponentOverflow,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& expected)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": expected " + expected),
        line_(line),
        column_(column),
        expected_(expected) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::string expected_;
};

}  // namespace euler
