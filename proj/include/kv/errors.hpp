#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kv {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic.
struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct UnknownVariable : Error {
  std::string name;
  explicit UnknownVariable(std::string n)
      : Error("unknown variable '" + n + "'"), name(std::move(n)) {}
};

// Expression parsing. `offset` is a byte offset into the source text.
struct ParseDiagnostic : Error {
  std::size_t offset;
  ParseDiagnostic(const std::string& what, std::size_t off)
      : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct SyntaxError : ParseDiagnostic {
  using ParseDiagnostic::ParseDiagnostic;
};

struct NegativeExponent : ParseDiagnostic {
  explicit NegativeExponent(std::size_t off)
      : ParseDiagnostic("exponent must be a nonnegative integer literal", off) {}
};

struct ZeroDenominatorLiteral : ParseDiagnostic {
  explicit ZeroDenominatorLiteral(std::size_t off)
      : ParseDiagnostic("division by an identically zero expression", off) {}
};

// Structure-level.
struct RankMismatch : Error {
  RankMismatch() : Error("rank mismatch") {}
  explicit RankMismatch(const std::string& what) : Error(what) {}
};

struct Degenerate : Error {
  Degenerate() : Error("tensor is degenerate (determinant is identically zero)") {}
  explicit Degenerate(const std::string& what) : Error(what) {}
};

struct SymmetryViolation : Error {
  explicit SymmetryViolation(const std::string& what) : Error(what) {}
};

// Input documents / CLI.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

struct UnknownTensorName : Error {
  explicit UnknownTensorName(const std::string& n)
      : Error("no tensor named '" + n + "' in the input document") {}
};

struct VarianceMismatch : Error {
  explicit VarianceMismatch(const std::string& what) : Error(what) {}
};

}  // namespace kv
