#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace softint {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axiom { Closure, Associativity, Identity, Inverse, Shape };

const char* to_string(Axiom axiom);

/// A Cayley table failed a group axiom; `witness` holds the offending indices.
class AxiomViolation : public Error {
 public:
  AxiomViolation(Axiom axiom, std::vector<std::size_t> witness);

  Axiom axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  Axiom axiom_;
  std::vector<std::size_t> witness_;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class EmptyFamily : public Error {
 public:
  using Error::Error;
};

class EmptySupport : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class UnknownTheorem : public Error {
 public:
  using Error::Error;
};

/// Enumeration would visit more soft sets than the configured budget.
/// The required count is (2^m)^n, reported as its base-2 logarithm.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t required_log2, std::size_t budget);

  std::size_t required_log2() const { return required_log2_; }

 private:
  std::size_t required_log2_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  /// Message without the "line:col: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace softint
