#pragma once

#include <stdexcept>
#include <string>

namespace permrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must share a domain were given different degrees.
class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
      : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

enum class ParseErrorKind { malformed, out_of_range, repeated_point };

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  ParseErrorKind kind() const noexcept { return kind_; }

 private:
  ParseErrorKind kind_;
};

/// A precondition of a construction does not hold (not a subgroup, not normal,
/// set not regular, index hypothesis violated, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed the configured search or enumeration budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Input to the simple-group classifier has a proper nontrivial normal subgroup.
class NotSimple : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class UnknownName : public Error {
 public:
  explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

}  // namespace permrel
