#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qst {

/// Failure classes. The CLI maps each class onto a process exit code.
enum class ErrorKind {
  Domain,        // invalid mathematical input (zero where nonzero needed, ...)
  Parse,         // malformed text input
  Precondition,  // a stated hypothesis does not hold
  Budget,        // Groebner resource budget exhausted
  Internal,      // an identity that must hold exactly failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::Budget, what) {}
};

class InternalAssertion : public Error {
 public:
  explicit InternalAssertion(const std::string& what) : Error(ErrorKind::Internal, what) {}
};

/// 0 success, 2 hypothesis/precondition failure, 3 budget exceeded, 4 internal assertion.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Budget:
      return 3;
    case ErrorKind::Internal:
      return 4;
    default:
      return 2;
  }
}

}  // namespace qst
