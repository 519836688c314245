#pragma once

#include <stdexcept>
#include <string>

namespace galrep {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorKind : int {
  Validation = 1,
  Ambiguity = 2,
  Io = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text (literals, fixture documents). `line` is 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : Error(ErrorKind::Validation, line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Well-formed input that violates a mathematical invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::Validation, what) {}
};

/// Two independent computations of the same quantity disagreed.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what)
      : Error(ErrorKind::Validation, "internal inconsistency: " + what) {}
};

/// The data does not determine the answer (e.g. an unresolved Frobenius class).
class AmbiguityError : public Error {
 public:
  explicit AmbiguityError(const std::string& what) : Error(ErrorKind::Ambiguity, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace galrep
