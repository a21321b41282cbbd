#pragma once

#include <stdexcept>
#include <string>

namespace busemann {

/// Failure categories. The CLI maps these onto exit codes.
enum class ErrorKind {
  Domain,         // argument outside the mathematical domain of an operation
  Convergence,    // a quadrature or root solve could not meet its tolerance
  Resource,       // a configured size cap would be exceeded
  Unsupported,    // dimension or kind the operation does not handle
  Applicability,  // theorem not applicable to the given body/space
  Precondition,   // construction precondition violated
  Parse           // malformed input document or spec string
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what) : Error(ErrorKind::Convergence, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::Unsupported, what) {}
};

class ApplicabilityError : public Error {
 public:
  explicit ApplicabilityError(const std::string& what) : Error(ErrorKind::Applicability, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

}  // namespace busemann
