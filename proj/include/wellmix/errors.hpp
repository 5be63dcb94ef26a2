#pragma once

#include <stdexcept>
#include <string>

namespace wellmix {

// Base class for all library errors. Every error carries a short machine
// code (stable across releases) plus a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct NotPrimeError : Error {
  explicit NotPrimeError(const std::string& msg) : Error("NotPrime", msg) {}
};

struct ReducibleModulusError : Error {
  explicit ReducibleModulusError(const std::string& msg) : Error("ReducibleModulus", msg) {}
};

struct DegreeMismatchError : Error {
  explicit DegreeMismatchError(const std::string& msg) : Error("DegreeMismatch", msg) {}
};

struct DivisionByZeroError : Error {
  explicit DivisionByZeroError(const std::string& msg) : Error("DivisionByZero", msg) {}
};

struct TooLargeToMaterializeError : Error {
  explicit TooLargeToMaterializeError(const std::string& msg)
      : Error("TooLargeToMaterialize", msg) {}
};

struct InvalidVertexIdError : Error {
  explicit InvalidVertexIdError(const std::string& msg) : Error("InvalidVertexId", msg) {}
};

struct DuplicateVertexError : Error {
  explicit DuplicateVertexError(const std::string& msg) : Error("DuplicateVertex", msg) {}
};

struct NotSymmetricError : Error {
  explicit NotSymmetricError(const std::string& msg) : Error("NotSymmetric", msg) {}
};

struct NoConvergenceError : Error {
  explicit NoConvergenceError(const std::string& msg) : Error("NoConvergence", msg) {}
};

struct UnknownVariableError : Error {
  explicit UnknownVariableError(const std::string& msg) : Error("UnknownVariable", msg) {}
};

struct PartialFunctionError : Error {
  explicit PartialFunctionError(const std::string& msg) : Error("PartialFunction", msg) {}
};

struct NonHaltingError : Error {
  explicit NonHaltingError(const std::string& msg) : Error("NonHalting", msg) {}
};

struct KeyDisagreementError : Error {
  explicit KeyDisagreementError(const std::string& msg) : Error("KeyDisagreement", msg) {}
};

struct MissingVariableError : Error {
  explicit MissingVariableError(const std::string& msg) : Error("MissingVariable", msg) {}
};

struct SearchSpaceTooLargeError : Error {
  explicit SearchSpaceTooLargeError(const std::string& msg)
      : Error("SearchSpaceTooLarge", msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("UsageError", msg) {}
};

}  // namespace wellmix
