#pragma once

#include <stdexcept>
#include <string>

namespace cosmoface {

/// Error taxonomy shared by the library and the CLI. `kind()` is the stable
/// machine-parsable tag the CLI prints as `error[<kind>]:`.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

/// Malformed or out-of-contract input (loops, unknown labels, bad files...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

/// An enumeration exceeded a configured resource cap.
class CapError : public Error {
 public:
  explicit CapError(const std::string& message) : Error("cap", message) {}
};

/// Invariant violation inside the library; always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("internal", message) {}
};

}  // namespace cosmoface
