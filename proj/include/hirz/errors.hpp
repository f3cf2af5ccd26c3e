#pragma once

#include <stdexcept>
#include <string>

namespace hirz {

/// Failure categories. Each maps to one CLI exit code.
enum class ErrorKind {
  Usage,             // malformed input or violated structural precondition
  Hypothesis,        // a theorem's hypotheses are not declared / not met
  UnsupportedRange,  // outside the range the classification covers
  Invariant,         // internal invariant broken (overflow, bound violation)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct StructuralError : Error {
  explicit StructuralError(const std::string& w) : Error(ErrorKind::Usage, w) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorKind::Usage, w) {}
};

struct HypothesisError : Error {
  explicit HypothesisError(const std::string& w) : Error(ErrorKind::Hypothesis, w) {}
};

struct UnsupportedRangeError : Error {
  explicit UnsupportedRangeError(const std::string& w)
      : Error(ErrorKind::UnsupportedRange, w) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& w) : Error(ErrorKind::Invariant, w) {}
};

struct OverflowError : InvariantViolation {
  explicit OverflowError(const std::string& w)
      : InvariantViolation("integer overflow in " + w) {}
};

}  // namespace hirz
