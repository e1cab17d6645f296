#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avgpart {

enum class ErrorKind {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  OverlappingSets,
  HypothesisNotMet,
  NonPositiveParameter,
  DimensionMismatch,
  SupportMismatch,
  NotAClique,
  CliqueTooSmall,
  TooLarge,
  ParseError,
  InvalidSpec,
  InvalidInput,
  InternalAssertion,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is what callers dispatch on;
/// the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws InternalAssertion with `what` when `cond` is false. Used for the
/// inequalities the theory guarantees; a failure always means a bug.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::InternalAssertion, what);
}

}  // namespace avgpart
