#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dominion {

enum class ErrorKind {
  ParseError,
  NotATree,
  Empty,
  UnknownVertex,
  InvalidParameter,
  NotALeaf,
  WouldBeEmpty,
  NoClosedForm,
  TooLarge,
  NotALevelHLeaf,
  MismatchDetected,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dominion
