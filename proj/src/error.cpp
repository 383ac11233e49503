#include "dominion/error.hpp"

namespace dominion {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotALeaf: return "NotALeaf";
    case ErrorKind::WouldBeEmpty: return "WouldBeEmpty";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotALevelHLeaf: return "NotALevelHLeaf";
    case ErrorKind::MismatchDetected: return "MismatchDetected";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace dominion
