#include "glp/error.hpp"

namespace glp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ProviderMismatch: return "ProviderMismatch";
    case ErrorKind::NotAWorm: return "NotAWorm";
    case ErrorKind::EmptyWorm: return "EmptyWorm";
    case ErrorKind::NotInFragment: return "NotInFragment";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::SignatureError: return "SignatureError";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::FrameViolation: return "FrameViolation";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           std::optional<std::size_t> position) {
  std::string out(to_string(kind));
  if (position) out += " at " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(format_message(kind, message, position)),
      kind_(kind),
      position_(position) {}

}  // namespace glp
