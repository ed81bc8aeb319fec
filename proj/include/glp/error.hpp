#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace glp {

enum class ErrorKind {
  ParseError,
  ProviderMismatch,
  NotAWorm,
  EmptyWorm,
  NotInFragment,
  NotNormal,
  NotClosed,
  SignatureError,
  Inconsistent,
  CapExceeded,
  GuardExceeded,
  ResourceLimit,
  FrameViolation,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every module reports failures through this exception. The kind names the
/// module-level error; `position` is set for parse errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace glp
