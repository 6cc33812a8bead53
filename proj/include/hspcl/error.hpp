#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hspcl {

/// Failure classes surfaced to the CLI as a machine-readable tag.
enum class ErrorCategory {
  InvalidArgument,
  Format,
  Io,
  Config,
  MissingPrerequisite,
  ConfigMismatch,
  Divergence,
  Internal,
};

std::string_view category_name(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void fail(ErrorCategory category, const std::string& message) {
  throw Error(category, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCategory::InvalidArgument, message);
}

}  // namespace hspcl
