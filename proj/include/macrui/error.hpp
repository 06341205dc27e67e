#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace macrui {

enum class ErrorKind {
  kDivisionByZero,
  kPole,
  kNonDivisible,
  kSpaceMismatch,
  kNotSymmetric,
  kSingularSystem,
  kInvalidArgument,
  kInternal,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error raised by the library. The kind is what the CLI
/// reports in its structured error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace macrui
