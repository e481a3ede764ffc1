#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arfbetti {

enum class ErrorCode {
  EmptyGenerators,
  InvalidEntry,
  NonCofinite,
  TooLarge,
  NotClosed,
  NotMember,
  NotArf,
  MultiplicityDrops,
  PreconditionFailed,
  TooManyVertices,
  InvalidField,
  ClassificationGap,
  Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace arfbetti
