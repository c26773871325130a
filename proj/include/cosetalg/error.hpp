#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cosetalg {

enum class ErrorCode {
  kNotAssociative,
  kNoIdentity,
  kNotInvertible,
  kNotAPermutation,
  kClosureBudgetExceeded,
  kNotASubgroup,
  kUnsupportedExponent,
  kSpaceMismatch,
  kUnknownTag,
  kUnknownCheck,
  kNotNormal,
  kNormalSubgroupUseless,
  kUnknownSelection,
  kParseError,
  kInconsistentContext,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cosetalg
