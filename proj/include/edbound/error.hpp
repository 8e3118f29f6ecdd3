#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edbound {

/// Failure categories.  The CLI maps each category onto a fixed exit code.
enum class ErrorCode {
  kDegreeMismatch,
  kNotMember,
  kNotSubgroup,
  kParentMismatch,
  kNotNormal,
  kCoreNontrivial,
  kGenerationFailure,
  kConditionII,
  kHypothesis,
  kElementInH,
  kNonSurjective,
  kNotStable,
  kParse,
  kValidation,
  kCapExceeded,
  kFaithfulnessFailure,
  kInternal,
};

std::string_view to_string(ErrorCode code);

/// 0 success, 1 internal invariant failure, 2 precondition/hypothesis
/// violation, 3 parse/validation error, 4 cap exceeded.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace edbound
