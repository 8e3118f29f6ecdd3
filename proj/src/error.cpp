#include "edbound/error.hpp"

namespace edbound {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegreeMismatch: return "degree_mismatch";
    case ErrorCode::kNotMember: return "not_member";
    case ErrorCode::kNotSubgroup: return "not_subgroup";
    case ErrorCode::kParentMismatch: return "parent_mismatch";
    case ErrorCode::kNotNormal: return "not_normal";
    case ErrorCode::kCoreNontrivial: return "core_nontrivial";
    case ErrorCode::kGenerationFailure: return "generation_failure";
    case ErrorCode::kConditionII: return "condition_ii";
    case ErrorCode::kHypothesis: return "hypothesis";
    case ErrorCode::kElementInH: return "element_in_h";
    case ErrorCode::kNonSurjective: return "non_surjective";
    case ErrorCode::kNotStable: return "not_stable";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kCapExceeded: return "cap_exceeded";
    case ErrorCode::kFaithfulnessFailure: return "faithfulness_failure";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kValidation:
      return 3;
    case ErrorCode::kCapExceeded:
      return 4;
    case ErrorCode::kFaithfulnessFailure:
    case ErrorCode::kInternal:
      return 1;
    default:
      return 2;
  }
}

}  // namespace edbound
