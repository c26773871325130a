#include "cosetalg/error.hpp"

namespace cosetalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAssociative: return "NotAssociative";
    case ErrorCode::kNoIdentity: return "NoIdentity";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorCode::kNotASubgroup: return "NotASubgroup";
    case ErrorCode::kUnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::kSpaceMismatch: return "SpaceMismatch";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kUnknownCheck: return "UnknownCheck";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNormalSubgroupUseless: return "NormalSubgroupUseless";
    case ErrorCode::kUnknownSelection: return "UnknownSelection";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInconsistentContext: return "InconsistentContext";
  }
  return "Unknown";
}

}  // namespace cosetalg
