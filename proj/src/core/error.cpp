#include "qsnn/core/error.hpp"

namespace qsnn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kOutOfBounds: return "out-of-bounds";
    case ErrorCode::kDuplicateTarget: return "duplicate-target";
    case ErrorCode::kNormDriftExceeded: return "norm-drift-exceeded";
    case ErrorCode::kNotUnitary: return "not-unitary";
    case ErrorCode::kDegenerateOutcome: return "degenerate-outcome";
    case ErrorCode::kNonOrthonormalSubspace: return "non-orthonormal-subspace";
    case ErrorCode::kInvalidParams: return "invalid-params";
    case ErrorCode::kNonPythagorean: return "non-pythagorean";
    case ErrorCode::kDegenerateParams: return "degenerate";
    case ErrorCode::kHierarchyViolation: return "hierarchy-violation";
    case ErrorCode::kNoRealSolution: return "no-real-solution";
    case ErrorCode::kSignInconsistency: return "sign-inconsistency";
    case ErrorCode::kNormalization: return "normalization";
    case ErrorCode::kValidation: return "validation";
  }
  return "unknown";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNormDriftExceeded:
    case ErrorCode::kNotUnitary:
    case ErrorCode::kDegenerateOutcome:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qsnn
