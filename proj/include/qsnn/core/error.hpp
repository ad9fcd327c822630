#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsnn {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kOutOfBounds,
  kDuplicateTarget,
  kNormDriftExceeded,
  kNotUnitary,
  kDegenerateOutcome,
  kNonOrthonormalSubspace,
  kInvalidParams,
  kNonPythagorean,
  kDegenerateParams,
  kHierarchyViolation,
  kNoRealSolution,
  kSignInconsistency,
  kNormalization,
  kValidation,
};

std::string_view to_string(ErrorCode code);

/// True for errors caused by bad user input rather than by a failed simulation.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qsnn
