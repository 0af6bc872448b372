#pragma once

#include <stdexcept>
#include <string>

namespace jordan {

/// Raised when an operation's precondition does not hold for its inputs.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction cannot be completed for valid-looking input
/// (degenerate geometry, refinement caps, failed certification).
class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The reduction procedure ran out of vertices; the sampling is too coarse.
class DegenerateCurve : public ConstructionFailed {
 public:
  using ConstructionFailed::ConstructionFailed;
};

}  // namespace jordan
