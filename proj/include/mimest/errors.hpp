#pragma once

#include <stdexcept>
#include <string>

namespace mimest {

struct NotPositiveDefinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateData : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TooFewSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateDimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularCovariance : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyEvaluationSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigInvalid : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mimest
