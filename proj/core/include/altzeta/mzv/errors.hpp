#pragma once

#include <stdexcept>

namespace altzeta {

struct NumericsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Index with last entry +1.
struct DivergentIndex : NumericsError {
  using NumericsError::NumericsError;
};

/// Index shape outside what the evaluator handles.
struct UnsupportedIndex : NumericsError {
  using NumericsError::NumericsError;
};

/// Neither acceleration route reached the requested precision.
struct AccelerationError : NumericsError {
  using NumericsError::NumericsError;
};

/// Evaluation at a pole of Gamma, digamma or a hypergeometric denominator.
struct ParameterPole : NumericsError {
  using NumericsError::NumericsError;
};

}  // namespace altzeta
