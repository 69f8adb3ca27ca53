#pragma once

#include <stdexcept>
#include <string>

namespace altzeta {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A generator name outside the closed symbol vocabulary.
struct UnknownGenerator : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// An s-exponent fell below the configured Laurent window.
struct WindowError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Mismatched truncation orders, or a coefficient requested beyond the
/// known precision of a truncated object.
struct TruncationError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Division by x of a series whose constant coefficient is nonzero, or a
/// composition whose inner series has a nonzero constant term.
struct ValuationError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Mixed partial requested beyond the orders a jet was built with.
struct InsufficientJetOrder : AlgebraError {
  using AlgebraError::AlgebraError;
};

}  // namespace altzeta

namespace altzeta {

/// A Laurent expansion that must be regular has a nonvanishing polar part.
struct SingularPartError : AlgebraError {
  using AlgebraError::AlgebraError;
};

}  // namespace altzeta
