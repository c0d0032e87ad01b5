#pragma once

#include <stdexcept>
#include <string>

namespace jacrec {

// Parameter outside the domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A lower Pochhammer parameter reaches zero before the series terminates.
struct PoleError : DomainError {
  using DomainError::DomainError;
};

// Exact and floating scalars combined in one operation.
struct MixedModeError : std::logic_error {
  using std::logic_error::logic_error;
};

// Non-finite intermediate value.
struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation not available for the given parameters (e.g. non-integer weight in quadrature).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace jacrec
