#pragma once

#include <stdexcept>
#include <string>

namespace goals {

// Error families map onto CLI exit codes: validation errors -> 2,
// verification/comparison failures -> 3, resource limits -> 4.

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MarginMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct NegativeMargin : ValidationError {
  using ValidationError::ValidationError;
};
struct ShapeError : ValidationError {
  using ValidationError::ValidationError;
};
struct InfeasibleFixed : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidBoard : ValidationError {
  using ValidationError::ValidationError;
};
struct ParseError : ValidationError {
  using ValidationError::ValidationError;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPolynomial : VerificationFailure {
  using VerificationFailure::VerificationFailure;
};
struct NonzeroRemainder : VerificationFailure {
  using VerificationFailure::VerificationFailure;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExhaustedAttempts : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace goals
