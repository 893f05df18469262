#pragma once

#include <stdexcept>
#include <string>

namespace dd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operand qubit counts disagree.
struct DimensionError : Error {
  using Error::Error;
};

/// Argument outside the allowed range.
struct ParameterError : Error {
  using Error::Error;
};

/// Mathematical precondition violated (non-Hermitian input, unnormalized state, ...).
struct DomainError : Error {
  using Error::Error;
};

/// Dense-matrix qubit cap or similar resource limit exceeded.
struct ResourceError : Error {
  using Error::Error;
};

/// Invalid experiment configuration; message carries the field path.
struct ConfigError : Error {
  using Error::Error;
};

/// Matrix-logarithm eigenphase too close to the +-pi branch cut.
struct BranchError : Error {
  using Error::Error;
};

}  // namespace dd
