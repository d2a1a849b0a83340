#pragma once

#include <stdexcept>
#include <string>

namespace tsnet {

// Error taxonomy mirrored by the CLI exit codes:
// ParameterError -> 1, DataError -> 2, anything else -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

// Input is structurally valid but carries no usable signal
// (e.g. a zero-variance series).
class DegenerateInputError : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace tsnet
