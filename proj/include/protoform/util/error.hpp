#pragma once

#include <stdexcept>
#include <string>

namespace protoform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files, unknown symbols, impossible requests on data.
struct DataError : Error {
  using Error::Error;
};

// Shape mismatches and other misuse of the numeric core.
struct ShapeMismatch : Error {
  using Error::Error;
};

// NaN/Inf surfaced during training.
struct NumericFailure : Error {
  using Error::Error;
};

}  // namespace protoform
