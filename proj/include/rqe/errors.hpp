#pragma once

#include <stdexcept>
#include <string>

namespace rqe {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unusable arguments or configuration: degree mismatches, foreign folder
// entries, out-of-range indices, bad flag combinations.
struct ConfigError : Error {
  using Error::Error;
};

// A built-in size cap was exceeded (subgroup generation degree, normalizer
// scan degree, element enumeration limit). The caller must supply the data
// externally instead.
struct CapError : ConfigError {
  using ConfigError::ConfigError;
};

// A folder space does not fit under the configured sweep memory cap.
struct MemoryCapError : Error {
  using Error::Error;
};

// Malformed or corrupt input: text parse failures, bad library files,
// stored data that fails re-validation.
struct FormatError : Error {
  using Error::Error;
};

// The implementation contradicted itself (failed cross-check, non-divisible
// Burnside sum, missing digraph edge). Always a bug, never a data problem.
struct InternalError : Error {
  using Error::Error;
};

} // namespace rqe
