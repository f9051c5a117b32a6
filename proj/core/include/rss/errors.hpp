#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rss {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid arguments: bad parameters, mismatched moduli, out-of-range values.
struct ParameterError : Error {
  using Error::Error;
};

struct DivisionByZeroError : ParameterError {
  using ParameterError::ParameterError;
};

/// Two points (or shares) with the same abscissa where distinct ones are required.
struct DuplicateAbscissaError : ParameterError {
  using ParameterError::ParameterError;
};

/// Fewer shares than the reconstruction threshold.
struct InsufficientSharesError : ParameterError {
  using ParameterError::ParameterError;
};

/// Payload does not fit the hidden channel. Carries the byte accounting.
struct CapacityError : ParameterError {
  CapacityError(std::uint64_t required, std::uint64_t available)
      : ParameterError("hidden channel capacity exceeded: " + std::to_string(required) +
                       " bytes required, " + std::to_string(available) + " available"),
        required_bytes(required),
        available_bytes(available) {}

  std::uint64_t required_bytes;
  std::uint64_t available_bytes;
};

/// Malformed share file (structural: magic, keys, decimals, counts).
struct ParseError : Error {
  using Error::Error;
};

/// Data that parsed fine but cannot be what the dealer produced.
struct CorruptionError : Error {
  using Error::Error;
};

/// Surplus shares (or an embedded digest) disagree with the reconstruction:
/// someone tampered with a share, or it was damaged in transit.
struct InconsistencyError : Error {
  using Error::Error;
};

/// File could not be read or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace rss
