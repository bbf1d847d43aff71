#pragma once

#include <stdexcept>

namespace torusgreen {

// Base class for numerical failures raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators do not span a lattice with Im(omega2/omega1) > 0.
struct DegenerateLatticeError : Error {
  using Error::Error;
};

// Im(tau) below the supported minimum, or a series failed to converge
// within the term budget.
struct PrecisionLossError : Error {
  using Error::Error;
};

// Evaluation requested too close to a lattice point.
struct PoleInputError : Error {
  using Error::Error;
};

// A bracketing scan did not find the expected sign pattern.
struct RootNotBracketedError : Error {
  using Error::Error;
};

// The grid-scan counting check could not polish all candidates to a zero.
struct OracleInconclusiveError : Error {
  using Error::Error;
};

// File output failed.
struct IoError : Error {
  using Error::Error;
};

}  // namespace torusgreen
