// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace oia {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// hermitian_eigen input violates the Hermitian symmetry tolerance; signals
// an upstream arithmetic bug rather than a user mistake.
struct NotHermitian : Error {
  using Error::Error;
};

// orthonormal_basis input has numerically dependent columns (degenerate
// channel draw). Callers redraw the trial.
struct RankDeficient : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct InvalidParams : Error {
  using Error::Error;
};

// Flop-model shape constraints violated (m < n, odd N_R, ...).
struct InvalidShape : Error {
  using Error::Error;
};

struct EmptyGroup : Error {
  using Error::Error;
};

struct WindowTooNarrow : Error {
  using Error::Error;
};

// Experiment configuration rejected; the CLI maps this to exit code 2.
struct ConfigError : Error {
  using Error::Error;
};

// Output could not be written; the CLI maps this to exit code 3.
struct IoError : Error {
  using Error::Error;
};

}  // namespace oia
