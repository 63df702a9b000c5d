// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "oia/errors.hpp"

namespace oia {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Deterministic random stream for one Monte-Carlo trial.
///
/// std::mt19937_64 output is bit-specified by the standard; the Gaussian
/// transform is an explicit Box-Muller here because std::normal_distribution
/// is implementation-defined and would break seed reproducibility across
/// standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in (0, 1), never exactly 0 or 1.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Circularly symmetric complex Gaussian CN(0,1): real and imaginary
  /// parts are independent N(0, 1/2). Consumes exactly two uniforms.
  Complex complex_gaussian();

  std::uint64_t next_raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Child seed for (stream, substream) under a base seed, via SplitMix64
/// mixing. One independent stream per trial keeps Monte-Carlo results
/// identical for any degree of parallelism.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t substream = 0);

/// rows x cols matrix of i.i.d. CN(0,1) entries, filled row by row so a
/// fixed seed reproduces the same matrix bit for bit.
ComplexMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     RngStream& rng);

/// Eigendecomposition of a Hermitian matrix with eigenvalues sorted
/// descending (lambda_1 largest); column n of `eigenvectors` pairs with
/// eigenvalue n.
struct HermitianEigen {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Throws NotHermitian when max |A - A^H| exceeds 1e-10.
HermitianEigen hermitian_eigen(const ComplexMatrix& a);

/// Orthonormal basis of the column span of h (rows >= cols), via Householder
/// QR. Throws RankDeficient when the smallest singular value of h is at or
/// below 1e-12.
ComplexMatrix orthonormal_basis(const ComplexMatrix& h);

/// log2 det(I + scale * S) for Hermitian PSD S, evaluated through the
/// eigenvalues of S (clamped at zero against rounding).
double log_det_identity_plus(const ComplexMatrix& s, double scale);

}  // namespace oia
