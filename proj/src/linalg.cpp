// SPDX-License-Identifier: Apache-2.0
#include "oia/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace oia {

Complex RngStream::complex_gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  // sqrt(-2 ln u1) / sqrt(2): each part comes out N(0, 1/2).
  const double r = std::sqrt(-std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream,
                          std::uint64_t substream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  std::uint64_t h = mix(base);
  h = mix(h ^ stream);
  h = mix(h ^ substream);
  return h;
}

ComplexMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                                     RngStream& rng) {
  if (rows < 1 || cols < 1) {
    throw InvalidParams("random_gaussian_matrix: dimensions must be >= 1");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = rng.complex_gaussian();
    }
  }
  return m;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& a) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw NotHermitian("hermitian_eigen: matrix must be square and non-empty");
  }
  const double asymmetry = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (!(asymmetry <= 1e-10)) {
    throw NotHermitian("hermitian_eigen: max |A - A^H| = " +
                       std::to_string(asymmetry));
  }

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigendecomposition did not converge");
  }

  HermitianEigen out;
  // Eigen returns ascending order; the lambda_n convention is descending.
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index i = 0; i + 1 < out.eigenvalues.size(); ++i) {
    if (out.eigenvalues[i] < out.eigenvalues[i + 1]) {
      throw Error("hermitian_eigen: descending sort contract violated");
    }
  }
  return out;
}

ComplexMatrix orthonormal_basis(const ComplexMatrix& h) {
  if (h.cols() < 1 || h.rows() < h.cols()) {
    throw ShapeMismatch("orthonormal_basis: requires rows >= cols >= 1");
  }
  // sigma_min(h)^2 = lambda_min(h^H h); the Gram matrix is at most MxM.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> gram(h.adjoint() * h,
                                                    Eigen::EigenvaluesOnly);
  if (!(gram.eigenvalues().minCoeff() > 1e-24)) {
    throw RankDeficient("orthonormal_basis: column span numerically rank deficient");
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(h);
  return qr.householderQ() * ComplexMatrix::Identity(h.rows(), h.cols());
}

double log_det_identity_plus(const ComplexMatrix& s, double scale) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(s, Eigen::EigenvaluesOnly);
  double bits = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    bits += std::log2(1.0 + scale * std::max(0.0, solver.eigenvalues()[i]));
  }
  return bits;
}

}  // namespace oia
