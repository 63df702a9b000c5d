// SPDX-License-Identifier: Apache-2.0
#include "oia/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oia/parallel.hpp"

namespace oia {

namespace {

void require_generator_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("generator matrices must have identical shapes");
  }
  if (a.cols() < 1 || a.rows() < a.cols()) {
    throw ShapeMismatch("generator matrices must be tall (rows >= cols >= 1)");
  }
}

void require_half_dimensional(const ComplexMatrix& a) {
  if (a.rows() != 2 * a.cols()) {
    throw ShapeMismatch("operation requires N_R = 2M generator matrices");
  }
}

// Orthonormal basis of the orthogonal complement of span(g): the trailing
// columns of the full Householder Q of g.
ComplexMatrix null_completion(const ComplexMatrix& g) {
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  return q.rightCols(g.rows() - g.cols());
}

}  // namespace

std::vector<double> principal_angles(const ComplexMatrix& a,
                                     const ComplexMatrix& b) {
  require_generator_pair(a, b);
  Eigen::JacobiSVD<ComplexMatrix> svd(a.adjoint() * b);
  const RealVector& mu = svd.singularValues();  // descending
  std::vector<double> angles(static_cast<std::size_t>(mu.size()));
  for (Eigen::Index m = 0; m < mu.size(); ++m) {
    angles[static_cast<std::size_t>(m)] =
        std::acos(std::clamp(mu[m], 0.0, 1.0));
  }
  return angles;  // ascending since mu is descending
}

double chordal_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_generator_pair(a, b);
  const double overlap = (a.adjoint() * b).squaredNorm();  // tr(A^H B B^H A)
  return std::max(0.0, static_cast<double>(a.cols()) - overlap);
}

RealVector pair_gram_spectrum(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_generator_pair(a, b);
  require_half_dimensional(a);
  return hermitian_eigen(a * a.adjoint() + b * b.adjoint()).eigenvalues;
}

double min_tail_eigensum(const ComplexMatrix& a, const ComplexMatrix& b) {
  return pair_gram_spectrum(a, b).tail(a.cols()).sum();
}

ComplexMatrix rotation_onto(const ComplexMatrix& h, const ComplexMatrix& a) {
  require_generator_pair(h, a);
  require_half_dimensional(h);
  const Eigen::Index n = h.rows();
  ComplexMatrix basis_h(n, n);
  basis_h << h, null_completion(h);
  ComplexMatrix basis_a(n, n);
  basis_a << a, null_completion(a);
  return basis_a * basis_h.adjoint();
}

double quantization_eta(int subspace_dim) {
  if (subspace_dim < 1) {
    throw InvalidParams("quantization_eta: M must be >= 1");
  }
  const double m = subspace_dim;
  double log_eta = -std::lgamma(m * m + 1.0);
  for (int i = 1; i <= subspace_dim; ++i) {
    log_eta += std::lgamma(2.0 * m - i + 1.0) - std::lgamma(m - i + 1.0);
  }
  return std::exp(log_eta);
}

double quantization_bound(const DistortionBoundParams& params) {
  if (params.subspace_dim < 1 || params.codebook_size < 1) {
    throw InvalidParams("quantization_bound: M and K must be >= 1");
  }
  if (!(params.a > 0.0 && params.a < 1.0)) {
    throw InvalidParams("quantization_bound: a must lie in (0,1)");
  }
  const double m = params.subspace_dim;
  const double m_sq = m * m;
  const double eta_k = quantization_eta(params.subspace_dim) *
                       static_cast<double>(params.codebook_size);
  // Log-space Gamma evaluation can round an exact eta*K = 1 boundary either
  // way; allow that much slack and no more.
  if (!(eta_k >= 1.0 - 1e-12)) {
    throw InvalidParams("quantization_bound: side condition eta*K >= 1 unsatisfied");
  }
  return std::tgamma(1.0 / m_sq) / m_sq * std::pow(eta_k, -1.0 / m_sq) +
         m * std::exp(-std::pow(eta_k, 1.0 - params.a));
}

double min_chordal_statistic(int subspace_dim, int num_users, int trials,
                             std::uint64_t seed, int threads) {
  if (subspace_dim < 1 || num_users < 1 || trials < 1) {
    throw InvalidParams("min_chordal_statistic: M, K and trials must be >= 1");
  }
  const Eigen::Index n = 2 * subspace_dim;
  const Eigen::Index m = subspace_dim;

  std::vector<double> minima(static_cast<std::size_t>(trials));
  parallel_for_index(trials, threads, [&](std::int64_t t) {
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < num_users; ++k) {
      const ComplexMatrix span2 = orthonormal_basis(random_gaussian_matrix(n, m, rng));
      const ComplexMatrix span3 = orthonormal_basis(random_gaussian_matrix(n, m, rng));
      best = std::min(best, chordal_distance_sq(span2, span3));
    }
    minima[static_cast<std::size_t>(t)] = best;
  });

  double sum = 0.0;
  for (double v : minima) sum += v;
  return sum / trials;
}

}  // namespace oia
