// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "oia/linalg.hpp"

namespace oia {

// A generator matrix is an N_R x M ComplexMatrix with orthonormal columns
// (G^H G = I_M); any generator of the same subspace gives identical
// distances below.

/// Principal angles theta_1 <= ... <= theta_M in [0, pi/2] between the
/// column spans of a and b: theta_m = arccos of the m-th largest singular
/// value of A^H B, clamped into [0, 1] before arccos.
std::vector<double> principal_angles(const ComplexMatrix& a,
                                     const ComplexMatrix& b);

/// Squared chordal distance M - tr(A^H B B^H A) = sum_m sin^2 theta_m,
/// in [0, M].
double chordal_distance_sq(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of A A^H + B B^H in descending order. Requires N_R = 2M;
/// for a sum of two rank-M projectors the spectrum is {1 + cos theta_m}
/// followed by {1 - cos theta_m}.
RealVector pair_gram_spectrum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of the M smallest eigenvalues of A A^H + B B^H, i.e.
/// sum_m (1 - cos theta_m); brackets the squared chordal distance within a
/// factor of two from below.
double min_tail_eigensum(const ComplexMatrix& a, const ComplexMatrix& b);

/// Unitary R = [A, A_perp] [H, H_perp]^H with R H = A, built from
/// orthonormal completions of both generators. Requires N_R = 2M. Chordal
/// distances are invariant under left-multiplication by R.
ComplexMatrix rotation_onto(const ComplexMatrix& h, const ComplexMatrix& a);

struct DistortionBoundParams {
  int subspace_dim = 1;   // M
  int codebook_size = 1;  // K
  double a = 0.5;         // exponent split, must lie in (0,1)
};

/// Codebook constant eta = (1/Gamma(M^2+1)) prod_{i=1}^{M}
/// Gamma(2M-i+1)/Gamma(M-i+1), evaluated in log space.
double quantization_eta(int subspace_dim);

/// Upper bound D on the average quantization error when a random subspace
/// of G_{2M,M}(C) is quantized with K random codewords:
///   D = Gamma(1/M^2)/M^2 * (eta K)^(-1/M^2) + M exp(-(eta K)^(1-a)).
/// Throws InvalidParams when a is outside (0,1) or eta*K < 1.
double quantization_bound(const DistortionBoundParams& params);

/// Monte-Carlo estimate of E[min over K users of the squared chordal
/// distance between two orthonormalized i.i.d. Gaussian interferer spans].
/// Fixed seed gives a fixed estimate for any thread count.
double min_chordal_statistic(int subspace_dim, int num_users, int trials,
                             std::uint64_t seed, int threads = 1);

}  // namespace oia
