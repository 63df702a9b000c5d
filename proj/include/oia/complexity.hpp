// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "oia/schemes.hpp"

namespace oia {

/// Flop costs of the elementary matrix operations on an m x n complex
/// matrix (m >= n), counting one real addition/multiplication/division as
/// one flop: scaling or adding 2mn, Frobenius norm 4mn, the Gram product
/// G G^H and Gram-Schmidt orthogonalization 8mn^2 - 2mn, and the SVD
/// 24m^2n + 48mn^2 + 54n^3.
enum class FlopOp { ScaleOrAdd, FrobeniusNorm, Gram, GramSchmidt, Svd };

/// Exact flop count of one operation; throws InvalidShape unless m >= n >= 1.
std::int64_t op_flops(FlopOp op, std::int64_t m, std::int64_t n);

/// Closed-form feedback-computation cost of one selection scheme for K
/// users with N_R receive antennas (N_R even, M = N_R/2):
///   MAX-SNR: K (128 N_R^3 -  N_R^2 + 3N_R/2)
///   OIA1:    K (130 N_R^3 + 3N_R^2 + 3N_R/2)
///   OIA2:    K (8 N_R^3 + 2 N_R^2) + 130 N_R^3 + 3 N_R^2
/// The model is analytic and never instruments the linear-algebra code.
/// Only the three schemes above are modeled.
std::int64_t scheme_flops(SchemeId scheme, std::int64_t users,
                          std::int64_t rx_antennas);

/// scheme_flops(a) / scheme_flops(b) as a real number.
double complexity_ratio(SchemeId a, SchemeId b, std::int64_t users,
                        std::int64_t rx_antennas);

}  // namespace oia
