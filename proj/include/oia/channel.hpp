// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "oia/linalg.hpp"

namespace oia {

/// Dimensions and operating point of one experiment. The antenna setting is
/// fixed at N_R = 2M; the noise covariance is the identity, so `power` is
/// the transmit SNR in linear scale and each of the M streams carries P/M.
struct SystemConfig {
  int streams = 1;      // M (= N_T)
  int rx_antennas = 2;  // N_R, always 2M
  int users = 1;        // K users per group
  double power = 1.0;   // P
  std::uint64_t seed = 0;

  static SystemConfig make(int streams, int users, double power,
                           std::uint64_t seed);
  void validate() const;  // throws InvalidParams
};

/// One user's channel triple: desired link h1 and the two interfering links
/// h2, h3, each N_R x M.
struct UserChannels {
  ComplexMatrix h1;
  ComplexMatrix h2;
  ComplexMatrix h3;
};

/// Receive projection F (M x N_R) with F F^H = I_M.
using Postprocessor = ComplexMatrix;

/// K independent users, every matrix i.i.d. CN(0,1).
std::vector<UserChannels> draw_group(const SystemConfig& config,
                                     RngStream& rng);

/// Interference Gram matrix B_k = H2 H2^H + H3 H3^H (N_R x N_R, Hermitian
/// PSD, rank 2M almost surely).
ComplexMatrix interference_gram(const UserChannels& user);

/// log2 det(I_M + (P/M) sum_{i=1..3} F Hi Hi^H F^H).
double rate_plus(const Postprocessor& f, const UserChannels& user, double p);

/// Rate loss term: same determinant over the interferers i = 2,3 only.
double rate_minus(const Postprocessor& f, const UserChannels& user, double p);

/// Achievable rate after projection,
///   log2 det(I_M + (P/M) F H1 H1^H F^H (I_M + (P/M) sum_{i=2,3} F Hi Hi^H F^H)^{-1}),
/// evaluated directly (whitened form); equals rate_plus - rate_minus.
double achievable_rate(const Postprocessor& f, const UserChannels& user,
                       double p);

/// Joint-decoding capacity without postprocessing,
///   log2 det(I_{N_R} + (P/M) H1 H1^H (I_{N_R} + (P/M) sum_{i=2,3} Hi Hi^H)^{-1}).
/// Dominates achievable_rate for every semi-unitary F.
double capacity_joint(const UserChannels& user, double p);

}  // namespace oia
