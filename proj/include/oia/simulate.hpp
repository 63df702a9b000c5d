// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oia/schemes.hpp"

namespace oia {

inline double snr_db_to_power(double snr_db) {
  return std::pow(10.0, snr_db / 10.0);
}

/// Group size rule: either a fixed K or the scaling law
/// K(P) = max(1, round(c * P^(m*M))) for a target DoF m in [0, M].
class UserCountRule {
 public:
  static UserCountRule fixed(int users);
  static UserCountRule scaled(double c, double dof_m);

  int users_for(double power, int streams) const;
  bool is_fixed() const { return fixed_; }
  void validate(int streams) const;

 private:
  bool fixed_ = true;
  int users_ = 1;
  double c_ = 1.0;
  double dof_m_ = 1.0;
};

struct SweepSpec {
  SchemeId scheme = SchemeId::Oia2;
  int streams = 1;
  UserCountRule users = UserCountRule::fixed(1);
  std::vector<double> snr_db;  // non-empty, strictly increasing
  int trials = 1;
  std::uint64_t seed = 0;

  void validate() const;  // throws InvalidParams
};

struct SweepPoint {
  double snr_db = 0.0;
  int users = 0;
  double mean_rate = 0.0;
  double std_error = 0.0;  // sample std / sqrt(trials); 0 for a single trial
  int trials = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::int64_t redraws = 0;  // degenerate draws replaced (capped per trial)
};

/// Monte-Carlo sweep over the SNR grid. Every (snr index, trial index) pair
/// owns a derived RNG stream, so a fixed seed yields a bit-identical result
/// for any thread count or execution order. A RankDeficient trial is
/// redrawn from the same stream, at most 10 times.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

/// Least-squares slope of mean rate against log2(P) over the points whose
/// SNR lies in [snr_lo_db, snr_hi_db]; the high-SNR limit of this slope is
/// the DoF. Throws WindowTooNarrow with fewer than two points in range.
double dof_slope(std::span<const std::pair<double, double>> rate_vs_snr_db,
                 double snr_lo_db, double snr_hi_db);
double dof_slope(const SweepResult& result, double snr_lo_db,
                 double snr_hi_db);

/// Monte-Carlo estimate of the interference-free M x M ergodic capacity
/// E log2 det(I_M + (P/M) H H^H) with H i.i.d. CN(0,1).
double interference_free_reference(int streams, double power, int trials,
                                   std::uint64_t seed, int threads = 1);

}  // namespace oia
