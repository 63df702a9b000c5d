// SPDX-License-Identifier: Apache-2.0
#include "oia/simulate.hpp"

#include <atomic>
#include <cmath>
#include <string>

#include "oia/parallel.hpp"

namespace oia {

namespace {

constexpr int kMaxRedrawsPerTrial = 10;

struct MeanAndError {
  double mean = 0.0;
  double std_error = 0.0;
};

// Two-pass, fixed-order reduction: deterministic for any thread count.
MeanAndError summarize(const std::vector<double>& values) {
  MeanAndError out;
  double sum = 0.0;
  for (double v : values) sum += v;
  out.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double sq = 0.0;
  for (double v : values) sq += (v - out.mean) * (v - out.mean);
  const double sample_var = sq / static_cast<double>(values.size() - 1);
  out.std_error = std::sqrt(sample_var / static_cast<double>(values.size()));
  return out;
}

}  // namespace

UserCountRule UserCountRule::fixed(int users) {
  UserCountRule rule;
  rule.fixed_ = true;
  rule.users_ = users;
  return rule;
}

UserCountRule UserCountRule::scaled(double c, double dof_m) {
  UserCountRule rule;
  rule.fixed_ = false;
  rule.c_ = c;
  rule.dof_m_ = dof_m;
  return rule;
}

int UserCountRule::users_for(double power, int streams) const {
  if (fixed_) return users_;
  const double k = c_ * std::pow(power, dof_m_ * streams);
  return std::max(1, static_cast<int>(std::llround(std::min(k, 1e9))));
}

void UserCountRule::validate(int streams) const {
  if (fixed_) {
    if (users_ < 1) throw InvalidParams("user rule: K must be >= 1");
    return;
  }
  if (!(c_ > 0.0)) throw InvalidParams("user rule: c must be positive");
  if (!(dof_m_ >= 0.0 && dof_m_ <= streams)) {
    throw InvalidParams("user rule: target DoF m must lie in [0, M]");
  }
}

void SweepSpec::validate() const {
  if (streams < 1) throw InvalidParams("sweep: M must be >= 1");
  if (trials < 1) throw InvalidParams("sweep: trials must be >= 1");
  if (snr_db.empty()) throw InvalidParams("sweep: SNR list must be non-empty");
  for (std::size_t i = 1; i < snr_db.size(); ++i) {
    if (!(snr_db[i] > snr_db[i - 1])) {
      throw InvalidParams("sweep: SNR list must be strictly increasing");
    }
  }
  users.validate(streams);
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();

  SweepResult result;
  std::atomic<std::int64_t> redraws{0};

  for (std::size_t si = 0; si < spec.snr_db.size(); ++si) {
    const double power = snr_db_to_power(spec.snr_db[si]);
    const int group_size = spec.users.users_for(power, spec.streams);
    const SystemConfig config =
        SystemConfig::make(spec.streams, group_size, power, spec.seed);

    std::vector<double> rates(static_cast<std::size_t>(spec.trials));
    parallel_for_index(spec.trials, threads, [&](std::int64_t t) {
      RngStream rng(derive_seed(spec.seed, si, static_cast<std::uint64_t>(t)));
      for (int attempt = 0;; ++attempt) {
        try {
          const std::vector<UserChannels> group = draw_group(config, rng);
          rates[static_cast<std::size_t>(t)] =
              run_scheme(spec.scheme, group, power).rate;
          break;
        } catch (const RankDeficient&) {
          if (attempt >= kMaxRedrawsPerTrial) throw;
          redraws.fetch_add(1, std::memory_order_relaxed);
        }
      }
    });

    const MeanAndError stats = summarize(rates);
    result.points.push_back({spec.snr_db[si], group_size, stats.mean,
                             stats.std_error, spec.trials});
  }

  result.redraws = redraws.load();
  return result;
}

double dof_slope(std::span<const std::pair<double, double>> rate_vs_snr_db,
                 double snr_lo_db, double snr_hi_db) {
  std::vector<double> x;  // log2(P)
  std::vector<double> y;
  for (const auto& [snr, rate] : rate_vs_snr_db) {
    if (snr >= snr_lo_db - 1e-9 && snr <= snr_hi_db + 1e-9) {
      x.push_back(std::log2(snr_db_to_power(snr)));
      y.push_back(rate);
    }
  }
  if (x.size() < 2) {
    throw WindowTooNarrow("dof_slope: need at least two SNR points in [" +
                          std::to_string(snr_lo_db) + ", " +
                          std::to_string(snr_hi_db) + "] dB");
  }
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(x.size());
  mean_y /= static_cast<double>(x.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mean_x) * (y[i] - mean_y);
    den += (x[i] - mean_x) * (x[i] - mean_x);
  }
  return num / den;
}

double dof_slope(const SweepResult& result, double snr_lo_db,
                 double snr_hi_db) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(result.points.size());
  for (const SweepPoint& p : result.points) {
    pts.emplace_back(p.snr_db, p.mean_rate);
  }
  return dof_slope(pts, snr_lo_db, snr_hi_db);
}

double interference_free_reference(int streams, double power, int trials,
                                   std::uint64_t seed, int threads) {
  if (streams < 1 || trials < 1) {
    throw InvalidParams("interference_free_reference: M and trials must be >= 1");
  }
  if (!(power > 0.0)) {
    throw InvalidParams("interference_free_reference: P must be positive");
  }
  const double c = power / streams;
  std::vector<double> rates(static_cast<std::size_t>(trials));
  parallel_for_index(trials, threads, [&](std::int64_t t) {
    RngStream rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const ComplexMatrix h = random_gaussian_matrix(streams, streams, rng);
    rates[static_cast<std::size_t>(t)] =
        log_det_identity_plus(h * h.adjoint(), c);
  });
  double sum = 0.0;
  for (double r : rates) sum += r;
  return sum / trials;
}

}  // namespace oia
