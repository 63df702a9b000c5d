// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every numbered criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.
//
// Criterion 1 is expected to fail: it checks the claimed projector-pair
// spectrum {1 +- cos^2(theta)} and the claimed tail-sum/chordal-distance
// equality, but the true spectrum of A A^H + B B^H is {1 +- cos(theta)}.
// The line prints both deviations so the solver's exactness is visible.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oia/complexity.hpp"
#include "oia/experiment.hpp"
#include "oia/grassmann.hpp"
#include "oia/parallel.hpp"
#include "oia/simulate.hpp"
#include "oracles.hpp"

using namespace oia;

namespace {

int g_threads = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

UserChannels random_user(int m, RngStream& rng) {
  UserChannels u;
  u.h1 = random_gaussian_matrix(2 * m, m, rng);
  u.h2 = random_gaussian_matrix(2 * m, m, rng);
  u.h3 = random_gaussian_matrix(2 * m, m, rng);
  return u;
}

SweepSpec oia_sweep(SchemeId scheme, int streams, UserCountRule users,
                    std::vector<double> snr_db, int trials,
                    std::uint64_t seed) {
  SweepSpec spec;
  spec.scheme = scheme;
  spec.streams = streams;
  spec.users = users;
  spec.snr_db = std::move(snr_db);
  spec.trials = trials;
  spec.seed = seed;
  return spec;
}

// 1. Spectral identities on 100 random generator pairs per M in {1,2,3},
//    max deviation < 1e-9.
Outcome criterion_spectral_identities() {
  RngStream rng(1001);
  double claimed_dev = 0.0;   // vs {1 +- cos^2} and tail-sum == d_c^2
  double corrected_dev = 0.0; // vs {1 +- cos} and tail-sum == sum(1 - cos)
  for (int m : {1, 2, 3}) {
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexMatrix a = test::random_generator(2 * m, m, rng);
      const ComplexMatrix b = test::random_generator(2 * m, m, rng);
      const RealVector spectrum = pair_gram_spectrum(a, b);
      const auto angles = principal_angles(a, b);

      double tail_claimed = 0.0;
      double tail_corrected = 0.0;
      for (int i = 0; i < m; ++i) {
        const double c = std::cos(angles[static_cast<std::size_t>(i)]);
        claimed_dev =
            std::max(claimed_dev, std::abs(spectrum[i] - (1.0 + c * c)));
        claimed_dev = std::max(
            claimed_dev, std::abs(spectrum[2 * m - 1 - i] - (1.0 - c * c)));
        corrected_dev =
            std::max(corrected_dev, std::abs(spectrum[i] - (1.0 + c)));
        corrected_dev = std::max(
            corrected_dev, std::abs(spectrum[2 * m - 1 - i] - (1.0 - c)));
        tail_claimed += 1.0 - c * c;  // sin^2 = squared chordal distance
        tail_corrected += 1.0 - c;
      }
      const double tail = min_tail_eigensum(a, b);
      claimed_dev = std::max(claimed_dev, std::abs(tail - tail_claimed));
      claimed_dev =
          std::max(claimed_dev, std::abs(tail - chordal_distance_sq(a, b)));
      corrected_dev = std::max(corrected_dev, std::abs(tail - tail_corrected));
    }
  }
  Outcome out;
  out.pass = claimed_dev < 1e-9;
  out.detail = "claimed 1+-cos^2 / tail=d_c^2 forms deviate by " +
               fmt(claimed_dev) + "; corrected 1+-cos forms deviate by " +
               fmt(corrected_dev);
  return out;
}

// 2. Rate-split identity |R - (R+ - R-)| < 1e-9 on 1000 random triples.
Outcome criterion_rate_split() {
  RngStream rng(1002);
  double max_dev = 0.0;
  for (int rep = 0; rep < 1000; ++rep) {
    const int m = 1 + rep % 3;
    const UserChannels u = random_user(m, rng);
    const Postprocessor f = test::random_postprocessor(m, 2 * m, rng);
    const double p = std::pow(10.0, -2.0 + 6.0 * rng.uniform());
    const double dev = std::abs(achievable_rate(f, u, p) -
                                (rate_plus(f, u, p) - rate_minus(f, u, p)));
    max_dev = std::max(max_dev, dev);
  }
  return {max_dev < 1e-9, "max |R - (R+ - R-)| = " + fmt(max_dev)};
}

// 3. OIA1 optimality: log2(feedback) <= rate_minus(F) + 1e-9 against 200
//    random semi-unitary F on each of 100 random users.
Outcome criterion_oia1_optimality() {
  RngStream rng(1003);
  double worst_margin = 1e300;
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 2;
    const UserChannels u = random_user(m, rng);
    const double p = std::pow(10.0, 3.0 * rng.uniform());
    const double optimal = std::log2(oia1_feedback(u, p).value);
    for (int f_rep = 0; f_rep < 200; ++f_rep) {
      const Postprocessor f = test::random_postprocessor(m, 2 * m, rng);
      worst_margin = std::min(worst_margin, rate_minus(f, u, p) - optimal);
    }
  }
  return {worst_margin >= -1e-9,
          "min over sampled F of rate_minus - log2(feedback) = " +
              fmt(worst_margin)};
}

// 4. Distortion bound at M=1, K in {10, 100}, 2e4 trials: estimate below
//    D(1,K,0.5) and within 3 standard errors of 1/(K+1).
Outcome criterion_distortion_bound() {
  bool pass = true;
  std::string detail;
  for (int k : {10, 100}) {
    const double est = min_chordal_statistic(1, k, 20000, 1004, g_threads);
    const double bound = quantization_bound({1, k, 0.5});
    // Beta(1,K) variance, analytic.
    const double se = std::sqrt(
        k / ((k + 1.0) * (k + 1.0) * (k + 2.0)) / 20000.0);
    const double target = 1.0 / (k + 1.0);
    pass = pass && est <= bound && std::abs(est - target) <= 3.0 * se;
    if (!detail.empty()) detail += "; ";
    detail += "K=" + std::to_string(k) + ": est " + fmt(est) + " vs D " +
              fmt(bound) + ", order-stat target " + fmt(target) + " +- " +
              fmt(3.0 * se);
  }
  return {pass, detail};
}

// 5. Interference-free convergence at M=1, P=10: mean OIA2 rate climbs in
//    K over {1,10,100,1000} and lands within 0.1 bits of 2.9068 at K=1000.
Outcome criterion_convergence() {
  std::vector<double> rates;
  for (int k : {1, 10, 100, 1000}) {
    const SweepSpec spec = oia_sweep(SchemeId::Oia2, 1,
                                     UserCountRule::fixed(k), {10.0}, 2000,
                                     1005);
    rates.push_back(run_sweep(spec, g_threads).points[0].mean_rate);
  }
  bool monotone = true;
  for (std::size_t i = 1; i < rates.size(); ++i) {
    monotone = monotone && rates[i] >= rates[i - 1];
  }
  const double err = std::abs(rates.back() - 2.9068);
  std::ostringstream detail;
  detail << "rates";
  for (double r : rates) detail << " " << fmt(r);
  detail << "; |rate(K=1000) - 2.9068| = " << fmt(err);
  return {monotone && err < 0.1, detail.str()};
}

// 6. Rate saturation for fixed K: OIA2, M=1, K=50, slope over 40-50 dB
//    below 0.3.
Outcome criterion_saturation() {
  const SweepSpec spec =
      oia_sweep(SchemeId::Oia2, 1, UserCountRule::fixed(50),
                {40.0, 45.0, 50.0}, 2000, 1006);
  const double slope = dof_slope(run_sweep(spec, g_threads), 40.0, 50.0);
  return {slope < 0.3, "dof slope 40-50 dB = " + fmt(slope)};
}

// 7. User scaling K(P) = round(P) at M=1 keeps the slope in [0.8, 1.05]
//    over 20-40 dB.
Outcome criterion_user_scaling() {
  const SweepSpec spec =
      oia_sweep(SchemeId::Oia2, 1, UserCountRule::scaled(1.0, 1.0),
                {20.0, 25.0, 30.0, 35.0, 40.0}, 2000, 1007);
  const double slope = dof_slope(run_sweep(spec, g_threads), 20.0, 40.0);
  return {slope >= 0.8 && slope <= 1.05,
          "dof slope 20-40 dB = " + fmt(slope)};
}

// 8. TDM duty-cycle slopes over 30-50 dB: 1/3 +- 0.05 and 2/3 +- 0.07.
Outcome criterion_tdm_slopes() {
  const std::vector<double> grid{30.0, 35.0, 40.0, 45.0, 50.0};
  const SweepSpec tdm1 = oia_sweep(SchemeId::Tdm1, 1,
                                   UserCountRule::fixed(50), grid, 2000, 1008);
  const SweepSpec tdm2 = oia_sweep(SchemeId::Tdm2, 1,
                                   UserCountRule::fixed(50), grid, 2000, 1008);
  const double s1 = dof_slope(run_sweep(tdm1, g_threads), 30.0, 50.0);
  const double s2 = dof_slope(run_sweep(tdm2, g_threads), 30.0, 50.0);
  const bool pass =
      std::abs(s1 - 1.0 / 3.0) <= 0.05 && std::abs(s2 - 2.0 / 3.0) <= 0.07;
  return {pass, "TDM1 slope " + fmt(s1) + " (target 1/3), TDM2 slope " +
                    fmt(s2) + " (target 2/3)"};
}

// 9. Scheme ordering at M=1, K=50, 30 dB over 2000 shared-seed trials:
//    OPT >= OIA1 >= OIA2 - 0.1; OIA2 > MAX-SNR.
Outcome criterion_ordering() {
  auto mean_rate = [&](SchemeId scheme) {
    const SweepSpec spec = oia_sweep(scheme, 1, UserCountRule::fixed(50),
                                     {30.0}, 2000, 1009);
    return run_sweep(spec, g_threads).points[0].mean_rate;
  };
  const double opt = mean_rate(SchemeId::Opt);
  const double oia1 = mean_rate(SchemeId::Oia1);
  const double oia2 = mean_rate(SchemeId::Oia2);
  const double maxsnr = mean_rate(SchemeId::MaxSnr);
  const bool pass = opt >= oia1 && oia1 >= oia2 - 0.1 && oia2 > maxsnr;
  return {pass, "OPT " + fmt(opt) + " >= OIA1 " + fmt(oia1) + " >= OIA2 " +
                    fmt(oia2) + " - 0.1; OIA2 > MAX_SNR " + fmt(maxsnr)};
}

// 10. Flop model: closed forms exact on {1,10,10^4} x {2,4,64}, the MAX-SNR
//     composition from elementary operations, pinned literals, and the
//     asymptotic ratios 0.984 / 0.0615 within 0.002.
Outcome criterion_complexity() {
  bool exact = scheme_flops(SchemeId::Oia2, 1, 4) == 8912 &&
               scheme_flops(SchemeId::Oia1, 10, 4) == 83740;
  for (std::int64_t k : {1LL, 10LL, 10000LL}) {
    for (std::int64_t n : {2LL, 4LL, 64LL}) {
      const std::int64_t n2 = n * n, n3 = n2 * n, tail = 3 * n / 2;
      exact = exact &&
              scheme_flops(SchemeId::MaxSnr, k, n) ==
                  k * (128 * n3 - n2 + tail) &&
              scheme_flops(SchemeId::Oia1, k, n) ==
                  k * (130 * n3 + 3 * n2 + tail) &&
              scheme_flops(SchemeId::Oia2, k, n) ==
                  k * (8 * n3 + 2 * n2) + 130 * n3 + 3 * n2;
      exact = exact && scheme_flops(SchemeId::MaxSnr, k, n) ==
                           k * (op_flops(FlopOp::Gram, n, n / 2) +
                                op_flops(FlopOp::Svd, n, n) + tail);
    }
  }
  const double r_snr = complexity_ratio(SchemeId::MaxSnr, SchemeId::Oia1,
                                        10000, 64);
  const double r_oia2 = complexity_ratio(SchemeId::Oia2, SchemeId::Oia1,
                                         10000, 64);
  const bool ratios =
      std::abs(r_snr - 0.984) <= 0.002 && std::abs(r_oia2 - 0.0615) <= 0.002;
  return {exact && ratios, "closed forms exact; ratios " + fmt(r_snr) +
                               " (0.984), " + fmt(r_oia2) + " (0.0615)"};
}

// 11. Determinism: one sweep run twice (and across thread counts) yields
//     byte-identical CSV bodies.
Outcome criterion_determinism() {
  auto read_file = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
  };
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::SnrSweep;
  cfg.schemes = {SchemeId::Oia2};
  cfg.streams = 1;
  cfg.users = 20;
  cfg.snr_start_db = 0.0;
  cfg.snr_stop_db = 20.0;
  cfg.snr_step_db = 10.0;
  cfg.trials = 300;
  cfg.seed = 1011;
  cfg.threads = g_threads;
  cfg.out_path = "/tmp/oia_acceptance_a.csv";
  run_experiment(cfg);
  cfg.out_path = "/tmp/oia_acceptance_b.csv";
  cfg.threads = 1;
  run_experiment(cfg);

  const std::string a = read_file("/tmp/oia_acceptance_a.csv");
  const std::string b = read_file("/tmp/oia_acceptance_b.csv");
  for (const char* path : {"/tmp/oia_acceptance_a.csv",
                           "/tmp/oia_acceptance_b.csv"}) {
    std::remove(path);
    std::remove((std::string(path) + ".manifest").c_str());
  }
  return {!a.empty() && a == b,
          "CSV bodies " + std::to_string(a.size()) + " bytes, " +
              (a == b ? "identical" : "DIFFER")};
}

}  // namespace

int main(int argc, char** argv) {
  g_threads = resolve_threads(0);
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::strcmp(argv[i], "--threads") == 0) {
      g_threads = std::atoi(argv[i + 1]);
    }
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "spectral identities (as stated; see header note)",
       criterion_spectral_identities},
      {2, "rate-split identity", criterion_rate_split},
      {3, "OIA1 postprocessor optimality", criterion_oia1_optimality},
      {4, "selected-user distortion bound", criterion_distortion_bound},
      {5, "convergence to the interference-free reference",
       criterion_convergence},
      {6, "fixed-K rate saturation", criterion_saturation},
      {7, "user-scaling DoF", criterion_user_scaling},
      {8, "TDM duty-cycle slopes", criterion_tdm_slopes},
      {9, "scheme ordering at high SNR", criterion_ordering},
      {10, "flop-count model", criterion_complexity},
      {11, "seed determinism of CSV output", criterion_determinism},
  };

  std::printf("acceptance suite: %zu criteria, %d worker thread(s)\n",
              criteria.size(), g_threads);
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %2d: %s (%s) [%.1f s]\n",
                out.pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                seconds);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("summary: %zu passed, %d failed\n", criteria.size() - failures,
              failures);
  return failures;
}
