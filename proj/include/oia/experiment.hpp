// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oia/simulate.hpp"

namespace oia {

enum class ExperimentKind { SnrSweep, UserScaling, ConvergenceInK, ComplexityTable };

const char* experiment_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);

/// Full description of one CLI run. Flag and file keys use the same names
/// as the members (experiment, scheme, m, k, c, dof_m, snr_start, snr_stop,
/// snr_step, trials, seed, out, threads, optional n_r).
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::SnrSweep;
  std::vector<SchemeId> schemes;       // complexity_table defaults to its three
  int streams = 1;                     // --m
  std::optional<int> rx_antennas;      // --n-r; must equal 2*m when given
  int users = 50;                      // --k (max K for convergence/complexity)
  double scale_c = 1.0;                // --c in K(P) = max(1, round(c P^{mM}))
  double dof_m = 1.0;                  // --dof-m, target DoF in [0, M]
  double snr_start_db = 0.0;
  double snr_stop_db = 30.0;
  double snr_step_db = 5.0;
  int trials = 2000;
  std::uint64_t seed = 1;
  std::string out_path;                // empty: default name, see output_path()
  int threads = 0;                     // 0 = hardware concurrency

  void validate() const;               // throws ConfigError
  std::vector<double> snr_grid() const;

  /// Resolved output file: out_path when set; otherwise
  /// "<experiment>.csv" inside $OIA_OUT_DIR (or the working directory).
  std::string output_path() const;
};

/// Runs the experiment, writes the CSV at the resolved output path and a
/// "<csv>.manifest" beside it, and returns the CSV path. Sweep CSVs carry
/// the header scheme,M,K,snr_db,mean_rate,std_err,trials; the complexity
/// table carries scheme,K,n_r,flops. CSV bodies are byte-identical for a
/// fixed seed; only the manifest holds a timestamp.
std::string run_experiment(const ExperimentConfig& config);

/// Fixed CSV number format (6 significant digits).
std::string format_csv_value(double value);

}  // namespace oia
