// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner: SNR sweeps, user-scaling sweeps, convergence-in-K
// studies and the flop-count table, written as CSV plus a run manifest.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oia/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte-Carlo simulator for opportunistic user selection in the "
      "three-transmitter M x 2M MIMO interference channel"};
  app.set_config("--config", "",
                 "Flat key=value configuration file; command-line flags "
                 "override file values");

  std::string experiment = "snr_sweep";
  std::vector<std::string> scheme_names;
  int m = 1;
  int n_r = -1;
  int k = 50;
  double c = 1.0;
  double dof_m = 1.0;
  double snr_start = 0.0;
  double snr_stop = 30.0;
  double snr_step = 5.0;
  int trials = 2000;
  std::uint64_t seed = 1;
  std::string out;
  int threads = 0;

  app.add_option("--experiment", experiment,
                 "snr_sweep | user_scaling | convergence_in_k | complexity_table")
      ->capture_default_str();
  app.add_option("--scheme", scheme_names,
                 "Schemes to run: OIA1 OIA2 MAX_SNR TDM1 TDM2 OPT "
                 "(repeatable; complexity_table defaults to its three)");
  app.add_option("--m", m, "Streams / transmit antennas M (N_R = 2M)")
      ->capture_default_str();
  app.add_option("--n-r", n_r, "Receive antennas; must equal 2*m when given");
  app.add_option("--k", k, "Users per group (maximum K for convergence_in_k "
                           "and complexity_table)")
      ->capture_default_str();
  app.add_option("--c", c, "Scaling constant in K(P) = max(1, round(c P^{mM}))")
      ->capture_default_str();
  app.add_option("--dof-m", dof_m, "Target DoF m in [0, M] for user_scaling")
      ->capture_default_str();
  app.add_option("--snr-start", snr_start, "First SNR point, dB")
      ->capture_default_str();
  app.add_option("--snr-stop", snr_stop, "Last SNR point, dB")
      ->capture_default_str();
  app.add_option("--snr-step", snr_step, "SNR grid step, dB")
      ->capture_default_str();
  app.add_option("--trials", trials, "Monte-Carlo trials per point")
      ->capture_default_str();
  app.add_option("--seed", seed, "Base RNG seed")->capture_default_str();
  app.add_option("--out", out,
                 "Output CSV path (default: <experiment>.csv in $OIA_OUT_DIR "
                 "or the working directory)");
  app.add_option("--threads", threads, "Worker threads; 0 = all cores")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  oia::ExperimentConfig cfg;
  const auto kind = oia::parse_experiment(experiment);
  if (!kind) {
    std::cerr << "config error: experiment: unknown value '" << experiment
              << "'\n";
    return kExitConfig;
  }
  cfg.experiment = *kind;
  for (const std::string& name : scheme_names) {
    const auto scheme = oia::parse_scheme(name);
    if (!scheme) {
      std::cerr << "config error: scheme: unknown value '" << name << "'\n";
      return kExitConfig;
    }
    cfg.schemes.push_back(*scheme);
  }
  cfg.streams = m;
  if (n_r >= 0) cfg.rx_antennas = n_r;
  cfg.users = k;
  cfg.scale_c = c;
  cfg.dof_m = dof_m;
  cfg.snr_start_db = snr_start;
  cfg.snr_stop_db = snr_stop;
  cfg.snr_step_db = snr_step;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.out_path = out;
  cfg.threads = threads;

  try {
    const std::string path = oia::run_experiment(cfg);
    std::cout << "wrote " << path << " and " << path << ".manifest\n";
  } catch (const oia::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const oia::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
