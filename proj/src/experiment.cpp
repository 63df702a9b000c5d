// SPDX-License-Identifier: Apache-2.0
#include "oia/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "oia/complexity.hpp"

namespace oia {

namespace {

constexpr const char* kVersion = "oia-sim 1.0.0";

std::string scheme_list_string(const std::vector<SchemeId>& schemes) {
  std::string out;
  for (SchemeId s : schemes) {
    if (!out.empty()) out += ' ';
    out += scheme_name(s);
  }
  return out;
}

// Decade grid 1, 10, 100, ... up to `max`, with `max` appended when it is
// not itself a decade.
std::vector<int> decade_grid(int max) {
  std::vector<int> grid;
  for (long long k = 1; k <= max; k *= 10) grid.push_back(static_cast<int>(k));
  if (grid.empty() || grid.back() != max) grid.push_back(max);
  return grid;
}

// 1-2-5 logarithmic grid up to `max` for the complexity table.
std::vector<int> one_two_five_grid(int max) {
  std::vector<int> grid;
  for (long long base = 1; base <= max; base *= 10) {
    for (long long mult : {1LL, 2LL, 5LL}) {
      const long long k = base * mult;
      if (k <= max) grid.push_back(static_cast<int>(k));
    }
  }
  if (grid.empty() || grid.back() != max) grid.push_back(max);
  return grid;
}

void append_sweep_rows(std::string& csv, SchemeId scheme, int streams,
                       const SweepResult& result) {
  for (const SweepPoint& p : result.points) {
    csv += scheme_name(scheme);
    csv += ',';
    csv += std::to_string(streams);
    csv += ',';
    csv += std::to_string(p.users);
    csv += ',';
    csv += format_csv_value(p.snr_db);
    csv += ',';
    csv += format_csv_value(p.mean_rate);
    csv += ',';
    csv += format_csv_value(p.std_error);
    csv += ',';
    csv += std::to_string(p.trials);
    csv += '\n';
  }
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file: " + path);
  out << body;
  out.flush();
  if (!out.good()) throw IoError("failed while writing: " + path);
}

std::string manifest_body(const ExperimentConfig& cfg) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t stamp = std::chrono::system_clock::to_time_t(now);
  char time_buf[64];
  std::strftime(time_buf, sizeof time_buf, "%Y-%m-%dT%H:%M:%SZ",
                std::gmtime(&stamp));

  std::ostringstream out;
  out << "version=" << kVersion << '\n';
  out << "generated_at=" << time_buf << '\n';
  out << "experiment=" << experiment_name(cfg.experiment) << '\n';
  out << "scheme=" << scheme_list_string(cfg.schemes) << '\n';
  out << "m=" << cfg.streams << '\n';
  out << "n_r=" << (cfg.rx_antennas ? *cfg.rx_antennas : 2 * cfg.streams) << '\n';
  out << "k=" << cfg.users << '\n';
  out << "c=" << format_csv_value(cfg.scale_c) << '\n';
  out << "dof_m=" << format_csv_value(cfg.dof_m) << '\n';
  out << "snr_start=" << format_csv_value(cfg.snr_start_db) << '\n';
  out << "snr_stop=" << format_csv_value(cfg.snr_stop_db) << '\n';
  out << "snr_step=" << format_csv_value(cfg.snr_step_db) << '\n';
  out << "trials=" << cfg.trials << '\n';
  out << "seed=" << cfg.seed << '\n';
  return out.str();
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::SnrSweep: return "snr_sweep";
    case ExperimentKind::UserScaling: return "user_scaling";
    case ExperimentKind::ConvergenceInK: return "convergence_in_k";
    case ExperimentKind::ComplexityTable: return "complexity_table";
  }
  throw ConfigError("unknown experiment kind");
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (ExperimentKind kind :
       {ExperimentKind::SnrSweep, ExperimentKind::UserScaling,
        ExperimentKind::ConvergenceInK, ExperimentKind::ComplexityTable}) {
    if (name == experiment_name(kind)) return kind;
  }
  return std::nullopt;
}

std::string format_csv_value(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void ExperimentConfig::validate() const {
  if (streams < 1) throw ConfigError("m: must be >= 1");
  if (rx_antennas && *rx_antennas != 2 * streams) {
    throw ConfigError("n_r: must equal 2*m (got n_r = " +
                      std::to_string(*rx_antennas) + ", m = " +
                      std::to_string(streams) + ")");
  }
  if (users < 1) throw ConfigError("k: must be >= 1");
  if (trials < 1) throw ConfigError("trials: must be >= 1");
  if (!(scale_c > 0.0)) throw ConfigError("c: must be positive");
  if (!(dof_m >= 0.0 && dof_m <= streams)) {
    throw ConfigError("dof_m: must lie in [0, m]");
  }
  if (schemes.empty() && experiment != ExperimentKind::ComplexityTable) {
    throw ConfigError("scheme: at least one scheme required");
  }
  if (experiment == ExperimentKind::ComplexityTable) {
    for (SchemeId s : schemes) {
      if (s != SchemeId::MaxSnr && s != SchemeId::Oia1 && s != SchemeId::Oia2) {
        throw ConfigError(std::string("scheme: no flop model for ") +
                          scheme_name(s));
      }
    }
  }
  if (experiment == ExperimentKind::SnrSweep ||
      experiment == ExperimentKind::UserScaling) {
    if (!(snr_step_db > 0.0)) throw ConfigError("snr_step: must be positive");
    if (snr_stop_db < snr_start_db) {
      throw ConfigError("snr_stop: must be >= snr_start");
    }
  }
}

std::vector<double> ExperimentConfig::snr_grid() const {
  std::vector<double> grid;
  for (double snr = snr_start_db; snr <= snr_stop_db + 1e-9;
       snr += snr_step_db) {
    grid.push_back(snr);
  }
  return grid;
}

std::string ExperimentConfig::output_path() const {
  if (!out_path.empty()) return out_path;
  std::string name = std::string(experiment_name(experiment)) + ".csv";
  if (const char* dir = std::getenv("OIA_OUT_DIR"); dir && *dir) {
    std::string base(dir);
    if (base.back() != '/') base += '/';
    return base + name;
  }
  return name;
}

std::string run_experiment(const ExperimentConfig& config) {
  config.validate();

  std::string csv;
  switch (config.experiment) {
    case ExperimentKind::SnrSweep: {
      csv = "scheme,M,K,snr_db,mean_rate,std_err,trials\n";
      for (SchemeId scheme : config.schemes) {
        SweepSpec spec{scheme, config.streams,
                       UserCountRule::fixed(config.users), config.snr_grid(),
                       config.trials, config.seed};
        append_sweep_rows(csv, scheme, config.streams,
                          run_sweep(spec, config.threads));
      }
      break;
    }
    case ExperimentKind::UserScaling: {
      csv = "scheme,M,K,snr_db,mean_rate,std_err,trials\n";
      for (SchemeId scheme : config.schemes) {
        SweepSpec spec{scheme, config.streams,
                       UserCountRule::scaled(config.scale_c, config.dof_m),
                       config.snr_grid(), config.trials, config.seed};
        append_sweep_rows(csv, scheme, config.streams,
                          run_sweep(spec, config.threads));
      }
      break;
    }
    case ExperimentKind::ConvergenceInK: {
      csv = "scheme,M,K,snr_db,mean_rate,std_err,trials\n";
      for (SchemeId scheme : config.schemes) {
        for (int k : decade_grid(config.users)) {
          SweepSpec spec{scheme, config.streams, UserCountRule::fixed(k),
                         {config.snr_start_db}, config.trials, config.seed};
          append_sweep_rows(csv, scheme, config.streams,
                            run_sweep(spec, config.threads));
        }
      }
      break;
    }
    case ExperimentKind::ComplexityTable: {
      csv = "scheme,K,n_r,flops\n";
      const std::vector<SchemeId> schemes =
          config.schemes.empty()
              ? std::vector<SchemeId>{SchemeId::MaxSnr, SchemeId::Oia1,
                                      SchemeId::Oia2}
              : config.schemes;
      const int n_r =
          config.rx_antennas ? *config.rx_antennas : 2 * config.streams;
      for (SchemeId scheme : schemes) {
        for (int k : one_two_five_grid(config.users)) {
          csv += scheme_name(scheme);
          csv += ',';
          csv += std::to_string(k);
          csv += ',';
          csv += std::to_string(n_r);
          csv += ',';
          csv += std::to_string(scheme_flops(scheme, k, n_r));
          csv += '\n';
        }
      }
      break;
    }
  }

  const std::string path = config.output_path();
  write_file(path, csv);
  write_file(path + ".manifest", manifest_body(config));
  return path;
}

}  // namespace oia
