#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rodnet/phase_diagram.hpp"

namespace rodnet {

enum class Command { phase_diagram, op_curve, stress_curve, energy_surface, verify, threshold };

std::string command_name(Command c);
Command command_from_name(const std::string& name);

struct SweepSpec {
  double lambda_min = 0.6;
  double lambda_max = 4.5;
  double rho_min = 0.05;
  double rho_max = 2.0;
  int points = 160;
  std::vector<double> aspect_ratios = {0.01, 1.0, 10.0, 80.0};

  bool operator==(const SweepSpec&) const = default;
};

struct SurfaceSpec {
  int s_samples = 120;
  int z_samples = 120;
  double z_min = 0.05;
  double z_max = 4.0;

  bool operator==(const SurfaceSpec&) const = default;
};

/// Fully-resolved experiment description. Parsed strictly: unknown sections
/// or keys are rejected, every numeric field is range-checked, and the echo
/// of the effective values reparses to an equal config.
struct ExperimentConfig {
  Command command = Command::verify;
  Protocol protocol = Protocol::plane_strain;  // phase-diagram cells
  MaterialParams material;
  BulkWellParams wells;
  GridSpec grid;
  SweepSpec sweep;
  SurfaceSpec surface;
  SolverOptions solver;
  double stress_fd_step = 1e-5;
  long verify_trials = 10000;
  std::string out_dir = "out";
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = runtime default
  bool strict = false;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parse the sectioned key-value text. Throws ConfigError with a line number
/// on syntax errors, unknown keys, or range violations (naming the field).
ExperimentConfig parse_config(const std::string& text);

/// Canonical text form of the effective configuration.
std::string echo_config(const ExperimentConfig& cfg);

/// Execute the experiment, writing artifacts (atomically) under cfg.out_dir
/// and a one-line summary to `log`. Returns a process exit status: nonzero
/// when strict mode sees any per-cell failure or a verification check fails.
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace rodnet
