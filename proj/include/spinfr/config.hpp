#pragma once

#include <cstdint>
#include <string>

#include "spinfr/model.hpp"
#include "spinfr/oracle.hpp"

namespace spinfr {

struct GridSpec {
  double start;
  double stop;
  int steps;
};

struct LogGridSpec {
  double min;
  double max;
  int points;
};

struct EstimateSettings {
  int n_shots = 10000;
  double background_sigma_rad = 5e-4;
  int bootstrap_resamples = 1000;
};

struct RunConfig {
  PhysicalParams params = preset::paper_params();
  double n_photons_total = preset::kPaperPhotonNumber;
  double tau = 1.0;
  double time_s = preset::kPaperTimeSeconds;

  GridSpec time_grid{0.0, 40e-12, 201};
  GridSpec tau_grid{0.0, 1.0, 5};
  LogGridSpec photon_grid{1e2, 1e10, 33};

  OracleSettings oracle;
  int oracle_halvings = 2;

  EstimateSettings estimate;

  std::string output_path;
  std::uint64_t seed = 0;
};

// Strict INI-style parser: [section] headers, key = value lines, '#' or ';'
// comments. Unknown keys, duplicate keys, bad values and violated invariants
// are all config_error with the line number. Physical quantities carry their
// unit in the key name (lambda_rad_per_s, time_start_ps, ...).
//
// Recognized keys:
//   [model]  preset ("paper") | lambda_rad_per_s, omega_p_rad_per_s,
//            omega_e_rad_per_s, n_photons_total, tau, time_ps
//   [sweep]  time_start_ps, time_stop_ps, time_steps,
//            tau_start, tau_stop, tau_steps,
//            photon_min, photon_max, photon_points
//   [oracle] cutoff, scaled_photons_per_mode, tail_tolerance, max_dimension,
//            halvings
//   [estimate] n_shots, background_sigma_rad, bootstrap_resamples
//   [output] path, seed
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

}  // namespace spinfr
