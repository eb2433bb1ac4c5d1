#pragma once

#include <iosfwd>
#include <string>

#include "spinfr/config.hpp"

namespace spinfr {

enum class SweepKind { AngleVsTimeTau, NoiseVsTimeTau, NoiseVsPhotons, OracleCheck, Estimate };

const char* sweep_kind_name(SweepKind kind);

// CSV header for each sweep kind (stable schema):
//   angle_vs_time_tau: time_s,tau,theta_rad,theta_mrad
//   noise_vs_time_tau: time_s,tau,delta_theta_rad,shot_term_rad,intrinsic_term_rad
//   noise_vs_photons:  n_photons,tau,delta_theta_rad,shot_term_rad,intrinsic_term_rad
//   oracle_check:      alpha,theta_exact_rad,theta_analytic_rad,rel_err,
//                      fluct_exact_rad,fluct_analytic_rad,heisenberg_residual
//   estimate:          tau_true,tau_est_low,tau_est_high,tau_selected,bootstrap_se
std::string csv_header(SweepKind kind);

struct SweepSummary {
  SweepKind kind;
  std::size_t rows = 0;
  std::string message;  // one human-readable line with the extrema
};

// Evaluates the sweep on the configured grids and streams CSV rows in grid
// order. Deterministic for a fixed config + seed, independent of the worker
// thread count (SPINFR_THREADS, default: hardware parallelism).
SweepSummary run_sweep(SweepKind kind, const RunConfig& cfg, std::ostream& out);

// Writes to cfg.output_path (io_error on failure) and returns the summary.
SweepSummary run_sweep_to_file(SweepKind kind, const RunConfig& cfg);

}  // namespace spinfr
