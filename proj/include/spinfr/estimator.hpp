#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spinfr/analytic.hpp"

namespace spinfr {

// Measured fluctuation triplet. delta_theta_m is the noise level at the
// rotation-angle extremum, delta_theta_m0 at the zero crossing (the
// maximally-mixed reference), delta_theta_b the white background.
// Consistent inputs satisfy m0 >= m >= b; anything else would push the
// purity radicand outside [0, 1] and is rejected at construction.
struct NoiseBudget {
  double delta_theta_m;
  double delta_theta_m0;
  double delta_theta_b;
  double n_photons;  // finite-N correction scale

  NoiseBudget(double m, double m0, double b, double n_photons);
};

enum class PurityMode { FiniteN, LargeN, BackgroundSubtracted };

struct PurityEstimate {
  double tau_low;   // (1 - sqrt(radicand)) / 2
  double tau_high;  // (1 + sqrt(radicand)) / 2; tau_low + tau_high = 1
  std::optional<double> selected;      // present when a sign resolves the branch
  std::optional<double> bootstrap_se;  // present for record-based estimates
  bool boundary_clipped = false;       // radicand clipped onto [0, 1]
  bool zero_gated = false;             // extremum mean consistent with zero
};

// Purity from noise levels.
//   FiniteN:             radicand = (m0^2 - m^2) / (m0^2 - 1/(4N))
//   LargeN:              radicand = 1 - m^2 / m0^2
//   BackgroundSubtracted: radicand = 1 - (m^2 - b^2) / (m0^2 - b^2)
// Values within tol::kRadicandSlop of [0, 1] are clipped to the boundary;
// beyond that the inputs are inconsistent and a numerical_error is thrown.
// When extremum_sign is supplied, a positive sign selects the tau > 1/2
// branch (the rotation angle of the spin-up-dominated state is positive at
// the module's operating points).
PurityEstimate purity_from_noise(const NoiseBudget& budget, PurityMode mode,
                                 std::optional<double> extremum_sign = std::nullopt);

// n_shots independent angle measurements: Gaussian with mean theta(t, tau)
// and standard deviation sqrt(fluctuation^2 + background_sigma^2) (quantum
// fluctuation and white background are uncorrelated). Deterministic per seed.
std::vector<double> simulate_record(const PhysicalParams& params, const SpinMixture& mix,
                                    double t, double n_photons, int n_shots,
                                    double background_sigma, std::uint64_t seed);

// Background-only record: Gaussian, zero mean, the white-noise sigma
// (a detuned-probe measurement).
std::vector<double> simulate_background(double sigma, int n_shots, std::uint64_t seed);

struct RecordEstimateOptions {
  int bootstrap_resamples = 1000;
  // Branch selection needs a meaningful sign. When the extremum-record mean
  // is within this many standard errors of zero the measured angle is
  // consistent with zero, which itself pins tau = 1/2.
  double zero_gate_sigmas = 2.5;
  std::uint64_t bootstrap_seed = 0x9e3779b97f4a7c15ULL;
};

// Sample standard deviation (n-1 normalization).
double sample_std(const std::vector<double>& record);

// Eq.-style background-subtracted purity estimate from three measurement
// records. Sample noise can push the measured budget across the m0 >= m
// boundary; those cases clip the radicand onto the boundary instead of
// erroring (the estimate saturates at tau = 1/2). Throws numerical_error on
// degenerate records (zero variance after background subtraction).
PurityEstimate estimate_from_records(const std::vector<double>& extremum_record,
                                     const std::vector<double>& zero_crossing_record,
                                     const std::vector<double>& background_record,
                                     const RecordEstimateOptions& options = {});

}  // namespace spinfr
