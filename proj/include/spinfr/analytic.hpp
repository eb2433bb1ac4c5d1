#pragma once

#include <complex>

#include "spinfr/model.hpp"

namespace spinfr {

// Coefficients of the dispersive photon-operator solution:
//   alpha = lambda / delta,  Omega = lambda * alpha = lambda^2 / delta,
//   g(t) = alpha (1 - e^{-i delta t}),  delta = omega_p - omega_e.
struct SolutionCoefficients {
  double alpha;
  double omega_shift;  // Omega, rad/s
  Complex g;           // g(t)
  double time_s;
};

SolutionCoefficients solution_coefficients(const PhysicalParams& params, double t);

struct FaradayResult {
  double theta_rad;
  double time_s;
  double tau;
  PhysicalParams params;
};

// Closed-form rotation angle
//   theta(t, tau) = (2 tau - 1) [ (lambda/delta)^2 sin(delta t) - sin(lambda^2 t / delta) ].
// Linear in the mixture: theta(t, tau) = tau theta(t,1) + (1-tau) theta(t,0),
// and theta(t,0) = -theta(t,1).
FaradayResult faraday_angle(const PhysicalParams& params, double t, const SpinMixture& mix);

struct FluctuationTerms {
  double total_rad;      // sqrt(shot^2 + intrinsic^2)
  double shot_rad;       // 1 / (2 sqrt(N))
  double intrinsic_rad;  // sqrt(tau (1-tau)) * |theta_plus - theta_minus|
};

// Angle fluctuation sqrt( 1/(4N) + tau(1-tau) (theta_+ - theta_-)^2 ).
// N is the total mean photon number <S0>.
FluctuationTerms faraday_fluctuation_terms(const PhysicalParams& params, double t,
                                           const SpinMixture& mix, double total_photons);

double faraday_fluctuation(const PhysicalParams& params, double t, const SpinMixture& mix,
                           double total_photons);

struct StokesAngle {
  double exact_rad;        // (1/2) atan(s1 / s2)
  double small_angle_rad;  // s1 / (2 s2)
};

// Rotation angle extracted from Stokes expectations. Both forms are
// returned; the small-angle form is only meaningful for |s1/s2| << 1.
// Throws std::invalid_argument when s2 == 0.
StokesAngle faraday_from_stokes(double s1, double s2);

}  // namespace spinfr
