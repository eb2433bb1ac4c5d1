#include "spinfr/analytic.hpp"

#include <cmath>

#include "spinfr/errors.hpp"

namespace spinfr {

SolutionCoefficients solution_coefficients(const PhysicalParams& params, double t) {
  const double delta = params.detuning();
  if (delta == 0.0)
    throw std::invalid_argument("solution_coefficients: resonant case delta = 0");
  const double alpha = params.lambda_rad_per_s / delta;
  const double omega_shift = params.lambda_rad_per_s * alpha;
  const Complex g = alpha * (Complex(1.0, 0.0) - std::exp(Complex(0.0, -delta * t)));
  return SolutionCoefficients{alpha, omega_shift, g, t};
}

FaradayResult faraday_angle(const PhysicalParams& params, double t, const SpinMixture& mix) {
  const double delta = params.detuning();
  if (delta == 0.0) throw std::invalid_argument("faraday_angle: resonant case delta = 0");
  if (t < 0.0) throw std::invalid_argument("faraday_angle: negative time");
  const double lam = params.lambda_rad_per_s;
  const double ratio2 = (lam / delta) * (lam / delta);
  const double theta =
      (2.0 * mix.tau - 1.0) * (ratio2 * std::sin(delta * t) - std::sin(lam * lam * t / delta));
  return FaradayResult{theta, t, mix.tau, params};
}

FluctuationTerms faraday_fluctuation_terms(const PhysicalParams& params, double t,
                                           const SpinMixture& mix, double total_photons) {
  if (!(total_photons > 0.0))
    throw std::invalid_argument("faraday_fluctuation: photon number must be > 0");
  const double theta_plus = faraday_angle(params, t, SpinMixture(1.0)).theta_rad;
  const double swing = 2.0 * theta_plus;  // theta_plus - theta_minus
  const double shot2 = 1.0 / (4.0 * total_photons);
  const double intr2 = mix.tau * (1.0 - mix.tau) * swing * swing;
  return FluctuationTerms{std::sqrt(shot2 + intr2), std::sqrt(shot2), std::sqrt(intr2)};
}

double faraday_fluctuation(const PhysicalParams& params, double t, const SpinMixture& mix,
                           double total_photons) {
  return faraday_fluctuation_terms(params, t, mix, total_photons).total_rad;
}

StokesAngle faraday_from_stokes(double s1, double s2) {
  if (s2 == 0.0)
    throw std::invalid_argument(
        "faraday_from_stokes: <S2> = 0, polarization rotated to +/-45 degrees from the "
        "analyzer; angle extraction undefined");
  return StokesAngle{0.5 * std::atan(s1 / s2), s1 / (2.0 * s2)};
}

}  // namespace spinfr
