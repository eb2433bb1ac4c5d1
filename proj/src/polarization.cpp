#include "spinfr/polarization.hpp"

#include <cmath>
#include <numbers>

#include "spinfr/errors.hpp"

namespace spinfr {

namespace {
constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kClassifyTol = 1e-9;
}  // namespace

double StokesVector::degree_of_polarization() const {
  if (!(s0 > 0.0)) throw std::invalid_argument("StokesVector: s0 must be positive");
  return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3) / s0;
}

StokesVector jones_to_stokes(const JonesVector& j) {
  const double ax2 = std::norm(j.e_x);
  const double ay2 = std::norm(j.e_y);
  if (ax2 == 0.0 && ay2 == 0.0)
    throw std::invalid_argument("jones_to_stokes: zero field");
  const Complex cross = std::conj(j.e_x) * j.e_y;
  return StokesVector{ax2 + ay2, ax2 - ay2, 2.0 * cross.real(), 2.0 * cross.imag()};
}

PolarizationEllipse stokes_to_ellipse(const StokesVector& s) {
  const double dop = s.degree_of_polarization();
  if (std::abs(dop - 1.0) > tol::kFullyPolarized)
    throw std::invalid_argument("stokes_to_ellipse: input is not fully polarized (p = " +
                                std::to_string(dop) + ")");
  const double chi = 0.5 * std::asin(std::clamp(s.s3 / s.s0, -1.0, 1.0));
  double phi = 0.0;
  if (std::abs(std::abs(chi) - kQuarterPi) > kClassifyTol) {
    phi = 0.5 * std::atan2(s.s2, s.s1);
    if (phi <= -kHalfPi) phi += std::numbers::pi;  // fold onto (-pi/2, pi/2]
  }
  return PolarizationEllipse{phi, chi, s.s0};
}

StokesVector ellipse_to_stokes(const PolarizationEllipse& e) {
  if (!(e.intensity > 0.0))
    throw std::invalid_argument("ellipse_to_stokes: intensity must be positive");
  const double c2chi = std::cos(2.0 * e.chi);
  return StokesVector{e.intensity, e.intensity * c2chi * std::cos(2.0 * e.phi),
                      e.intensity * c2chi * std::sin(2.0 * e.phi),
                      e.intensity * std::sin(2.0 * e.chi)};
}

StokesVector rotation_in_s1_s2(const StokesVector& s, double theta_f) {
  const double c = std::cos(2.0 * theta_f);
  const double sn = std::sin(2.0 * theta_f);
  // +theta adds +theta to the extracted angle: s1 gains +s2 sin(2 theta).
  return StokesVector{s.s0, s.s1 * c + s.s2 * sn, s.s2 * c - s.s1 * sn, s.s3};
}

PolarizationClass classify(const PolarizationEllipse& e) {
  if (std::abs(e.chi) < kClassifyTol) return PolarizationClass::Linear;
  if (std::abs(std::abs(e.chi) - kQuarterPi) < kClassifyTol) return PolarizationClass::Circular;
  return PolarizationClass::Elliptical;
}

}  // namespace spinfr
