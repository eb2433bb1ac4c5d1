#pragma once

#include <complex>

#include "spinfr/operators.hpp"

namespace spinfr {

// Transverse field components. The circular decomposition used throughout is
// e_R = (e_x - i e_y)/sqrt(2), e_L = (e_x + i e_y)/sqrt(2), which makes the
// classical Stokes parameters below agree component-wise with the quantum
// Stokes operators (s3 > 0 for right-circular light).
struct JonesVector {
  Complex e_x;
  Complex e_y;
};

struct StokesVector {
  double s0;
  double s1;
  double s2;
  double s3;

  double degree_of_polarization() const;
};

// Orientation phi in (-pi/2, pi/2] and ellipticity chi in [-pi/4, pi/4].
// Circular light (|chi| = pi/4) reports phi = 0 by convention.
struct PolarizationEllipse {
  double phi;
  double chi;
  double intensity;  // s0
};

enum class PolarizationClass { Linear, Circular, Elliptical };

// s0 = |ex|^2 + |ey|^2, s1 = |ex|^2 - |ey|^2, s2 = 2 Re(ex* ey),
// s3 = 2 Im(ex* ey). Jones-derived vectors are fully polarized:
// s1^2 + s2^2 + s3^2 = s0^2.
StokesVector jones_to_stokes(const JonesVector& j);

// Spherical relations s1 = s0 cos2chi cos2phi, s2 = s0 cos2chi sin2phi,
// s3 = s0 sin2chi. stokes_to_ellipse requires a fully polarized input
// (degree of polarization within tol::kFullyPolarized of 1).
PolarizationEllipse stokes_to_ellipse(const StokesVector& s);
StokesVector ellipse_to_stokes(const PolarizationEllipse& e);

// Rotation of (s1, s2) by twice the polarization angle; s0 and s3 are
// untouched. The handedness is fixed so that rotating by +theta adds +theta
// to the angle extracted by faraday_from_stokes: s1' picks up +s2 sin(2 theta).
StokesVector rotation_in_s1_s2(const StokesVector& s, double theta_f);

PolarizationClass classify(const PolarizationEllipse& e);

}  // namespace spinfr
