#pragma once

#include <complex>

#include "spinfr/operators.hpp"

namespace spinfr {

// Model knobs. hbar = 1 throughout: every energy is an angular frequency in
// rad/s, and times are seconds.
struct PhysicalParams {
  double lambda_rad_per_s;   // photon-electron coupling
  double omega_p_rad_per_s;  // probe photon frequency
  double omega_e_rad_per_s;  // electron transition frequency (CU <-> VU gap)

  PhysicalParams(double lambda, double omega_p, double omega_e);

  double detuning() const { return omega_p_rad_per_s - omega_e_rad_per_s; }
  double coupling_ratio() const;  // |lambda / detuning|

  // The closed-form solution holds only for small coupling ratio; callers
  // should surface a warning when this is false.
  bool weak_coupling() const { return coupling_ratio() <= 0.1; }
};

namespace preset {

// Operating point used by the default configuration: lambda = 9.8e10 rad/s,
// omega_p = 2.47e15 rad/s (760 nm probe), omega_e = 2.48e15 rad/s,
// interaction time 20 ps, 5e5 probe photons.
PhysicalParams paper_params();
inline constexpr double kPaperTimeSeconds = 20e-12;
inline constexpr double kPaperPhotonNumber = 5e5;

}  // namespace preset

// Coherent amplitudes nu_m = N_m e^{i theta_m}; mean photon numbers N_m^2.
struct CoherentAmplitudes {
  double n_l;      // amplitude magnitude N_L >= 0
  double n_r;      // amplitude magnitude N_R >= 0
  double theta_l;  // phase, radians
  double theta_r;

  CoherentAmplitudes(double n_l, double n_r, double theta_l, double theta_r);

  // +45 degree linear polarization: N_L = N_R and theta_L - theta_R = pi/2,
  // with N_L^2 + N_R^2 = total_photons.
  static CoherentAmplitudes linear_45(double total_photons);

  Complex nu_l() const;
  Complex nu_r() const;
  double mean_photons_l() const { return n_l * n_l; }
  double mean_photons_r() const { return n_r * n_r; }
  double mean_photons_total() const { return mean_photons_l() + mean_photons_r(); }
};

// Spin preparation: rho_e = tau |CU><CU| + (1 - tau) |CD><CD|.
struct SpinMixture {
  double tau;
  explicit SpinMixture(double tau);
};

enum class HamiltonianPart { Photon, Electron, Interaction, Total };

// Photon part:      omega_p (aL^dag aL + aR^dag aR)
// Electron part:    (omega_e / 2) (sigma_uz + sigma_dz), so the CU <-> VU
//                   transition costs exactly omega_e. (With the +/-1
//                   eigenvalues of sigma_z, the 1/2 keeps the level gap equal
//                   to the transition frequency the detuning is defined
//                   against; without it the gap would be 2 omega_e and the
//                   closed-form solution would not describe the dynamics.)
// Interaction part: lambda (aL sigma_u+ + aL^dag sigma_u-)
//                 + lambda (aR sigma_d+ + aR^dag sigma_d-),
//                   equal couplings on the two channels.
OperatorMatrix build_hamiltonian(HamiltonianPart part, const PhysicalParams& params,
                                 const CompositeBasis& basis);

// Truncated, renormalized coherent vector with expansion coefficients
// nu^n e^{-|nu|^2/2} / sqrt(n!). Throws numerical_error naming the required
// cutoff when the discarded Poisson tail exceeds tail_tol.
Vector coherent_vector(Complex nu, const FockTruncation& fock,
                       double tail_tol = tol::kCoherentTailDefault);

// |nu_L, nu_R> tensor |level>.
Vector product_state_vector(const CoherentAmplitudes& amps, ElectronLevel level,
                            const CompositeBasis& basis,
                            double tail_tol = tol::kCoherentTailDefault);

// |nu_L, nu_R><nu_L, nu_R| tensor (tau |CU><CU| + (1 - tau)|CD><CD|).
Matrix initial_density_matrix(const CoherentAmplitudes& amps, const SpinMixture& mix,
                              const CompositeBasis& basis,
                              double tail_tol = tol::kCoherentTailDefault);

struct StokesOperators {
  OperatorMatrix s0;  // aL^dag aL + aR^dag aR
  OperatorMatrix s1;  // aL^dag aR + aR^dag aL
  OperatorMatrix s2;  // i (aL^dag aR - aR^dag aL)
  OperatorMatrix s3;  // aR^dag aR - aL^dag aL
};

StokesOperators stokes_operators(const CompositeBasis& basis);

// Total excitation number aL^dag aL + aR^dag aR + (sigma_uz + sigma_dz)/2.
// Commutes with the total Hamiltonian: each interaction term converts one
// photon into one electron excitation.
OperatorMatrix excitation_number(const CompositeBasis& basis);

}  // namespace spinfr
