#include "spinfr/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinfr/errors.hpp"

namespace spinfr {

PhysicalParams::PhysicalParams(double lambda, double omega_p, double omega_e)
    : lambda_rad_per_s(lambda), omega_p_rad_per_s(omega_p), omega_e_rad_per_s(omega_e) {
  if (!(omega_p > 0.0) || !(omega_e > 0.0))
    throw std::invalid_argument("PhysicalParams: frequencies must be strictly positive");
  if (!(lambda >= 0.0)) throw std::invalid_argument("PhysicalParams: coupling must be >= 0");
  if (detuning() == 0.0)
    throw std::invalid_argument("PhysicalParams: detuning omega_p - omega_e must be nonzero");
}

double PhysicalParams::coupling_ratio() const {
  return std::abs(lambda_rad_per_s / detuning());
}

namespace preset {

PhysicalParams paper_params() { return PhysicalParams(9.8e10, 2.47e15, 2.48e15); }

}  // namespace preset

CoherentAmplitudes::CoherentAmplitudes(double n_l_, double n_r_, double theta_l_, double theta_r_)
    : n_l(n_l_), n_r(n_r_), theta_l(theta_l_), theta_r(theta_r_) {
  if (!(n_l >= 0.0) || !(n_r >= 0.0))
    throw std::invalid_argument("CoherentAmplitudes: magnitudes must be >= 0");
}

CoherentAmplitudes CoherentAmplitudes::linear_45(double total_photons) {
  if (!(total_photons >= 0.0))
    throw std::invalid_argument("CoherentAmplitudes::linear_45: photon number must be >= 0");
  const double n0 = std::sqrt(total_photons / 2.0);
  return CoherentAmplitudes(n0, n0, std::numbers::pi / 2.0, 0.0);
}

Complex CoherentAmplitudes::nu_l() const { return std::polar(n_l, theta_l); }
Complex CoherentAmplitudes::nu_r() const { return std::polar(n_r, theta_r); }

SpinMixture::SpinMixture(double tau_) : tau(tau_) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::invalid_argument("SpinMixture: tau must lie in [0, 1], got " +
                                std::to_string(tau_));
}

OperatorMatrix build_hamiltonian(HamiltonianPart part, const PhysicalParams& params,
                                 const CompositeBasis& basis) {
  const double wp = params.omega_p_rad_per_s;
  const double we = params.omega_e_rad_per_s;
  const double lam = params.lambda_rad_per_s;

  auto photon = [&]() {
    SparseMatrix a_l = sparse_annihilation(PhotonMode::L, basis);
    SparseMatrix a_r = sparse_annihilation(PhotonMode::R, basis);
    return SparseMatrix(wp * (SparseMatrix(a_l.adjoint()) * a_l) +
                        wp * (SparseMatrix(a_r.adjoint()) * a_r));
  };
  auto electron = [&]() {
    // Level gap CU <-> VU is omega_e (sigma_z eigenvalues are +/-1).
    return SparseMatrix(0.5 * we *
                        (sparse_sigma(SigmaKind::UpZ, basis) + sparse_sigma(SigmaKind::DownZ, basis)));
  };
  auto interaction = [&]() {
    SparseMatrix a_l = sparse_annihilation(PhotonMode::L, basis);
    SparseMatrix a_r = sparse_annihilation(PhotonMode::R, basis);
    SparseMatrix up = a_l * sparse_sigma(SigmaKind::UpRaise, basis);
    SparseMatrix down = a_r * sparse_sigma(SigmaKind::DownRaise, basis);
    return SparseMatrix(lam * (up + SparseMatrix(up.adjoint())) +
                        lam * (down + SparseMatrix(down.adjoint())));
  };

  SparseMatrix h;
  switch (part) {
    case HamiltonianPart::Photon: h = photon(); break;
    case HamiltonianPart::Electron: h = electron(); break;
    case HamiltonianPart::Interaction: h = interaction(); break;
    case HamiltonianPart::Total:
      h = photon();
      h += electron();
      h += interaction();
      break;
  }
  return OperatorMatrix(Matrix(h), true);
}

Vector coherent_vector(Complex nu, const FockTruncation& fock, double tail_tol) {
  const double mean = std::norm(nu);
  const double tail = poisson_tail(mean, fock.cutoff_per_mode);
  if (tail >= tail_tol) {
    throw numerical_error(
        "coherent_vector: discarded Poisson tail " + std::to_string(tail) +
        " exceeds tolerance " + std::to_string(tail_tol) + " for mean photon number " +
        std::to_string(mean) + "; required cutoff >= " +
        std::to_string(required_cutoff(mean, tail_tol)));
  }
  Vector c(fock.dim());
  // c_n = nu^n e^{-|nu|^2/2} / sqrt(n!), built by recurrence
  c[0] = std::exp(-mean / 2.0);
  for (int n = 1; n < fock.dim(); ++n) c[n] = c[n - 1] * nu / std::sqrt(static_cast<double>(n));
  c.normalize();  // renormalize away the truncated tail
  return c;
}

Vector product_state_vector(const CoherentAmplitudes& amps, ElectronLevel level,
                            const CompositeBasis& basis, double tail_tol) {
  const Vector c_l = coherent_vector(amps.nu_l(), basis.fock_l(), tail_tol);
  const Vector c_r = coherent_vector(amps.nu_r(), basis.fock_r(), tail_tol);
  Vector psi = Vector::Zero(basis.dim());
  for (int nl = 0; nl < basis.fock_l().dim(); ++nl)
    for (int nr = 0; nr < basis.fock_r().dim(); ++nr)
      psi[basis.flat(nl, nr, level)] = c_l[nl] * c_r[nr];
  return psi;
}

Matrix initial_density_matrix(const CoherentAmplitudes& amps, const SpinMixture& mix,
                              const CompositeBasis& basis, double tail_tol) {
  const Vector up = product_state_vector(amps, ElectronLevel::CU, basis, tail_tol);
  Matrix rho = mix.tau * (up * up.adjoint());
  if (mix.tau < 1.0) {
    const Vector down = product_state_vector(amps, ElectronLevel::CD, basis, tail_tol);
    rho += (1.0 - mix.tau) * (down * down.adjoint());
  }
  return rho;
}

StokesOperators stokes_operators(const CompositeBasis& basis) {
  const SparseMatrix a_l = sparse_annihilation(PhotonMode::L, basis);
  const SparseMatrix a_r = sparse_annihilation(PhotonMode::R, basis);
  const SparseMatrix n_l = SparseMatrix(a_l.adjoint()) * a_l;
  const SparseMatrix n_r = SparseMatrix(a_r.adjoint()) * a_r;
  const SparseMatrix hop = SparseMatrix(a_l.adjoint()) * a_r;  // aL^dag aR
  const SparseMatrix hop_dag = SparseMatrix(hop.adjoint());
  const Complex i(0.0, 1.0);
  return StokesOperators{
      OperatorMatrix(Matrix(n_l + n_r), true),
      OperatorMatrix(Matrix(hop + hop_dag), true),
      OperatorMatrix(Matrix(SparseMatrix(i * (hop - hop_dag))), true),
      OperatorMatrix(Matrix(n_r - n_l), true),
  };
}

OperatorMatrix excitation_number(const CompositeBasis& basis) {
  const SparseMatrix a_l = sparse_annihilation(PhotonMode::L, basis);
  const SparseMatrix a_r = sparse_annihilation(PhotonMode::R, basis);
  SparseMatrix n = SparseMatrix(a_l.adjoint()) * a_l;
  n += SparseMatrix(a_r.adjoint()) * a_r;
  n += SparseMatrix(0.5 * (sparse_sigma(SigmaKind::UpZ, basis) +
                           sparse_sigma(SigmaKind::DownZ, basis)));
  return OperatorMatrix(Matrix(n), true);
}

}  // namespace spinfr
