#include "spinfr/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "spinfr/errors.hpp"

namespace spinfr {

namespace {

// Connected components of the sparsity pattern (union-find). Exact zeros in
// the assembled Hamiltonians, so this is a symmetry-free, always-valid split.
std::vector<std::vector<int>> sparsity_components(const Matrix& h) {
  const int n = static_cast<int>(h.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (i != j && h(i, j) != Complex(0.0, 0.0)) {
        const int ri = find(i), rj = find(j);
        if (ri != rj) parent[ri] = rj;
      }
  std::vector<std::vector<int>> groups(n);
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return blocks;
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(const OperatorMatrix& h) {
  if (!h.is_hermitian())
    throw std::invalid_argument("SpectralDecomposition: operator must be Hermitian");
  const Matrix& m = h.mat();
  const int n = static_cast<int>(m.rows());
  eigenvalues_.resize(n);
  eigenvectors_ = Matrix::Zero(n, n);
  h_max_abs_ = n > 0 ? m.cwiseAbs().maxCoeff() : 0.0;

  for (const auto& block : sparsity_components(m)) {
    const int b = static_cast<int>(block.size());
    largest_block_ = std::max(largest_block_, b);
    Matrix sub(b, b);
    for (int c = 0; c < b; ++c)
      for (int r = 0; r < b; ++r) sub(r, c) = m(block[r], block[c]);
    Eigen::SelfAdjointEigenSolver<Matrix> solver(sub);
    if (solver.info() != Eigen::Success)
      throw numerical_error("SpectralDecomposition: eigensolver failed on a block");
    const Matrix& v = solver.eigenvectors();
    for (int c = 0; c < b; ++c) {
      eigenvalues_[block[c]] = solver.eigenvalues()[c];
      for (int r = 0; r < b; ++r) eigenvectors_(block[r], block[c]) = v(r, c);
    }
    const double rec =
        (v * solver.eigenvalues().asDiagonal() * v.adjoint() - sub).cwiseAbs().maxCoeff();
    const double uni = (v.adjoint() * v - Matrix::Identity(b, b)).cwiseAbs().maxCoeff();
    reconstruction_error_ = std::max(reconstruction_error_, rec);
    unitarity_error_ = std::max(unitarity_error_, uni);
  }
  if (h_max_abs_ > 0.0 && reconstruction_error_ > tol::kSpectralReconstruction * h_max_abs_)
    throw numerical_error("SpectralDecomposition: reconstruction error " +
                          std::to_string(reconstruction_error_) + " exceeds tolerance");
  if (unitarity_error_ > tol::kUnitary)
    throw numerical_error("SpectralDecomposition: eigenvector basis is not unitary");
}

Vector SpectralDecomposition::evolve(const Vector& psi, double t) const {
  if (psi.size() != dim()) throw std::invalid_argument("evolve: dimension mismatch");
  Vector coeff = eigenvectors_.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeff.size(); ++k)
    coeff[k] *= std::exp(Complex(0.0, -eigenvalues_[k] * t));
  return eigenvectors_ * coeff;
}

Matrix SpectralDecomposition::propagator(double t) const {
  Vector phases(dim());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases[k] = std::exp(Complex(0.0, -eigenvalues_[k] * t));
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

Matrix evolve_density(const Matrix& rho0, const SpectralDecomposition& spec, double t) {
  if (rho0.rows() != spec.dim() || rho0.cols() != spec.dim())
    throw std::invalid_argument("evolve_density: dimension mismatch");
  const Matrix u = spec.propagator(t);
  Matrix rho = u * rho0 * u.adjoint();
  const double drift = std::abs(rho.trace() - rho0.trace());
  if (drift > tol::kEvolveTrace)
    throw numerical_error("evolve_density: trace drifted by " + std::to_string(drift));
  return rho;
}

Matrix evolve_density(const Matrix& rho0, const OperatorMatrix& h, double t) {
  return evolve_density(rho0, SpectralDecomposition(h), t);
}

OracleReport faraday_exact(const PhysicalParams& params, const SpinMixture& mix, double t,
                           const OracleSettings& settings,
                           const SpectralDecomposition* shared_spec) {
  const CompositeBasis basis(settings.cutoff);
  if (basis.dim() > settings.max_dimension)
    throw numerical_error("faraday_exact: composite dimension " + std::to_string(basis.dim()) +
                          " exceeds the cap " + std::to_string(settings.max_dimension) +
                          "; reduce the cutoff or the photon number");

  std::unique_ptr<SpectralDecomposition> owned;
  const SpectralDecomposition* spec = shared_spec;
  if (spec == nullptr) {
    owned = std::make_unique<SpectralDecomposition>(
        build_hamiltonian(HamiltonianPart::Total, params, basis));
    spec = owned.get();
  }

  const auto amps = CoherentAmplitudes::linear_45(2.0 * settings.photons_per_mode);
  const auto stokes = stokes_operators(basis);

  // The initial state is a classical mixture of two product states; evolving
  // the two pure components is exact and avoids dim^2 density algebra.
  struct Sector {
    double weight;
    Vector psi_t;
  };
  std::vector<Sector> sectors;
  if (mix.tau > 0.0)
    sectors.push_back({mix.tau, spec->evolve(product_state_vector(amps, ElectronLevel::CU, basis,
                                                                  settings.tail_tolerance),
                                             t)});
  if (mix.tau < 1.0)
    sectors.push_back({1.0 - mix.tau,
                       spec->evolve(product_state_vector(amps, ElectronLevel::CD, basis,
                                                         settings.tail_tolerance),
                                    t)});

  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s1_sq = 0.0;
  for (const auto& sec : sectors) {
    s0 += sec.weight * expectation(stokes.s0, sec.psi_t).real();
    s1 += sec.weight * expectation(stokes.s1, sec.psi_t).real();
    s2 += sec.weight * expectation(stokes.s2, sec.psi_t).real();
    s1_sq += sec.weight * (stokes.s1.mat() * sec.psi_t).squaredNorm();  // <S1^2>, S1 Hermitian
  }
  if (std::abs(s2) <= tol::kS2Guard * s0)
    throw numerical_error("faraday_exact: |<S2>| = " + std::to_string(std::abs(s2)) +
                          " below guard relative to <S0> = " + std::to_string(s0));

  const double variance = std::max(s1_sq - s1 * s1, 0.0);
  const auto coeffs = solution_coefficients(params, t);

  OracleReport report;
  report.theta_exact = s1 / (2.0 * s2);
  report.theta_analytic = faraday_angle(params, t, mix).theta_rad;
  report.fluctuation_exact = std::sqrt(variance) / (2.0 * s2);
  report.fluctuation_analytic = faraday_fluctuation(params, t, mix, s0);
  report.operator_residual = heisenberg_residual(params, basis, t, spec);
  report.alpha = coeffs.alpha;
  report.time_s = t;
  report.tau = mix.tau;
  report.cutoff = settings.cutoff;
  report.photons_per_mode = settings.photons_per_mode;
  report.s0 = s0;
  report.s1 = s1;
  report.s2 = s2;
  return report;
}

double heisenberg_residual(const PhysicalParams& params, const CompositeBasis& basis, double t,
                           const SpectralDecomposition* shared_spec) {
  std::unique_ptr<SpectralDecomposition> owned;
  const SpectralDecomposition* spec = shared_spec;
  if (spec == nullptr) {
    owned = std::make_unique<SpectralDecomposition>(
        build_hamiltonian(HamiltonianPart::Total, params, basis));
    spec = owned.get();
  }
  const int dim = basis.dim();

  // Free phases, diagonal in this basis: H0 = photon + electron part.
  Eigen::VectorXd h0_diag(dim);
  for (int idx = 0; idx < dim; ++idx) {
    const auto st = basis.unflat(idx);
    double electron = 0.0;
    switch (st.level) {
      case ElectronLevel::CU: electron = +0.5 * params.omega_e_rad_per_s; break;
      case ElectronLevel::VU: electron = -0.5 * params.omega_e_rad_per_s; break;
      case ElectronLevel::CD: electron = +0.5 * params.omega_e_rad_per_s; break;
      case ElectronLevel::VD: electron = -0.5 * params.omega_e_rad_per_s; break;
    }
    h0_diag[idx] = params.omega_p_rad_per_s * (st.n_l + st.n_r) + electron;
  }

  // Kept indices: both mode occupations <= cutoff/2.
  std::vector<int> keep;
  for (int idx = 0; idx < dim; ++idx) {
    const auto st = basis.unflat(idx);
    if (st.n_l <= basis.fock_l().cutoff_per_mode / 2 &&
        st.n_r <= basis.fock_r().cutoff_per_mode / 2)
      keep.push_back(idx);
  }
  const int k = static_cast<int>(keep.size());

  // W = U0^dag U restricted to the kept columns: W[:, keep] = U0^dag U P.
  // U P = V diag(e^{-iEt}) (V^dag P), all on dim x k panels.
  Matrix vp(dim, k);
  for (int c = 0; c < k; ++c) vp.col(c) = spec->eigenvectors().row(keep[c]).adjoint();
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < dim; ++r)
      vp(r, c) *= std::exp(Complex(0.0, -spec->eigenvalues()[r] * t));
  Matrix w_cols = spec->eigenvectors() * vp;  // U[:, keep]
  for (int r = 0; r < dim; ++r) {
    const Complex free_phase = std::exp(Complex(0.0, +h0_diag[r] * t));
    w_cols.row(r) *= free_phase;  // U0^dag U
  }

  // Exact interaction-picture Heisenberg operator on the kept block:
  // (W^dag aL^dag W)[keep, keep] with aL^dag applied sparsely.
  const SparseMatrix ad_l =
      SparseMatrix(sparse_annihilation(PhotonMode::L, basis).adjoint());
  const Matrix exact_block = w_cols.adjoint() * (ad_l * w_cols);

  // Dispersive solution on the kept block.
  const auto coeffs = solution_coefficients(params, t);
  Matrix rhs = Matrix::Zero(k, k);
  auto sigma_uz_of = [](ElectronLevel lv) {
    return lv == ElectronLevel::CU ? 1.0 : (lv == ElectronLevel::VU ? -1.0 : 0.0);
  };
  for (int c = 0; c < k; ++c) {
    const auto sc = basis.unflat(keep[c]);
    // e^{-i t Omega sigma_uz} aL^dag  +  g alpha sigma_uz aL^dag
    if (sc.n_l + 1 <= basis.fock_l().cutoff_per_mode) {
      const int row_full = basis.flat(sc.n_l + 1, sc.n_r, sc.level);
      const auto it = std::lower_bound(keep.begin(), keep.end(), row_full);
      if (it != keep.end() && *it == row_full) {
        const int r = static_cast<int>(it - keep.begin());
        const double sz = sigma_uz_of(sc.level);
        const double amp = std::sqrt(static_cast<double>(sc.n_l + 1));
        rhs(r, c) += amp * (std::exp(Complex(0.0, -t * coeffs.omega_shift * sz)) +
                            coeffs.g * coeffs.alpha * sz);
      }
    }
    // g sigma_u+
    if (sc.level == ElectronLevel::VU) {
      const int row_full = basis.flat(sc.n_l, sc.n_r, ElectronLevel::CU);
      const auto it = std::lower_bound(keep.begin(), keep.end(), row_full);
      if (it != keep.end() && *it == row_full) {
        const int r = static_cast<int>(it - keep.begin());
        rhs(r, c) += coeffs.g;
      }
    }
  }

  return (exact_block - rhs).cwiseAbs().maxCoeff();
}

}  // namespace spinfr
