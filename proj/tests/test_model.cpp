#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <numbers>
#include <random>

#include "spinfr/model.hpp"

using namespace spinfr;

namespace {
double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("physical parameter validation") {
  CHECK_THROWS_AS(PhysicalParams(1.0, -1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalParams(1.0, 2.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalParams(-1.0, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalParams(1.0, 2.0, 2.0), std::invalid_argument);  // delta = 0
  CHECK_NOTHROW(PhysicalParams(0.0, 2.0, 1.0));  // free field is a valid edge case

  const PhysicalParams strong(5e12, 2.47e15, 2.48e15);
  CHECK_FALSE(strong.weak_coupling());
  CHECK(strong.coupling_ratio() == doctest::Approx(0.5));
}

TEST_CASE("paper preset is pinned") {
  const PhysicalParams p = preset::paper_params();
  CHECK(p.lambda_rad_per_s == 9.8e10);
  CHECK(p.omega_p_rad_per_s == 2.47e15);
  CHECK(p.omega_e_rad_per_s == 2.48e15);
  CHECK(p.detuning() == doctest::Approx(-1.0e13).epsilon(1e-14));
  CHECK(p.coupling_ratio() == doctest::Approx(9.8e-3).epsilon(1e-12));
  CHECK(p.weak_coupling());
  CHECK(preset::kPaperTimeSeconds == 20e-12);
  CHECK(preset::kPaperPhotonNumber == 5e5);
}

TEST_CASE("coherent amplitudes") {
  const auto amps = CoherentAmplitudes::linear_45(5e5);
  CHECK(amps.n_l == amps.n_r);
  CHECK(amps.theta_l - amps.theta_r == doctest::Approx(std::numbers::pi / 2));
  CHECK(amps.mean_photons_total() == doctest::Approx(5e5).epsilon(1e-12));
  CHECK_THROWS_AS(CoherentAmplitudes(-1.0, 0.0, 0.0, 0.0), std::invalid_argument);

  CHECK_THROWS_AS(SpinMixture(1.5), std::invalid_argument);
  CHECK_THROWS_AS(SpinMixture(-0.1), std::invalid_argument);
}

TEST_CASE("hamiltonian parts") {
  const CompositeBasis b(3);
  const PhysicalParams p(2.0, 10.0, 6.0);

  const auto hp = build_hamiltonian(HamiltonianPart::Photon, p, b);
  const auto he = build_hamiltonian(HamiltonianPart::Electron, p, b);
  const auto hi = build_hamiltonian(HamiltonianPart::Interaction, p, b);
  const auto ht = build_hamiltonian(HamiltonianPart::Total, p, b);
  CHECK(hp.is_hermitian());
  CHECK(he.is_hermitian());
  CHECK(hi.is_hermitian());
  CHECK(max_abs(ht.mat() - hp.mat() - he.mat() - hi.mat()) < tol::kExactIdentity);

  // photon part counts photons: (n_L=2, n_R=1) -> 3 omega_p
  const int i21 = b.flat(2, 1, ElectronLevel::CU);
  CHECK(hp.mat()(i21, i21).real() == doctest::Approx(3.0 * 10.0));

  // electron part: the CU <-> VU gap is omega_e, realized as +/- omega_e/2
  const int cu = b.flat(0, 0, ElectronLevel::CU);
  const int vu = b.flat(0, 0, ElectronLevel::VU);
  const int vd = b.flat(0, 0, ElectronLevel::VD);
  CHECK(he.mat()(cu, cu).real() == doctest::Approx(+0.5 * 6.0));
  CHECK(he.mat()(vd, vd).real() == doctest::Approx(-0.5 * 6.0));
  CHECK(he.mat()(cu, cu).real() - he.mat()(vu, vu).real() == doctest::Approx(6.0));

  // interaction element <(0, CU)| H_I |(1, VU)> = lambda * sqrt(1)
  CHECK(hi.mat()(b.flat(0, 0, ElectronLevel::CU), b.flat(1, 0, ElectronLevel::VU)) ==
        Complex(2.0));
}

TEST_CASE("excitation number commutes with the total hamiltonian") {
  const CompositeBasis b(4);
  const PhysicalParams p = preset::paper_params();
  const auto h = build_hamiltonian(HamiltonianPart::Total, p, b);
  const auto n_exc = excitation_number(b);
  const Matrix comm = h.mat() * n_exc.mat() - n_exc.mat() * h.mat();
  CHECK(max_abs(comm) < tol::kExactIdentity * max_abs(h.mat()));

  // S0 alone is conserved by the free part
  const auto s = stokes_operators(b);
  const Matrix free_part = build_hamiltonian(HamiltonianPart::Photon, p, b).mat() +
                           build_hamiltonian(HamiltonianPart::Electron, p, b).mat();
  CHECK(max_abs(free_part * s.s0.mat() - s.s0.mat() * free_part) <
        tol::kExactIdentity * max_abs(free_part));
}

TEST_CASE("initial density matrix") {
  const CompositeBasis b(2);
  SUBCASE("vacuum with pure spin-up is rank one") {
    const Matrix rho =
        initial_density_matrix(CoherentAmplitudes(0, 0, 0, 0), SpinMixture(1.0), b);
    Vector e = Vector::Zero(b.dim());
    e[b.flat(0, 0, ElectronLevel::CU)] = 1.0;
    CHECK(max_abs(rho - e * e.adjoint()) < tol::kExactIdentity);
  }

  SUBCASE("electron reduced state and purity") {
    // the electron factor does not care about the photon tail; keep the
    // basis tiny and the tail check loose
    const auto amps = CoherentAmplitudes::linear_45(2.0);
    for (const double tau : {0.0, 0.25, 0.5, 1.0}) {
      const Matrix rho = initial_density_matrix(amps, SpinMixture(tau), b, 1e-1);
      CHECK(std::abs(rho.trace() - Complex(1.0)) < 1e-12);
      // trace out the photons
      Eigen::Matrix4cd rho_e = Eigen::Matrix4cd::Zero();
      for (int nl = 0; nl < b.fock_l().dim(); ++nl)
        for (int nr = 0; nr < b.fock_r().dim(); ++nr)
          for (int e1 = 0; e1 < kElectronDim; ++e1)
            for (int e2 = 0; e2 < kElectronDim; ++e2)
              rho_e(e1, e2) += rho(b.flat(nl, nr, static_cast<ElectronLevel>(e1)),
                                   b.flat(nl, nr, static_cast<ElectronLevel>(e2)));
      CHECK(rho_e(0, 0).real() == doctest::Approx(tau).epsilon(1e-10));
      CHECK(rho_e(2, 2).real() == doctest::Approx(1.0 - tau).epsilon(1e-10));
      CHECK(std::abs(rho_e(1, 1)) < 1e-12);
      CHECK(std::abs(rho_e(3, 3)) < 1e-12);
      const double purity = (rho_e * rho_e).trace().real();
      CHECK(purity == doctest::Approx(tau * tau + (1 - tau) * (1 - tau)).epsilon(1e-9));
    }
  }

  SUBCASE("positivity") {
    const Matrix rho =
        initial_density_matrix(CoherentAmplitudes::linear_45(1.0), SpinMixture(0.3), b, 5e-2);
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    CHECK(es.eigenvalues().minCoeff() > -tol::kPsdFloor);
  }

  SUBCASE("tail violation names the required cutoff") {
    try {
      initial_density_matrix(CoherentAmplitudes(2.0, 2.0, 0, 0), SpinMixture(1.0), b);
      FAIL("expected numerical_error");
    } catch (const numerical_error& e) {
      CHECK(std::string(e.what()).find("required cutoff") != std::string::npos);
    }
  }

  SUBCASE("photon number expectation survives truncation") {
    const CompositeBasis wide(FockTruncation(30), FockTruncation(1));
    const Matrix rho = initial_density_matrix(CoherentAmplitudes(2.0, 0.0, 0.3, 0.0),
                                              SpinMixture(0.5), wide);
    const auto a_l = build_annihilation(PhotonMode::L, wide);
    const auto n_l = OperatorMatrix::hermitian(adjoint(a_l).mat() * a_l.mat());
    CHECK(std::abs(expectation(n_l, rho).real() - 4.0) < 1e-9);
  }
}

TEST_CASE("stokes operators reproduce the coherent-state closed forms") {
  const CompositeBasis b(16);
  const auto s = stokes_operators(b);
  CHECK(s.s0.is_hermitian());
  CHECK(s.s1.is_hermitian());
  CHECK(s.s2.is_hermitian());
  CHECK(s.s3.is_hermitian());

  SUBCASE("45-degree input lies on the +S2 axis") {
    const auto amps = CoherentAmplitudes::linear_45(4.0);  // N0^2 = 2 per mode
    const Vector psi = product_state_vector(amps, ElectronLevel::CU, b, 1e-8);
    CHECK(expectation(s.s0, psi).real() == doctest::Approx(4.0).epsilon(1e-7));
    CHECK(std::abs(expectation(s.s1, psi).real()) < 1e-7);
    CHECK(expectation(s.s2, psi).real() == doctest::Approx(4.0).epsilon(1e-7));
    CHECK(std::abs(expectation(s.s3, psi).real()) < 1e-7);
  }

  SUBCASE("single left-circular photon") {
    Vector one_l = Vector::Zero(b.dim());
    one_l[b.flat(1, 0, ElectronLevel::CU)] = 1.0;
    CHECK(expectation(s.s3, one_l).real() == doctest::Approx(-1.0));
    CHECK(expectation(s.s0, one_l).real() == doctest::Approx(1.0));
  }

  SUBCASE("random amplitudes match the closed form") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> mag(0.0, 1.1), phase(0.0, 2 * std::numbers::pi);
    for (int trial = 0; trial < 50; ++trial) {
      const CoherentAmplitudes amps(mag(rng), mag(rng), phase(rng), phase(rng));
      const Vector psi = product_state_vector(amps, ElectronLevel::CD, b, 1e-7);
      const double s0 = expectation(s.s0, psi).real();
      const double s1 = expectation(s.s1, psi).real();
      const double s2 = expectation(s.s2, psi).real();
      const double s3 = expectation(s.s3, psi).real();
      const double dphi = amps.theta_l - amps.theta_r;
      CHECK(s0 == doctest::Approx(amps.mean_photons_total()).epsilon(1e-7));
      CHECK(s1 ==
            doctest::Approx(2 * amps.n_l * amps.n_r * std::cos(dphi)).epsilon(1e-7).scale(1.0));
      CHECK(s2 ==
            doctest::Approx(2 * amps.n_l * amps.n_r * std::sin(dphi)).epsilon(1e-7).scale(1.0));
      CHECK(s3 == doctest::Approx(amps.mean_photons_r() - amps.mean_photons_l())
                      .epsilon(1e-7)
                      .scale(1.0));
      // coherent states are fully polarized up to truncation slack
      CHECK(s1 * s1 + s2 * s2 + s3 * s3 <= s0 * s0 + 1e-6);
    }
  }
}
