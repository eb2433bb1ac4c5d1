#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinfr/analytic.hpp"
#include "spinfr/estimator.hpp"
#include "spinfr/model.hpp"
#include "spinfr/operators.hpp"
#include "spinfr/oracle.hpp"
#include "spinfr/polarization.hpp"
#include "spinfr/records.hpp"

namespace py = pybind11;
using namespace spinfr;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum model of single-spin Faraday rotation: closed forms, an exact "
            "truncated-space oracle, and spin-purity estimation from noise records.";

  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<numerical_error>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<io_error>(m, "IoError", PyExc_OSError);

  // --- model types -------------------------------------------------------
  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init<double, double, double>(), py::arg("lambda_rad_per_s"),
           py::arg("omega_p_rad_per_s"), py::arg("omega_e_rad_per_s"))
      .def_readonly("lambda_rad_per_s", &PhysicalParams::lambda_rad_per_s)
      .def_readonly("omega_p_rad_per_s", &PhysicalParams::omega_p_rad_per_s)
      .def_readonly("omega_e_rad_per_s", &PhysicalParams::omega_e_rad_per_s)
      .def_property_readonly("detuning", &PhysicalParams::detuning)
      .def_property_readonly("coupling_ratio", &PhysicalParams::coupling_ratio)
      .def_property_readonly("weak_coupling", &PhysicalParams::weak_coupling)
      .def_static("paper", &preset::paper_params,
                  "Default operating point (lambda 9.8e10, omega_p 2.47e15, omega_e 2.48e15).")
      .def("__repr__", [](const PhysicalParams& p) {
        return "PhysicalParams(lambda=" + std::to_string(p.lambda_rad_per_s) +
               ", omega_p=" + std::to_string(p.omega_p_rad_per_s) +
               ", omega_e=" + std::to_string(p.omega_e_rad_per_s) + ")";
      });

  m.attr("PAPER_TIME_S") = preset::kPaperTimeSeconds;
  m.attr("PAPER_PHOTON_NUMBER") = preset::kPaperPhotonNumber;

  py::class_<CoherentAmplitudes>(m, "CoherentAmplitudes")
      .def(py::init<double, double, double, double>(), py::arg("n_l"), py::arg("n_r"),
           py::arg("theta_l"), py::arg("theta_r"))
      .def_static("linear_45", &CoherentAmplitudes::linear_45, py::arg("total_photons"))
      .def_readonly("n_l", &CoherentAmplitudes::n_l)
      .def_readonly("n_r", &CoherentAmplitudes::n_r)
      .def_readonly("theta_l", &CoherentAmplitudes::theta_l)
      .def_readonly("theta_r", &CoherentAmplitudes::theta_r)
      .def_property_readonly("mean_photons_total", &CoherentAmplitudes::mean_photons_total);

  // --- closed forms ------------------------------------------------------
  m.def(
      "solution_coefficients",
      [](const PhysicalParams& p, double t) {
        const auto c = solution_coefficients(p, t);
        return py::make_tuple(c.alpha, c.omega_shift, c.g);
      },
      py::arg("params"), py::arg("t"),
      "Returns (alpha, omega_shift, g(t)) of the dispersive photon-operator solution.");

  m.def(
      "faraday_angle",
      [](const PhysicalParams& p, double t, double tau) {
        return faraday_angle(p, t, SpinMixture(tau)).theta_rad;
      },
      py::arg("params"), py::arg("t"), py::arg("tau"),
      "Closed-form rotation angle in radians.");

  m.def(
      "faraday_fluctuation",
      [](const PhysicalParams& p, double t, double tau, double n_photons) {
        return faraday_fluctuation(p, t, SpinMixture(tau), n_photons);
      },
      py::arg("params"), py::arg("t"), py::arg("tau"), py::arg("n_photons"),
      "Closed-form angle fluctuation (shot + intrinsic) in radians.");

  m.def(
      "faraday_from_stokes",
      [](double s1, double s2) {
        const auto a = faraday_from_stokes(s1, s2);
        return py::make_tuple(a.exact_rad, a.small_angle_rad);
      },
      py::arg("s1"), py::arg("s2"), "Returns (exact, small_angle) rotation angle forms.");

  // --- polarization ------------------------------------------------------
  py::class_<StokesVector>(m, "StokesVector")
      .def(py::init([](double s0, double s1, double s2, double s3) {
             return StokesVector{s0, s1, s2, s3};
           }),
           py::arg("s0"), py::arg("s1"), py::arg("s2"), py::arg("s3"))
      .def_readwrite("s0", &StokesVector::s0)
      .def_readwrite("s1", &StokesVector::s1)
      .def_readwrite("s2", &StokesVector::s2)
      .def_readwrite("s3", &StokesVector::s3)
      .def("degree_of_polarization", &StokesVector::degree_of_polarization)
      .def("__repr__", [](const StokesVector& s) {
        return "StokesVector(" + std::to_string(s.s0) + ", " + std::to_string(s.s1) + ", " +
               std::to_string(s.s2) + ", " + std::to_string(s.s3) + ")";
      });

  py::class_<PolarizationEllipse>(m, "PolarizationEllipse")
      .def(py::init([](double phi, double chi, double intensity) {
             return PolarizationEllipse{phi, chi, intensity};
           }),
           py::arg("phi"), py::arg("chi"), py::arg("intensity") = 1.0)
      .def_readwrite("phi", &PolarizationEllipse::phi)
      .def_readwrite("chi", &PolarizationEllipse::chi)
      .def_readwrite("intensity", &PolarizationEllipse::intensity);

  py::enum_<PolarizationClass>(m, "PolarizationClass")
      .value("Linear", PolarizationClass::Linear)
      .value("Circular", PolarizationClass::Circular)
      .value("Elliptical", PolarizationClass::Elliptical);

  m.def(
      "jones_to_stokes",
      [](std::complex<double> ex, std::complex<double> ey) {
        return jones_to_stokes(JonesVector{ex, ey});
      },
      py::arg("e_x"), py::arg("e_y"));
  m.def("stokes_to_ellipse", &stokes_to_ellipse, py::arg("stokes"));
  m.def("ellipse_to_stokes", &ellipse_to_stokes, py::arg("ellipse"));
  m.def("rotation_in_s1_s2", &rotation_in_s1_s2, py::arg("stokes"), py::arg("theta_f"));
  m.def("classify", &classify, py::arg("ellipse"));

  // --- estimator ---------------------------------------------------------
  py::class_<NoiseBudget>(m, "NoiseBudget")
      .def(py::init<double, double, double, double>(), py::arg("delta_theta_m"),
           py::arg("delta_theta_m0"), py::arg("delta_theta_b"), py::arg("n_photons"))
      .def_readonly("delta_theta_m", &NoiseBudget::delta_theta_m)
      .def_readonly("delta_theta_m0", &NoiseBudget::delta_theta_m0)
      .def_readonly("delta_theta_b", &NoiseBudget::delta_theta_b)
      .def_readonly("n_photons", &NoiseBudget::n_photons);

  py::enum_<PurityMode>(m, "PurityMode")
      .value("FiniteN", PurityMode::FiniteN)
      .value("LargeN", PurityMode::LargeN)
      .value("BackgroundSubtracted", PurityMode::BackgroundSubtracted);

  py::class_<PurityEstimate>(m, "PurityEstimate")
      .def_readonly("tau_low", &PurityEstimate::tau_low)
      .def_readonly("tau_high", &PurityEstimate::tau_high)
      .def_readonly("selected", &PurityEstimate::selected)
      .def_readonly("bootstrap_se", &PurityEstimate::bootstrap_se)
      .def_readonly("boundary_clipped", &PurityEstimate::boundary_clipped)
      .def_readonly("zero_gated", &PurityEstimate::zero_gated)
      .def("__repr__", [](const PurityEstimate& e) {
        return "PurityEstimate(low=" + std::to_string(e.tau_low) +
               ", high=" + std::to_string(e.tau_high) + ")";
      });

  m.def("purity_from_noise", &purity_from_noise, py::arg("budget"), py::arg("mode"),
        py::arg("extremum_sign") = std::nullopt);

  m.def(
      "simulate_record",
      [](const PhysicalParams& p, double tau, double t, double n_photons, int n_shots,
         double background_sigma, std::uint64_t seed) {
        return simulate_record(p, SpinMixture(tau), t, n_photons, n_shots, background_sigma,
                               seed);
      },
      py::arg("params"), py::arg("tau"), py::arg("t"), py::arg("n_photons"),
      py::arg("n_shots"), py::arg("background_sigma"), py::arg("seed"));

  m.def("simulate_background", &simulate_background, py::arg("sigma"), py::arg("n_shots"),
        py::arg("seed"));

  m.def(
      "estimate_from_records",
      [](const std::vector<double>& ext, const std::vector<double>& zero,
         const std::vector<double>& bg, int bootstrap_resamples, std::uint64_t bootstrap_seed) {
        RecordEstimateOptions opts;
        opts.bootstrap_resamples = bootstrap_resamples;
        opts.bootstrap_seed = bootstrap_seed;
        return estimate_from_records(ext, zero, bg, opts);
      },
      py::arg("extremum_record"), py::arg("zero_crossing_record"), py::arg("background_record"),
      py::arg("bootstrap_resamples") = 1000,
      py::arg("bootstrap_seed") = std::uint64_t{0x9e3779b97f4a7c15ULL});

  m.def("read_record", &read_record, py::arg("path"));
  m.def("write_record", &write_record, py::arg("path"), py::arg("record"),
        py::arg("comment") = std::string());

  // --- operator algebra / oracle -----------------------------------------
  py::enum_<PhotonMode>(m, "PhotonMode").value("L", PhotonMode::L).value("R", PhotonMode::R);
  py::enum_<SigmaKind>(m, "SigmaKind")
      .value("UpZ", SigmaKind::UpZ)
      .value("DownZ", SigmaKind::DownZ)
      .value("UpRaise", SigmaKind::UpRaise)
      .value("UpLower", SigmaKind::UpLower)
      .value("DownRaise", SigmaKind::DownRaise)
      .value("DownLower", SigmaKind::DownLower);
  py::enum_<ElectronLevel>(m, "ElectronLevel")
      .value("CU", ElectronLevel::CU)
      .value("VU", ElectronLevel::VU)
      .value("CD", ElectronLevel::CD)
      .value("VD", ElectronLevel::VD);
  py::enum_<HamiltonianPart>(m, "HamiltonianPart")
      .value("Photon", HamiltonianPart::Photon)
      .value("Electron", HamiltonianPart::Electron)
      .value("Interaction", HamiltonianPart::Interaction)
      .value("Total", HamiltonianPart::Total);

  m.def(
      "annihilation_matrix",
      [](PhotonMode mode, int cutoff) {
        return build_annihilation(mode, CompositeBasis(cutoff)).mat();
      },
      py::arg("mode"), py::arg("cutoff"),
      "Dense photon annihilation operator on the composite space.");
  m.def(
      "sigma_matrix",
      [](SigmaKind kind, int cutoff) { return build_sigma(kind, CompositeBasis(cutoff)).mat(); },
      py::arg("kind"), py::arg("cutoff"));
  m.def(
      "hamiltonian_matrix",
      [](HamiltonianPart part, const PhysicalParams& p, int cutoff) {
        return build_hamiltonian(part, p, CompositeBasis(cutoff)).mat();
      },
      py::arg("part"), py::arg("params"), py::arg("cutoff"));
  m.def(
      "initial_density_matrix",
      [](double total_photons, double tau, int cutoff, double tail_tol) {
        return initial_density_matrix(CoherentAmplitudes::linear_45(total_photons),
                                      SpinMixture(tau), CompositeBasis(cutoff), tail_tol);
      },
      py::arg("total_photons"), py::arg("tau"), py::arg("cutoff"),
      py::arg("tail_tolerance") = tol::kCoherentTailDefault,
      "Coherent pair at +45 degrees with the spin mixture, truncated and renormalized.");

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("theta_exact", &OracleReport::theta_exact)
      .def_readonly("theta_analytic", &OracleReport::theta_analytic)
      .def_readonly("fluctuation_exact", &OracleReport::fluctuation_exact)
      .def_readonly("fluctuation_analytic", &OracleReport::fluctuation_analytic)
      .def_readonly("operator_residual", &OracleReport::operator_residual)
      .def_readonly("alpha", &OracleReport::alpha)
      .def_readonly("time_s", &OracleReport::time_s)
      .def_readonly("tau", &OracleReport::tau)
      .def_readonly("cutoff", &OracleReport::cutoff)
      .def_readonly("photons_per_mode", &OracleReport::photons_per_mode)
      .def_readonly("s0", &OracleReport::s0)
      .def_readonly("s1", &OracleReport::s1)
      .def_readonly("s2", &OracleReport::s2)
      .def("__repr__", [](const OracleReport& r) {
        return "OracleReport(theta_exact=" + std::to_string(r.theta_exact) +
               ", theta_analytic=" + std::to_string(r.theta_analytic) + ")";
      });

  m.def(
      "faraday_exact",
      [](const PhysicalParams& p, double tau, double t, int cutoff, double photons_per_mode,
         double tail_tolerance, int max_dimension) {
        OracleSettings s;
        s.cutoff = cutoff;
        s.photons_per_mode = photons_per_mode;
        s.tail_tolerance = tail_tolerance;
        s.max_dimension = max_dimension;
        return faraday_exact(p, SpinMixture(tau), t, s);
      },
      py::arg("params"), py::arg("tau"), py::arg("t"), py::arg("cutoff") = 20,
      py::arg("photons_per_mode") = 4.0, py::arg("tail_tolerance") = 1e-8,
      py::arg("max_dimension") = tol::kMaxCompositeDimension,
      "Exact truncated-space rotation angle and fluctuation next to the closed forms.");

  m.def(
      "heisenberg_residual",
      [](const PhysicalParams& p, int cutoff, double t) {
        return heisenberg_residual(p, CompositeBasis(cutoff), t);
      },
      py::arg("params"), py::arg("cutoff"), py::arg("t"),
      "Max-entry distance between the exact interaction-picture Heisenberg operator and "
      "the dispersive solution on the low-photon subspace.");

#ifdef SPINFR_VERSION
  m.attr("__version__") = SPINFR_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
