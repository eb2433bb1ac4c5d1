#include "spinfr/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>
#include <vector>

#include "spinfr/errors.hpp"
#include "spinfr/estimator.hpp"
#include "spinfr/oracle.hpp"
#include "spinfr/rng.hpp"

namespace spinfr {

namespace {

std::vector<double> linspace(const GridSpec& g) {
  std::vector<double> v(static_cast<std::size_t>(g.steps));
  if (g.steps == 1) {
    v[0] = g.start;
    return v;
  }
  const double h = (g.stop - g.start) / static_cast<double>(g.steps - 1);
  for (int i = 0; i < g.steps; ++i) v[static_cast<std::size_t>(i)] = g.start + h * i;
  return v;
}

std::vector<double> logspace(const LogGridSpec& g) {
  std::vector<double> v(static_cast<std::size_t>(g.points));
  if (g.points == 1) {
    v[0] = g.min;
    return v;
  }
  const double la = std::log10(g.min), lb = std::log10(g.max);
  const double h = (lb - la) / static_cast<double>(g.points - 1);
  for (int i = 0; i < g.points; ++i) v[static_cast<std::size_t>(i)] = std::pow(10.0, la + h * i);
  return v;
}

int worker_count() {
  if (const char* env = std::getenv("SPINFR_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-deterministic parallel map: results land by index, so output order
// does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const int workers = std::min<int>(worker_count(), static_cast<int>(std::max<std::size_t>(n, 1)));
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Extremum {
  double value = 0.0;
  double at = 0.0;
};

SweepSummary angle_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto taus = linspace(cfg.tau_grid);
  const auto times = linspace(cfg.time_grid);
  const std::size_t n = taus.size() * times.size();
  std::vector<std::string> rows(n);
  std::vector<double> thetas(n);
  parallel_for(n, [&](std::size_t i) {
    const double tau = taus[i / times.size()];
    const double t = times[i % times.size()];
    const double theta = faraday_angle(cfg.params, t, SpinMixture(tau)).theta_rad;
    thetas[i] = theta;
    rows[i] = fmt(t) + "," + fmt(tau) + "," + fmt(theta) + "," + fmt(theta * 1e3) + "\n";
  });
  out << csv_header(SweepKind::AngleVsTimeTau) << "\n";
  for (const auto& r : rows) out << r;
  Extremum ext;
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(thetas[i]) > std::abs(ext.value)) ext = {thetas[i], times[i % times.size()]};
  char msg[160];
  std::snprintf(msg, sizeof msg, "angle extremum %.6e rad at t = %.6e s", ext.value, ext.at);
  return SweepSummary{SweepKind::AngleVsTimeTau, n, msg};
}

SweepSummary noise_time_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto taus = linspace(cfg.tau_grid);
  const auto times = linspace(cfg.time_grid);
  const std::size_t n = taus.size() * times.size();
  std::vector<std::string> rows(n);
  std::vector<double> totals(n);
  parallel_for(n, [&](std::size_t i) {
    const double tau = taus[i / times.size()];
    const double t = times[i % times.size()];
    const auto f =
        faraday_fluctuation_terms(cfg.params, t, SpinMixture(tau), cfg.n_photons_total);
    totals[i] = f.total_rad;
    rows[i] = fmt(t) + "," + fmt(tau) + "," + fmt(f.total_rad) + "," + fmt(f.shot_rad) + "," +
              fmt(f.intrinsic_rad) + "\n";
  });
  out << csv_header(SweepKind::NoiseVsTimeTau) << "\n";
  for (const auto& r : rows) out << r;
  const double peak = *std::max_element(totals.begin(), totals.end());
  char msg[160];
  std::snprintf(msg, sizeof msg, "peak fluctuation %.6e rad at N = %.3e photons", peak,
                cfg.n_photons_total);
  return SweepSummary{SweepKind::NoiseVsTimeTau, n, msg};
}

SweepSummary noise_photon_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto taus = linspace(cfg.tau_grid);
  const auto photons = logspace(cfg.photon_grid);
  const std::size_t n = taus.size() * photons.size();
  std::vector<std::string> rows(n);
  parallel_for(n, [&](std::size_t i) {
    const double tau = taus[i / photons.size()];
    const double nph = photons[i % photons.size()];
    const auto f = faraday_fluctuation_terms(cfg.params, cfg.time_s, SpinMixture(tau), nph);
    rows[i] = fmt(nph) + "," + fmt(tau) + "," + fmt(f.total_rad) + "," + fmt(f.shot_rad) + "," +
              fmt(f.intrinsic_rad) + "\n";
  });
  out << csv_header(SweepKind::NoiseVsPhotons) << "\n";
  for (const auto& r : rows) out << r;
  const auto sat = faraday_fluctuation_terms(cfg.params, cfg.time_s, SpinMixture(0.5),
                                             cfg.photon_grid.max);
  char msg[160];
  std::snprintf(msg, sizeof msg, "intrinsic saturation level %.6e rad", sat.intrinsic_rad);
  return SweepSummary{SweepKind::NoiseVsPhotons, n, msg};
}

SweepSummary oracle_sweep(const RunConfig& cfg, std::ostream& out) {
  const CompositeBasis basis(cfg.oracle.cutoff);
  if (basis.dim() > cfg.oracle.max_dimension)
    throw numerical_error("oracle_check: composite dimension " + std::to_string(basis.dim()) +
                          " exceeds the cap " + std::to_string(cfg.oracle.max_dimension) +
                          "; reduce oracle.cutoff or oracle.scaled_photons_per_mode");
  out << csv_header(SweepKind::OracleCheck) << "\n";
  std::size_t rows = 0;
  double worst_rel = 0.0;
  PhysicalParams p = cfg.params;
  for (int h = 0; h <= cfg.oracle_halvings; ++h) {
    const SpectralDecomposition spec(build_hamiltonian(HamiltonianPart::Total, p, basis));
    const OracleReport rep =
        faraday_exact(p, SpinMixture(cfg.tau), cfg.time_s, cfg.oracle, &spec);
    const double rel = rep.theta_analytic != 0.0
                           ? std::abs(rep.theta_exact - rep.theta_analytic) /
                                 std::abs(rep.theta_analytic)
                           : 0.0;
    worst_rel = std::max(worst_rel, rel);
    out << fmt(rep.alpha) << "," << fmt(rep.theta_exact) << "," << fmt(rep.theta_analytic)
        << "," << fmt(rel) << "," << fmt(rep.fluctuation_exact) << ","
        << fmt(rep.fluctuation_analytic) << "," << fmt(rep.operator_residual) << "\n";
    ++rows;
    p = PhysicalParams(p.lambda_rad_per_s / 2.0, p.omega_p_rad_per_s, p.omega_e_rad_per_s);
  }
  char msg[160];
  std::snprintf(msg, sizeof msg, "largest theta rel. discrepancy %.4f over %zu coupling row(s)",
                worst_rel, rows);
  return SweepSummary{SweepKind::OracleCheck, rows, msg};
}

SweepSummary estimate_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto taus = linspace(cfg.tau_grid);
  const std::size_t n = taus.size();
  std::vector<std::string> rows(n);
  std::vector<double> errs(n);
  RecordEstimateOptions opts;
  opts.bootstrap_resamples = cfg.estimate.bootstrap_resamples;
  parallel_for(n, [&](std::size_t i) {
    const double tau = taus[i];
    const auto ext = simulate_record(cfg.params, SpinMixture(tau), cfg.time_s,
                                     cfg.n_photons_total, cfg.estimate.n_shots,
                                     cfg.estimate.background_sigma_rad, mix_seed(cfg.seed, 3 * i));
    const auto zero = simulate_record(cfg.params, SpinMixture(0.5), cfg.time_s,
                                      cfg.n_photons_total, cfg.estimate.n_shots,
                                      cfg.estimate.background_sigma_rad,
                                      mix_seed(cfg.seed, 3 * i + 1));
    const auto bg = simulate_background(cfg.estimate.background_sigma_rad, cfg.estimate.n_shots,
                                        mix_seed(cfg.seed, 3 * i + 2));
    RecordEstimateOptions row_opts = opts;
    row_opts.bootstrap_seed = mix_seed(cfg.seed, 1000 + i);
    const PurityEstimate est = estimate_from_records(ext, zero, bg, row_opts);
    const double sel = est.selected.value_or(0.5);
    errs[i] = std::abs(sel - tau);
    rows[i] = fmt(tau) + "," + fmt(est.tau_low) + "," + fmt(est.tau_high) + "," + fmt(sel) +
              "," + fmt(est.bootstrap_se.value_or(0.0)) + "\n";
  });
  out << csv_header(SweepKind::Estimate) << "\n";
  for (const auto& r : rows) out << r;
  const double worst = n > 0 ? *std::max_element(errs.begin(), errs.end()) : 0.0;
  char msg[160];
  std::snprintf(msg, sizeof msg, "largest |tau_selected - tau_true| = %.4f over %zu row(s)",
                worst, n);
  return SweepSummary{SweepKind::Estimate, n, msg};
}

}  // namespace

const char* sweep_kind_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::AngleVsTimeTau: return "angle_vs_time_tau";
    case SweepKind::NoiseVsTimeTau: return "noise_vs_time_tau";
    case SweepKind::NoiseVsPhotons: return "noise_vs_photons";
    case SweepKind::OracleCheck: return "oracle_check";
    case SweepKind::Estimate: return "estimate";
  }
  return "?";
}

std::string csv_header(SweepKind kind) {
  switch (kind) {
    case SweepKind::AngleVsTimeTau: return "time_s,tau,theta_rad,theta_mrad";
    case SweepKind::NoiseVsTimeTau:
      return "time_s,tau,delta_theta_rad,shot_term_rad,intrinsic_term_rad";
    case SweepKind::NoiseVsPhotons:
      return "n_photons,tau,delta_theta_rad,shot_term_rad,intrinsic_term_rad";
    case SweepKind::OracleCheck:
      return "alpha,theta_exact_rad,theta_analytic_rad,rel_err,fluct_exact_rad,"
             "fluct_analytic_rad,heisenberg_residual";
    case SweepKind::Estimate:
      return "tau_true,tau_est_low,tau_est_high,tau_selected,bootstrap_se";
  }
  throw std::invalid_argument("csv_header: unknown kind");
}

SweepSummary run_sweep(SweepKind kind, const RunConfig& cfg, std::ostream& out) {
  switch (kind) {
    case SweepKind::AngleVsTimeTau: return angle_sweep(cfg, out);
    case SweepKind::NoiseVsTimeTau: return noise_time_sweep(cfg, out);
    case SweepKind::NoiseVsPhotons: return noise_photon_sweep(cfg, out);
    case SweepKind::OracleCheck: return oracle_sweep(cfg, out);
    case SweepKind::Estimate: return estimate_sweep(cfg, out);
  }
  throw std::invalid_argument("run_sweep: unknown kind");
}

SweepSummary run_sweep_to_file(SweepKind kind, const RunConfig& cfg) {
  if (cfg.output_path.empty())
    throw io_error("no output path configured (set [output] path or pass --out)");
  std::ofstream out(cfg.output_path);
  if (!out) throw io_error("cannot open output file: " + cfg.output_path);
  SweepSummary s = run_sweep(kind, cfg, out);
  out.flush();
  if (!out) throw io_error("write failed: " + cfg.output_path);
  return s;
}

}  // namespace spinfr
