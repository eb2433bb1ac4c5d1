#include "spinfr/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinfr/errors.hpp"
#include "spinfr/rng.hpp"

namespace spinfr {

NoiseBudget::NoiseBudget(double m, double m0, double b, double n_photons_)
    : delta_theta_m(m), delta_theta_m0(m0), delta_theta_b(b), n_photons(n_photons_) {
  if (!(m >= 0.0 && m0 >= 0.0 && b >= 0.0))
    throw std::invalid_argument("NoiseBudget: noise levels must be non-negative");
  if (!(n_photons > 0.0)) throw std::invalid_argument("NoiseBudget: photon number must be > 0");
  if (m < b)
    throw std::invalid_argument(
        "NoiseBudget: measured noise below background (delta_theta_m < delta_theta_b)");
  if (m0 < m)
    throw std::invalid_argument(
        "NoiseBudget: zero-crossing noise below extremum noise (delta_theta_m0 < "
        "delta_theta_m); the purity radicand would leave [0, 1]");
}

namespace {

struct Radicand {
  double value;
  bool clipped;
};

Radicand clip_radicand(double raw, bool clamp_boundary) {
  if (raw >= 0.0 && raw <= 1.0) return {raw, false};
  if (raw < 0.0) {
    if (clamp_boundary || raw >= -tol::kRadicandSlop) return {0.0, true};
  } else {
    if (clamp_boundary || raw <= 1.0 + tol::kRadicandSlop) return {1.0, true};
  }
  throw numerical_error("purity radicand " + std::to_string(raw) +
                        " is outside [0, 1]; inconsistent noise inputs");
}

PurityEstimate estimate_from_radicand(Radicand rad, std::optional<double> extremum_sign) {
  const double r = std::sqrt(rad.value);
  PurityEstimate est;
  est.tau_low = 0.5 - 0.5 * r;
  est.tau_high = 0.5 + 0.5 * r;
  est.boundary_clipped = rad.clipped;
  if (extremum_sign.has_value()) {
    // Positive rotation at the extremum marks the spin-up-dominated branch.
    est.selected = (*extremum_sign >= 0.0) ? est.tau_high : est.tau_low;
  }
  return est;
}

double radicand_for(const NoiseBudget& b, PurityMode mode) {
  const double m2 = b.delta_theta_m * b.delta_theta_m;
  const double m02 = b.delta_theta_m0 * b.delta_theta_m0;
  const double bg2 = b.delta_theta_b * b.delta_theta_b;
  switch (mode) {
    case PurityMode::FiniteN: {
      const double shot2 = 1.0 / (4.0 * b.n_photons);
      if (!(m02 > shot2))
        throw std::invalid_argument(
            "purity_from_noise: zero-crossing noise does not exceed the shot floor "
            "1/(4N); finite-N inversion undefined");
      return (m02 - m2) / (m02 - shot2);
    }
    case PurityMode::LargeN:
      if (m02 == 0.0)
        throw std::invalid_argument("purity_from_noise: zero-crossing noise is zero");
      return 1.0 - m2 / m02;
    case PurityMode::BackgroundSubtracted: {
      const double num = m2 - bg2;
      const double den = m02 - bg2;
      if (den <= 0.0)
        throw numerical_error(
            "purity_from_noise: background at or above the zero-crossing noise");
      return 1.0 - num / den;
    }
  }
  throw std::invalid_argument("purity_from_noise: unknown mode");
}

}  // namespace

PurityEstimate purity_from_noise(const NoiseBudget& budget, PurityMode mode,
                                 std::optional<double> extremum_sign) {
  return estimate_from_radicand(clip_radicand(radicand_for(budget, mode), false),
                                extremum_sign);
}

std::vector<double> simulate_record(const PhysicalParams& params, const SpinMixture& mix,
                                    double t, double n_photons, int n_shots,
                                    double background_sigma, std::uint64_t seed) {
  if (n_shots < 2) throw std::invalid_argument("simulate_record: need at least 2 shots");
  if (!(background_sigma >= 0.0))
    throw std::invalid_argument("simulate_record: negative background sigma");
  const double mean = faraday_angle(params, t, mix).theta_rad;
  const double quantum = faraday_fluctuation(params, t, mix, n_photons);
  const double sigma = std::hypot(quantum, background_sigma);
  NormalSampler draw(seed);
  std::vector<double> record(static_cast<std::size_t>(n_shots));
  for (auto& x : record) x = draw.normal(mean, sigma);
  return record;
}

std::vector<double> simulate_background(double sigma, int n_shots, std::uint64_t seed) {
  if (n_shots < 2) throw std::invalid_argument("simulate_background: need at least 2 shots");
  if (!(sigma >= 0.0)) throw std::invalid_argument("simulate_background: negative sigma");
  NormalSampler draw(seed);
  std::vector<double> record(static_cast<std::size_t>(n_shots));
  for (auto& x : record) x = draw.normal(0.0, sigma);
  return record;
}

double sample_std(const std::vector<double>& record) {
  const std::size_t n = record.size();
  if (n < 2) throw std::invalid_argument("sample_std: need at least 2 samples");
  double mean = 0.0;
  for (double x : record) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : record) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(n - 1));
}

namespace {

double record_mean(const std::vector<double>& r) {
  double m = 0.0;
  for (double x : r) m += x;
  return m / static_cast<double>(r.size());
}

// Background-subtracted radicand from three records; boundary crossings from
// sampling noise clip onto [0, 1].
Radicand record_radicand(double s_m, double s_m0, double s_b) {
  const double num = s_m * s_m - s_b * s_b;
  const double den = s_m0 * s_m0 - s_b * s_b;
  if (den <= 0.0)
    throw numerical_error(
        "estimate_from_records: zero-crossing record variance does not exceed the "
        "background variance");
  return clip_radicand(1.0 - num / den, true);
}

}  // namespace

PurityEstimate estimate_from_records(const std::vector<double>& extremum_record,
                                     const std::vector<double>& zero_crossing_record,
                                     const std::vector<double>& background_record,
                                     const RecordEstimateOptions& options) {
  const double s_m = sample_std(extremum_record);
  const double s_m0 = sample_std(zero_crossing_record);
  const double s_b = sample_std(background_record);
  if (s_m0 == 0.0)
    throw numerical_error("estimate_from_records: degenerate zero-crossing record");

  const double mean_ext = record_mean(extremum_record);
  const double mean_se = s_m / std::sqrt(static_cast<double>(extremum_record.size()));

  auto estimate_once = [&](double sm, double sm0, double sb, double mean,
                           double se) -> PurityEstimate {
    PurityEstimate est = estimate_from_radicand(record_radicand(sm, sm0, sb), mean);
    // A mean consistent with zero pins tau = 1/2 directly: the branch sign is
    // not resolved below significance, and a zero rotation angle is itself
    // the tau = 1/2 condition.
    if (std::abs(mean) < options.zero_gate_sigmas * se) {
      est.selected = 0.5;
      est.zero_gated = true;
    }
    return est;
  };

  PurityEstimate est = estimate_once(s_m, s_m0, s_b, mean_ext, mean_se);

  if (options.bootstrap_resamples > 0) {
    std::mt19937_64 engine(mix_seed(options.bootstrap_seed, 0));
    std::vector<double> res_ext(extremum_record.size());
    std::vector<double> res_zero(zero_crossing_record.size());
    std::vector<double> res_bg(background_record.size());
    std::vector<double> taus;
    taus.reserve(static_cast<std::size_t>(options.bootstrap_resamples));
    auto resample = [&engine](const std::vector<double>& src, std::vector<double>& dst) {
      const std::uint64_t n = src.size();
      for (auto& x : dst) x = src[static_cast<std::size_t>(engine() % n)];
    };
    for (int b = 0; b < options.bootstrap_resamples; ++b) {
      resample(extremum_record, res_ext);
      resample(zero_crossing_record, res_zero);
      resample(background_record, res_bg);
      const double bm = sample_std(res_ext);
      const double bm0 = sample_std(res_zero);
      const double bb = sample_std(res_bg);
      if (bm0 * bm0 - bb * bb <= 0.0) continue;  // skip degenerate resamples
      const double bmean = record_mean(res_ext);
      const double bse = bm / std::sqrt(static_cast<double>(res_ext.size()));
      const PurityEstimate bres = estimate_once(bm, bm0, bb, bmean, bse);
      taus.push_back(bres.selected.value());
    }
    if (taus.size() >= 2) {
      est.bootstrap_se = sample_std(taus);
    }
  }
  return est;
}

}  // namespace spinfr
