#include "spinfr/basis.hpp"

#include <cmath>

namespace spinfr {

double poisson_tail(double mean_photons, int cutoff) {
  if (mean_photons < 0.0) throw std::invalid_argument("poisson_tail: negative mean");
  if (mean_photons == 0.0) return 0.0;
  // head = sum_{n<=cutoff} e^{-m} m^n / n!, accumulated in log-stable form
  double term = std::exp(-mean_photons);
  double head = term;
  for (int n = 1; n <= cutoff; ++n) {
    term *= mean_photons / n;
    head += term;
  }
  return head >= 1.0 ? 0.0 : 1.0 - head;
}

int required_cutoff(double mean_photons, double tail_tol) {
  int cutoff = 1;
  while (poisson_tail(mean_photons, cutoff) >= tail_tol) {
    ++cutoff;
    if (cutoff > 100000) throw std::invalid_argument("required_cutoff: no feasible cutoff");
  }
  return cutoff;
}

}  // namespace spinfr
