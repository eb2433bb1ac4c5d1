#pragma once

#include <complex>

#include "spinfr/errors.hpp"
#include "spinfr/tolerances.hpp"

namespace spinfr {

// Photon-number truncation of one circular-polarization mode. Basis states
// are |0>, ..., |cutoff>, so the dimension is cutoff + 1.
struct FockTruncation {
  int cutoff_per_mode;

  explicit FockTruncation(int cutoff) : cutoff_per_mode(cutoff) {
    if (cutoff < 1) throw std::invalid_argument("FockTruncation: cutoff must be >= 1");
  }

  int dim() const { return cutoff_per_mode + 1; }
};

// Discarded Poisson weight sum_{n > cutoff} e^{-m} m^n / n! for a coherent
// state with mean photon number m.
double poisson_tail(double mean_photons, int cutoff);

// Smallest cutoff whose Poisson tail is below `tail_tol` for mean `m`.
int required_cutoff(double mean_photons, double tail_tol);

// Four electron levels. CU/VU span the spin-up channel (conduction |+1/2>,
// valence |+3/2>), CD/VD the spin-down channel (|-1/2>, |-3/2>).
enum class ElectronLevel : int { CU = 0, VU = 1, CD = 2, VD = 3 };

inline constexpr int kElectronDim = 4;

// Two truncated photon modes tensor the 4-level electron. Flat ordering:
// electron index fastest, then n_R, then n_L:
//   flat = (n_L * (cutoff_R + 1) + n_R) * 4 + level.
class CompositeBasis {
 public:
  CompositeBasis(FockTruncation fock_l, FockTruncation fock_r)
      : fock_l_(fock_l), fock_r_(fock_r) {}

  explicit CompositeBasis(int cutoff_per_mode)
      : CompositeBasis(FockTruncation(cutoff_per_mode), FockTruncation(cutoff_per_mode)) {}

  const FockTruncation& fock_l() const { return fock_l_; }
  const FockTruncation& fock_r() const { return fock_r_; }

  int dim() const { return fock_l_.dim() * fock_r_.dim() * kElectronDim; }

  int flat(int n_l, int n_r, ElectronLevel level) const {
    if (n_l < 0 || n_l > fock_l_.cutoff_per_mode || n_r < 0 || n_r > fock_r_.cutoff_per_mode)
      throw std::invalid_argument("CompositeBasis::flat: occupation out of range");
    return (n_l * fock_r_.dim() + n_r) * kElectronDim + static_cast<int>(level);
  }

  struct State {
    int n_l;
    int n_r;
    ElectronLevel level;
  };

  State unflat(int index) const {
    if (index < 0 || index >= dim())
      throw std::invalid_argument("CompositeBasis::unflat: index out of range");
    const int level = index % kElectronDim;
    const int rest = index / kElectronDim;
    return State{rest / fock_r_.dim(), rest % fock_r_.dim(),
                 static_cast<ElectronLevel>(level)};
  }

 private:
  FockTruncation fock_l_;
  FockTruncation fock_r_;
};

}  // namespace spinfr
