#include "spinfr/operators.hpp"

#include <cmath>
#include <vector>

#include "spinfr/errors.hpp"

namespace spinfr {

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Entries of the 4x4 electron block for each bilinear: {row, col, value}.
// Basis order CU, VU, CD, VD. The z operators are +/-1 within their own
// channel and vanish on the other channel; raise maps valence -> conduction.
struct BlockEntry {
  int row, col;
  double value;
};

std::vector<BlockEntry> sigma_block(SigmaKind kind) {
  using L = ElectronLevel;
  const int cu = static_cast<int>(L::CU), vu = static_cast<int>(L::VU);
  const int cd = static_cast<int>(L::CD), vd = static_cast<int>(L::VD);
  switch (kind) {
    case SigmaKind::UpZ: return {{cu, cu, 1.0}, {vu, vu, -1.0}};
    case SigmaKind::DownZ: return {{cd, cd, 1.0}, {vd, vd, -1.0}};
    case SigmaKind::UpRaise: return {{cu, vu, 1.0}};
    case SigmaKind::UpLower: return {{vu, cu, 1.0}};
    case SigmaKind::DownRaise: return {{cd, vd, 1.0}};
    case SigmaKind::DownLower: return {{vd, cd, 1.0}};
  }
  throw std::invalid_argument("build_sigma: unknown kind");
}

}  // namespace

OperatorMatrix::OperatorMatrix(Matrix entries, bool hermitian)
    : mat_(std::move(entries)), hermitian_(hermitian) {
  if (mat_.rows() != mat_.cols())
    throw std::invalid_argument("OperatorMatrix: matrix must be square");
  if (hermitian_) {
    const double scale = max_abs(mat_);
    const double dev = max_abs(mat_ - mat_.adjoint().eval());
    if (dev > tol::kHermitian * (scale > 0.0 ? scale : 1.0))
      throw std::invalid_argument("OperatorMatrix: hermitian flag set on non-Hermitian matrix");
  }
}

SparseMatrix sparse_annihilation(PhotonMode mode, const CompositeBasis& basis) {
  const int dim = basis.dim();
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(dim);
  for (int idx = 0; idx < dim; ++idx) {
    const auto st = basis.unflat(idx);
    if (mode == PhotonMode::L && st.n_l >= 1) {
      trip.emplace_back(basis.flat(st.n_l - 1, st.n_r, st.level), idx,
                        std::sqrt(static_cast<double>(st.n_l)));
    } else if (mode == PhotonMode::R && st.n_r >= 1) {
      trip.emplace_back(basis.flat(st.n_l, st.n_r - 1, st.level), idx,
                        std::sqrt(static_cast<double>(st.n_r)));
    }
  }
  SparseMatrix a(dim, dim);
  a.setFromTriplets(trip.begin(), trip.end());
  return a;
}

SparseMatrix sparse_sigma(SigmaKind kind, const CompositeBasis& basis) {
  const int dim = basis.dim();
  const auto block = sigma_block(kind);
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(block.size() * dim / kElectronDim);
  for (int idx = 0; idx < dim; ++idx) {
    const auto st = basis.unflat(idx);
    for (const auto& e : block) {
      if (static_cast<int>(st.level) == e.col)
        trip.emplace_back(basis.flat(st.n_l, st.n_r, static_cast<ElectronLevel>(e.row)), idx,
                          e.value);
    }
  }
  SparseMatrix s(dim, dim);
  s.setFromTriplets(trip.begin(), trip.end());
  return s;
}

OperatorMatrix build_annihilation(PhotonMode mode, const CompositeBasis& basis) {
  return OperatorMatrix::general(Matrix(sparse_annihilation(mode, basis)));
}

OperatorMatrix build_sigma(SigmaKind kind, const CompositeBasis& basis) {
  const bool herm = (kind == SigmaKind::UpZ || kind == SigmaKind::DownZ);
  return OperatorMatrix(Matrix(sparse_sigma(kind, basis)), herm);
}

OperatorMatrix adjoint(const OperatorMatrix& a) {
  return OperatorMatrix(a.mat().adjoint(), a.is_hermitian());
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("commutator: dimension mismatch");
  return OperatorMatrix::general(a.mat() * b.mat() - b.mat() * a.mat());
}

OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("anticommutator: dimension mismatch");
  return OperatorMatrix::general(a.mat() * b.mat() + b.mat() * a.mat());
}

Complex expectation(const OperatorMatrix& a, const Matrix& rho) {
  if (a.dim() != rho.rows() || rho.rows() != rho.cols())
    throw std::invalid_argument("expectation: dimension mismatch");
  const double tr_dev = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (tr_dev > tol::kTrace)
    throw std::invalid_argument("expectation: density matrix trace differs from 1 by " +
                                std::to_string(tr_dev));
  const double herm_dev = (rho - rho.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::kTrace)
    throw std::invalid_argument("expectation: density matrix is not Hermitian");
  const Complex value = (a.mat() * rho).trace();
  if (a.is_hermitian()) {
    if (std::abs(value.imag()) > tol::kHermitianExpectation * (1.0 + std::abs(value)))
      throw numerical_error("expectation: Hermitian operator produced imaginary part " +
                            std::to_string(value.imag()));
  }
  return value;
}

Complex expectation(const OperatorMatrix& a, const Vector& psi) {
  if (a.dim() != psi.size()) throw std::invalid_argument("expectation: dimension mismatch");
  return psi.dot(a.mat() * psi);  // Eigen's dot conjugates the left argument
}

}  // namespace spinfr
