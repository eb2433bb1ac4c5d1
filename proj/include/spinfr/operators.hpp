#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>

#include "spinfr/basis.hpp"

namespace spinfr {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Dense operator on the composite space with a verified Hermiticity flag.
class OperatorMatrix {
 public:
  // The flag is checked against the entries, not trusted:
  // max|A - A^dag| must stay below tol::kHermitian * max|A|.
  OperatorMatrix(Matrix entries, bool hermitian);

  static OperatorMatrix hermitian(Matrix entries) { return {std::move(entries), true}; }
  static OperatorMatrix general(Matrix entries) { return {std::move(entries), false}; }

  const Matrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  bool is_hermitian() const { return hermitian_; }

 private:
  Matrix mat_;
  bool hermitian_;
};

enum class PhotonMode { L, R };

enum class SigmaKind { UpZ, DownZ, UpRaise, UpLower, DownRaise, DownLower };

// Photon annihilation operator of one mode embedded in the composite space
// (identity on the other mode and on the electron). <n-1|a|n> = sqrt(n).
OperatorMatrix build_annihilation(PhotonMode mode, const CompositeBasis& basis);

// Electron pseudo-spin bilinears embedded in the composite space. The z
// operators act as +/-1 within their own channel and 0 on the other channel;
// raise/lower map valence <-> conduction within one channel and annihilate
// the other channel.
OperatorMatrix build_sigma(SigmaKind kind, const CompositeBasis& basis);

// Sparse variants used to assemble composite operators without dense products.
SparseMatrix sparse_annihilation(PhotonMode mode, const CompositeBasis& basis);
SparseMatrix sparse_sigma(SigmaKind kind, const CompositeBasis& basis);

OperatorMatrix adjoint(const OperatorMatrix& a);

// AB - BA. Throws std::invalid_argument on dimension mismatch.
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

// AB + BA.
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

// Tr(A rho). Validates trace(rho) = 1 within tol::kTrace and Hermiticity of
// rho; when A carries the Hermitian flag the imaginary part must be below
// tol::kHermitianExpectation * (1 + |result|). Positivity of rho is the
// caller's contract (enforced where density matrices are constructed).
Complex expectation(const OperatorMatrix& a, const Matrix& rho);

// Expectation in a pure state.
Complex expectation(const OperatorMatrix& a, const Vector& psi);

}  // namespace spinfr
