#pragma once

// Central numerical tolerances. Everything that gates a consistency check
// lives here rather than as a scattered literal.

namespace spinfr::tol {

// Hermiticity verification: max|A - A^dag| < kHermitian * max|A|.
inline constexpr double kHermitian = 1e-12;

// Density-matrix trace normalization.
inline constexpr double kTrace = 1e-10;

// Positive semidefiniteness: eigenvalues of a density matrix may dip to
// -kPsdFloor from rounding.
inline constexpr double kPsdFloor = 1e-10;

// Default bound on the discarded Poisson tail of a truncated coherent state.
inline constexpr double kCoherentTailDefault = 1e-12;

// Boson commutation identities on cutoff-protected subspaces.
inline constexpr double kBosonCommutator = 1e-12;

// Spectral decomposition: ||V E V^dag - H||_max < kSpectralReconstruction * ||H||_max.
inline constexpr double kSpectralReconstruction = 1e-9;

// Spectral decomposition: ||V^dag V - I||_max.
inline constexpr double kUnitary = 1e-10;

// Trace drift allowed through unitary evolution.
inline constexpr double kEvolveTrace = 1e-10;

// Eigenvalue spectrum drift of a density matrix through unitary evolution.
inline constexpr double kSpectrumDrift = 1e-8;

// Imaginary part allowed on the expectation of a Hermitian operator,
// relative to (1 + |result|).
inline constexpr double kHermitianExpectation = 1e-10;

// Relative excitation-number conservation through exact evolution.
inline constexpr double kExcitationRel = 1e-9;

// Denominator guard for the Stokes angle extraction: require
// |<S2>| > kS2Guard * <S0>.
inline constexpr double kS2Guard = 1e-9;

// Floating-point slop tolerated on the purity radicand outside [0, 1]
// before the inputs are declared inconsistent.
inline constexpr double kRadicandSlop = 1e-9;

// Exact algebraic identities checked through floating point.
inline constexpr double kExactIdentity = 1e-12;

// Degree-of-polarization window accepted by the ellipse bijection.
inline constexpr double kFullyPolarized = 1e-6;

// Default cap on the composite Hilbert-space dimension for oracle runs.
inline constexpr int kMaxCompositeDimension = 5000;

}  // namespace spinfr::tol
