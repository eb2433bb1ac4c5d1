"""Quantum model of single-electron-spin Faraday rotation.

Closed-form rotation angle and quantum noise for mixed spin states, an exact
truncated-Hilbert-space evolution oracle, and spin-purity estimation from
measured noise records. The compiled core lives in ``spinfaraday._core``.
"""

from ._core import (
    CoherentAmplitudes,
    ConfigError,
    ElectronLevel,
    HamiltonianPart,
    IoError,
    NoiseBudget,
    NumericalError,
    OracleReport,
    PAPER_PHOTON_NUMBER,
    PAPER_TIME_S,
    PhotonMode,
    PhysicalParams,
    PolarizationClass,
    PolarizationEllipse,
    PurityEstimate,
    PurityMode,
    SigmaKind,
    StokesVector,
    __version__,
    annihilation_matrix,
    classify,
    ellipse_to_stokes,
    estimate_from_records,
    faraday_angle,
    faraday_exact,
    faraday_fluctuation,
    faraday_from_stokes,
    hamiltonian_matrix,
    heisenberg_residual,
    initial_density_matrix,
    jones_to_stokes,
    purity_from_noise,
    read_record,
    rotation_in_s1_s2,
    sigma_matrix,
    simulate_background,
    simulate_record,
    solution_coefficients,
    stokes_to_ellipse,
    write_record,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
