"""Relativistic J-matrix scattering phase shifts for M-term separable
potentials with Laguerre-type form factors, in Laguerre and oscillator
bases and for general angular momentum."""

from ._core import (  # noqa: F401
    Basis,
    ChannelConfig,
    CoefficientPair,
    CRule,
    CRuleKind,
    JmatrixError,
    Kinematical,
    KinematicState,
    Method,
    SeparablePotential,
    SMatrixPoint,
    SolutionCoefficients,
    TridiagonalRepr,
    coefficient_pair,
    cosine_like,
    emit_table_json,
    gauss_2f1_terminating,
    gegenbauer,
    h0_matrix,
    j_matrix,
    kinematic_state,
    kinematical,
    kummer_1f1,
    laguerre,
    ln_gamma,
    omega_angle,
    omega_matrix,
    phi_upper,
    pochhammer,
    resolve_c,
    run_check,
    s_matrix_analytic,
    s_matrix_m1,
    s_matrix_m2,
    s_matrix_m3,
    s_matrix_numeric,
    sine_like,
    solve_coefficients,
    unwrap_phase,
    wavenumber,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
