"""Fourier frames for singular measures on the unit circle."""

from ._core import (
    AtomicMeasure,
    BlaschkeProduct,
    CheckResult,
    ClarkAtomSet,
    CompositionCheck,
    DensityMeasure,
    ExpansionTrace,
    FrameOperatorSnapshot,
    FramePolynomial,
    GramMatrix,
    InnerFunction,
    KaczmarzTrace,
    NumericError,
    RadialSweep,
    ResourceError,
    SelfSimilarMeasure,
    TorusPoint,
    TruncatedSeries,
    UCoefficients,
    VerificationReport,
    aleksandrov_residual,
    atomic_measure,
    atomize,
    backward_shift,
    blaschke_product,
    boundary_limit_check,
    boundary_values,
    cantor_measure,
    cauchy,
    cauchy_of,
    clark_composition_check,
    clark_measure,
    density_measure,
    disc_grid,
    divisor_check,
    dual_sequence,
    expand,
    file_hash,
    fourier_coeff,
    fourier_coeffs,
    frame_deviation,
    frame_deviation_profile,
    frame_operator_snapshot,
    frame_polynomial,
    frame_vector,
    gram,
    herglotz,
    kaczmarz_run,
    kernel_double_series,
    l2_inner,
    l2_norm,
    load_measure_spec,
    model_kernel,
    monomial_vector,
    normalized_cauchy,
    parse_measure_spec,
    parseval_sums,
    phi_series,
    poisson,
    poisson_phi_residual,
    project_monomial,
    quadrature_measure,
    run_verification,
    self_similar_measure,
    toeplitz_identity_residual,
    torus_point,
    u_coefficients,
    v_alpha,
    v_alpha_coefficients,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
