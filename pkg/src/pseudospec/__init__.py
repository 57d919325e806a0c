"""Spectra and positive-definite metric operators for two non-Hermitian Dirac models."""

from .errors import (
    AsymmetricGrid,
    ComplexSpectrum,
    ConvergenceFailure,
    DimensionMismatch,
    ExceptionalPoint,
    NoAnalyticDerivative,
    NotHermitian,
    NotPositiveDefinite,
    OddPotential,
    PseudospecError,
    SampleGridMismatch,
    SchemeBoundaryMismatch,
    SingularDenominator,
)
from .grid import (
    ConvergenceStudy,
    DiracGridOperator,
    Grid1D,
    PotentialSpec,
    ReducedOperator,
    build_dirac_grid,
    build_reduced,
    convergence_study,
    derivative_matrix,
    dirac_parity_matrix,
    grid_parity_residual,
    make_grid,
    reduced_to_dirac_energies,
    reduction_identity_mismatch,
    reflection_conjugation_residual,
    reflection_permutation,
)
from .linalg import (
    DEFAULT_TOL,
    EigenSystem,
    adjoint,
    eigendecompose,
    frob_distance,
    mat_exp,
    min_eig_hermitian,
)
from .metric import (
    MetricOperator,
    MetricReport,
    SpectrumClassification,
    check_metric,
    classify_spectrum,
    eta_inner,
    evolve,
    make_metric,
    spectral_metric,
)
from .models import (
    AdjointSpinors,
    Momentum2,
    PhysParams,
    build_rashba,
    build_scalar_const,
    eta_diag_rashba,
    eta_paper_rashba,
    eta_paper_scalar,
    parity_matrix,
    rashba_adjoint_spinors,
    rashba_energy,
    rashba_parity_residuals,
    scalar_adjoint_spinors,
    scalar_energy,
    scalar_parity_residual,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointSpinors",
    "AsymmetricGrid",
    "ComplexSpectrum",
    "ConvergenceFailure",
    "ConvergenceStudy",
    "DEFAULT_TOL",
    "DimensionMismatch",
    "DiracGridOperator",
    "EigenSystem",
    "ExceptionalPoint",
    "Grid1D",
    "MetricOperator",
    "MetricReport",
    "Momentum2",
    "NoAnalyticDerivative",
    "NotHermitian",
    "NotPositiveDefinite",
    "OddPotential",
    "PhysParams",
    "PotentialSpec",
    "PseudospecError",
    "ReducedOperator",
    "SampleGridMismatch",
    "SchemeBoundaryMismatch",
    "SingularDenominator",
    "SpectrumClassification",
    "adjoint",
    "build_dirac_grid",
    "build_rashba",
    "build_reduced",
    "build_scalar_const",
    "check_metric",
    "classify_spectrum",
    "convergence_study",
    "derivative_matrix",
    "dirac_parity_matrix",
    "eigendecompose",
    "eta_diag_rashba",
    "eta_inner",
    "eta_paper_rashba",
    "eta_paper_scalar",
    "evolve",
    "frob_distance",
    "grid_parity_residual",
    "make_grid",
    "make_metric",
    "mat_exp",
    "min_eig_hermitian",
    "parity_matrix",
    "rashba_adjoint_spinors",
    "rashba_energy",
    "rashba_parity_residuals",
    "reduced_to_dirac_energies",
    "reduction_identity_mismatch",
    "reflection_conjugation_residual",
    "reflection_permutation",
    "scalar_adjoint_spinors",
    "scalar_energy",
    "scalar_parity_residual",
    "spectral_metric",
]
