"""Exception types shared across the package."""


class PseudospecError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(PseudospecError):
    """Operands have incompatible shapes."""


class NotHermitian(PseudospecError):
    """A matrix required to be Hermitian is not, beyond tolerance."""


class ConvergenceFailure(PseudospecError):
    """Eigensolver failed to meet the requested residual target."""


class ComplexSpectrum(PseudospecError):
    """Operation requires a real spectrum but complex eigenvalues were found."""


class ExceptionalPoint(PseudospecError):
    """Parameters too close to an eigenvalue/eigenvector coalescence."""


class SingularDenominator(PseudospecError):
    """Closed-form expression hits a vanishing denominator."""


class NotPositiveDefinite(PseudospecError):
    """Candidate metric is not positive definite for these parameters."""


class AsymmetricGrid(PseudospecError):
    """Grid constraints (symmetry, size, parity of N) violated."""


class SchemeBoundaryMismatch(PseudospecError):
    """Differentiation scheme incompatible with the boundary condition."""


class OddPotential(PseudospecError):
    """Potential samples fail the evenness gate V(-x) = V(x)."""


class NoAnalyticDerivative(PseudospecError):
    """Potential family has no closed-form derivative."""


class SampleGridMismatch(PseudospecError):
    """Sampled potential abscissae do not coincide with the grid points."""
