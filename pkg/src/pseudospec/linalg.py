"""Dense complex linear algebra substrate.

Everything in here is a pure function of its inputs: square complex
matrices, general (non-Hermitian) eigendecomposition with a residual
certificate, Hermitian positive-definiteness probes, matrix exponentials
and Frobenius distances.  Eigenvalues are always returned sorted by
(real part, imaginary part) so results are reproducible and diffable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import ConvergenceFailure, DimensionMismatch, NotHermitian

#: Default residual tolerance, relative to max(1, ||A||_F).
DEFAULT_TOL = 1e-10

#: Largest matrix dimension the dense solvers accept.
MAX_DIM = 1024

#: Hermiticity gate, relative to max(1, ||A||_F).
HERMITICITY_TOL = 1e-12


def as_cmatrix(a) -> np.ndarray:
    """Validate and return ``a`` as a square, finite complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite")
    return m


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_cmatrix(a).conj().T


def frob_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a), "fro"))


def frob_distance(a, b) -> float:
    """Frobenius norm of A - B; raises DimensionMismatch on shape conflict."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shapes {a.shape} and {b.shape} differ")
    return float(np.linalg.norm(a - b, "fro"))


def sort_by_re_im(values: np.ndarray) -> np.ndarray:
    """Indices that sort complex values by (Re, Im) ascending."""
    return np.lexsort((values.imag, values.real))


@dataclass(frozen=True)
class EigenSystem:
    """Eigenvalues and right eigenvectors with a residual certificate.

    ``values`` are sorted by (Re, Im); column i of ``vectors`` is the
    unit-norm right eigenvector for ``values[i]``.  ``residual`` bounds
    max_i ||A v_i - lambda_i v_i||_2 / max(1, ||A||_F).
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float

    @property
    def n(self) -> int:
        return len(self.values)


def eigendecompose(a, tol: float = DEFAULT_TOL) -> EigenSystem:
    """Full eigendecomposition of a general complex matrix.

    Delegates to LAPACK (zgeev) and certifies the result: the relative
    residual of every eigenpair must not exceed ``tol``, otherwise
    ConvergenceFailure is raised.

    Parameters
    ----------
    a : array_like
        Square complex matrix, dimension <= 1024.
    tol : float
        Residual bound relative to max(1, ||A||_F).
    """
    m = as_cmatrix(a)
    if m.shape[0] > MAX_DIM:
        raise DimensionMismatch(f"dimension {m.shape[0]} exceeds limit {MAX_DIM}")
    values, vectors = scipy.linalg.eig(m)
    order = sort_by_re_im(values)
    values = values[order]
    vectors = vectors[:, order]
    scale = max(1.0, frob_norm(m))
    resid = float(np.linalg.norm(m @ vectors - vectors * values, axis=0).max()) / scale
    if resid > tol:
        raise ConvergenceFailure(
            f"eigen residual {resid:.3e} exceeds tolerance {tol:.3e}"
        )
    return EigenSystem(values=values, vectors=vectors, residual=resid)


def hermiticity_defect(a) -> float:
    """||A - A^dag||_F / max(1, ||A||_F)."""
    m = as_cmatrix(a)
    return frob_distance(m, m.conj().T) / max(1.0, frob_norm(m))


def min_eig_hermitian(a) -> float:
    """Smallest eigenvalue of a Hermitian matrix.

    The input must be Hermitian to within HERMITICITY_TOL (relative);
    the symmetrized half-sum is handed to the Hermitian solver.
    """
    m = as_cmatrix(a)
    if hermiticity_defect(m) > HERMITICITY_TOL:
        raise NotHermitian(
            f"matrix is not Hermitian (defect {hermiticity_defect(m):.3e})"
        )
    return float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])


def mat_exp(a) -> np.ndarray:
    """Matrix exponential exp(A) (scaling-and-squaring Pade, via scipy)."""
    return scipy.linalg.expm(as_cmatrix(a))
