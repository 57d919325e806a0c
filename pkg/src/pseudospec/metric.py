"""Metric-operator construction, verification and spectrum classification.

The central objects: a similarity relation eta H eta^-1 = H^dag certified
by residuals, positive-definite eta built by summing outer products of
adjoint-block eigenvectors, the associated inner product <f|eta g>, and a
classifier that sorts spectra into all-real / conjugate-paired / mixed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ComplexSpectrum, DimensionMismatch, ExceptionalPoint, NotHermitian
from .linalg import (
    DEFAULT_TOL,
    adjoint,
    as_cmatrix,
    eigendecompose,
    frob_norm,
    mat_exp,
)
from .models import PhysParams

#: Eigenvector-matrix condition number beyond which the spectral
#: construction is refused as too close to an exceptional point.
COND_LIMIT = 1e8

VALID_METRIC = "valid_metric"
INDEFINITE = "indefinite"
RELATION_VIOLATED = "relation_violated"

ALL_REAL = "all_real"
CONJUGATE_PAIRS = "conjugate_pairs"
MIXED = "mixed"


@dataclass(frozen=True)
class MetricOperator:
    """Hermitian metric candidate with provenance and cached PD certificate."""

    eta: np.ndarray
    provenance: str  # spectral | paper_printed | diagonal_derived | user_supplied
    min_eig: float

    def __post_init__(self):
        m = as_cmatrix(self.eta)
        defect = frob_norm(m - m.conj().T) / max(1.0, frob_norm(m))
        if defect > 1e-12:
            raise NotHermitian(f"metric candidate not Hermitian (defect {defect:.3e})")

    @property
    def n(self) -> int:
        return self.eta.shape[0]


def make_metric(eta, provenance: str = "user_supplied") -> MetricOperator:
    """Wrap a Hermitian matrix as a MetricOperator, computing its smallest eigenvalue."""
    m = as_cmatrix(eta)
    min_eig = float(np.linalg.eigvalsh(0.5 * (m + m.conj().T))[0])
    return MetricOperator(eta=m, provenance=provenance, min_eig=min_eig)


@dataclass(frozen=True)
class MetricReport:
    """Certification record for one (H, eta) pair."""

    relation_residual: float
    hermiticity_residual: float
    min_eig: float
    verdict: str

    def to_dict(self) -> dict:
        return {
            "relation_residual": self.relation_residual,
            "hermiticity_residual": self.hermiticity_residual,
            "min_eig": self.min_eig,
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class SpectrumClassification:
    """Verdict on a spectrum: all_real, conjugate_pairs or mixed."""

    kind: str
    pairs: list[tuple[int, int]]
    tol: float


def _eta_matrix(eta) -> np.ndarray:
    if isinstance(eta, MetricOperator):
        return eta.eta
    return as_cmatrix(eta)


def spectral_metric(
    h, normalize: bool = False, tol: float = DEFAULT_TOL
) -> MetricOperator:
    """Build eta as a sum of outer products of adjoint eigenvectors.

    The eigenvectors phi_n of H^dag (real spectrum required) give
    eta = sum_n w_n |phi_n><phi_n|, positive definite for any positive
    weights.  With ``normalize`` False each phi_n is rescaled so its
    largest-modulus component is exactly 1, which reproduces the
    unit-component spinor convention of the closed-form 2x2 models;
    with True the phi_n are unit vectors, so the Hermitian limit gives
    eta = identity.

    Raises ComplexSpectrum if the spectrum is not real to tolerance and
    ExceptionalPoint if the eigenvector matrix condition number exceeds
    COND_LIMIT.
    """
    hm = as_cmatrix(h)
    es = eigendecompose(adjoint(hm), tol)
    imag_excess = np.abs(es.values.imag) - tol * np.maximum(1.0, np.abs(es.values))
    if np.any(imag_excess > 0):
        worst = es.values[int(np.argmax(imag_excess))]
        raise ComplexSpectrum(
            f"spectral construction requires a real spectrum; found {worst}"
        )
    cond = float(np.linalg.cond(es.vectors))
    if cond > COND_LIMIT:
        raise ExceptionalPoint(
            f"eigenvector condition number {cond:.3e} exceeds {COND_LIMIT:.1e}"
        )
    vecs = es.vectors.copy()
    for i in range(vecs.shape[1]):
        col = vecs[:, i]
        if normalize:
            vecs[:, i] = col / np.linalg.norm(col)
        else:
            pivot = col[int(np.argmax(np.abs(col)))]
            vecs[:, i] = col / pivot
    eta = vecs @ vecs.conj().T
    min_eig = float(np.linalg.eigvalsh(0.5 * (eta + eta.conj().T))[0])
    return MetricOperator(eta=eta, provenance="spectral", min_eig=min_eig)


def check_metric(h, eta, tol: float = DEFAULT_TOL) -> MetricReport:
    """Adjudicate a metric candidate against H; never raises on a bad metric.

    Reports the similarity-relation residual ||eta H - H^dag eta||_F
    normalized by max(1, ||H||_F), the hermiticity defect of eta, and the
    smallest eigenvalue of its Hermitian part.  verdict is valid_metric
    iff the relation holds to ``tol`` and the candidate is positive
    definite; a failing relation wins over indefiniteness in the verdict.
    """
    hm = as_cmatrix(h)
    em = _eta_matrix(eta)
    if hm.shape != em.shape:
        raise DimensionMismatch(f"shapes {hm.shape} and {em.shape} differ")
    relation = frob_norm(em @ hm - adjoint(hm) @ em) / max(1.0, frob_norm(hm))
    hermiticity = frob_norm(em - em.conj().T) / max(1.0, frob_norm(em))
    min_eig = float(np.linalg.eigvalsh(0.5 * (em + em.conj().T))[0])
    if relation <= tol and min_eig > 0:
        verdict = VALID_METRIC
    elif relation > tol:
        verdict = RELATION_VIOLATED
    else:
        verdict = INDEFINITE
    return MetricReport(
        relation_residual=relation,
        hermiticity_residual=hermiticity,
        min_eig=min_eig,
        verdict=verdict,
    )


def eta_inner(f, g, eta) -> complex:
    """Inner product <f|eta g> = sum_ij conj(f_i) eta_ij g_j."""
    fv = np.asarray(f, dtype=np.complex128)
    gv = np.asarray(g, dtype=np.complex128)
    em = _eta_matrix(eta)
    if fv.shape != gv.shape or fv.ndim != 1 or em.shape[0] != fv.shape[0]:
        raise DimensionMismatch(
            f"incompatible shapes f {fv.shape}, g {gv.shape}, eta {em.shape}"
        )
    return complex(np.vdot(fv, em @ gv))


def classify_spectrum(values, tol: float = 1e-8) -> SpectrumClassification:
    """Sort a spectrum into all_real / conjugate_pairs / mixed.

    A value is real when |Im| <= tol * max(1, |value|).  Otherwise a
    greedy matching (sorted by Re, then |Im|) pairs each value with the
    nearest conjugate partner; if every value is matched the spectrum is
    conjugate-paired, else mixed.  Real values pair with themselves.
    """
    vals = np.asarray(values, dtype=np.complex128).ravel()
    n = len(vals)
    scale = tol * np.maximum(1.0, np.abs(vals))
    is_real = np.abs(vals.imag) <= scale
    if np.all(is_real):
        return SpectrumClassification(
            kind=ALL_REAL, pairs=[(i, i) for i in range(n)], tol=tol
        )
    order = sorted(range(n), key=lambda i: (vals[i].real, abs(vals[i].imag)))
    unmatched = set(order)
    pairs: list[tuple[int, int]] = []
    for i in order:
        if i not in unmatched:
            continue
        if is_real[i]:
            unmatched.discard(i)
            pairs.append((i, i))
            continue
        unmatched.discard(i)
        best_j, best_d = -1, np.inf
        for j in unmatched:
            d = abs(vals[i] - np.conj(vals[j]))
            if d < best_d:
                best_j, best_d = j, d
        if best_j >= 0 and best_d <= tol * max(1.0, abs(vals[i])):
            unmatched.discard(best_j)
            pairs.append((i, best_j))
        else:
            return SpectrumClassification(kind=MIXED, pairs=pairs, tol=tol)
    return SpectrumClassification(kind=CONJUGATE_PAIRS, pairs=pairs, tol=tol)


def evolve(h, t: float, pp: PhysParams) -> np.ndarray:
    """Propagator U(t) = exp(-i t H / hbar)."""
    if not np.isfinite(t):
        raise ValueError(f"t must be finite, got {t}")
    hm = as_cmatrix(h)
    return mat_exp(-1j * (t / pp.hbar) * hm)
