"""Command-line front end.

Grammar::

    pseudospec <command> --model <m> [--m0 X --c X --hbar X] [model flags]
               [--grid-L X --grid-n N --bc periodic|dirichlet
                --scheme central2|fourier] [--tol X] [--format json|csv]
               [--out PATH]

Commands: spectrum, metric, verify, reduce, sweep, evolve, converge.
Models: rashba (flags --lambda --kx --ky), scalar_const (--v0 --kx),
scalar_grid (--potential ... plus grid flags).

Exit codes: 0 success, 2 usage/parameter error, 3 solver failure,
4 regime violation.  Errors are mirrored as one-line JSON on stderr.
Output bytes are deterministic for identical flags; wall-clock timing
goes to stderr only.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import grid as gridmod
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
from .linalg import DEFAULT_TOL, adjoint, eigendecompose, frob_norm, sort_by_re_im
from .metric import (
    ALL_REAL,
    CONJUGATE_PAIRS,
    check_metric,
    classify_spectrum,
    evolve,
    make_metric,
    spectral_metric,
)
from .models import (
    Momentum2,
    PhysParams,
    build_rashba,
    build_scalar_const,
    eta_diag_rashba,
    eta_paper_rashba,
    eta_paper_scalar,
    rashba_adjoint_spinors,
    rashba_energy,
    rashba_parity_residuals,
    scalar_adjoint_spinors,
    scalar_energy,
    scalar_parity_residual,
)
from .records import CSV, JSON, ResultRecord, complex_table, emit

RASHBA = "rashba"
SCALAR_CONST = "scalar_const"
SCALAR_GRID = "scalar_grid"

COMMANDS = ("spectrum", "metric", "verify", "reduce", "sweep", "evolve", "converge")

EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_REGIME = 4

_USAGE_ERRORS = (
    ValueError,
    OddPotential,
    AsymmetricGrid,
    SampleGridMismatch,
    NoAnalyticDerivative,
    SchemeBoundaryMismatch,
    DimensionMismatch,
    FileNotFoundError,
)
_SOLVER_ERRORS = (ConvergenceFailure, np.linalg.LinAlgError)
_REGIME_ERRORS = (
    ComplexSpectrum,
    ExceptionalPoint,
    SingularDenominator,
    NotPositiveDefinite,
    NotHermitian,
)


def default_tol() -> float:
    env = os.environ.get("PSEUDOSPEC_TOL")
    return float(env) if env else DEFAULT_TOL


@dataclass
class RunConfig:
    """Fully resolved invocation: command, model and every parameter."""

    command: str
    model: str = RASHBA
    params: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL
    fmt: str = JSON
    out: str | None = None
    # grid / potential (scalar_grid)
    grid_l: float = math.pi
    grid_n: int = 64
    bc: str = gridmod.PERIODIC
    scheme: str = gridmod.FOURIER
    potential: str = "constant"
    pot_file: str | None = None
    form: str = gridmod.PRODUCT_EXACT
    # sweep
    sweep_param: str | None = None
    sweep_min: float = 0.0
    sweep_max: float = 0.0
    sweep_steps: int = 0
    # metric / evolve
    methods: tuple[str, ...] = ("spectral",)
    normalize: bool = False
    times: tuple[float, ...] = (1.0,)
    # converge
    ns: tuple[int, ...] = ()
    track_level: int = 0

    def param(self, name: str, default: float = 0.0) -> float:
        return float(self.params.get(name, default))


def _phys(cfg: RunConfig) -> PhysParams:
    return PhysParams(
        m0=cfg.param("m0", 1.0), c=cfg.param("c", 1.0), hbar=cfg.param("hbar", 1.0)
    )


def _require_model(cfg: RunConfig, allowed: tuple[str, ...]) -> None:
    if cfg.model not in allowed:
        raise ValueError(
            f"command {cfg.command!r} supports models {allowed}, got {cfg.model!r}"
        )
    for key, value in cfg.params.items():
        if not np.isfinite(value):
            raise ValueError(f"parameter {key} is not finite: {value}")


def _block_and_analytic(cfg: RunConfig):
    pp = _phys(cfg)
    if cfg.model == RASHBA:
        k = Momentum2(cfg.param("kx"), cfg.param("ky"))
        lam = cfg.param("lambda")
        return build_rashba(k, pp, lam), rashba_energy(k, pp, lam)
    kx = cfg.param("kx")
    v0 = cfg.param("v0")
    return build_scalar_const(kx, pp, v0), scalar_energy(kx, pp, v0)


def _potential(cfg: RunConfig) -> gridmod.PotentialSpec:
    if cfg.potential == "constant":
        return gridmod.PotentialSpec.constant(cfg.param("v0"))
    if cfg.potential == "cosine":
        return gridmod.PotentialSpec.cosine(cfg.param("g"), int(cfg.param("mode", 1)))
    if cfg.potential == "gaussian":
        return gridmod.PotentialSpec.gaussian(cfg.param("g"), cfg.param("width", 1.0))
    if cfg.potential == "samples":
        if not cfg.pot_file:
            raise ValueError("samples potential needs --file PATH")
        return gridmod.PotentialSpec.from_csv(cfg.pot_file)
    raise ValueError(f"unknown potential {cfg.potential!r}")


def _record_params(cfg: RunConfig) -> dict:
    out: dict = {
        "m0": cfg.param("m0", 1.0),
        "c": cfg.param("c", 1.0),
        "hbar": cfg.param("hbar", 1.0),
    }
    if cfg.model == RASHBA:
        out["lambda"] = cfg.param("lambda")
        out["kx"] = cfg.param("kx")
        out["ky"] = cfg.param("ky")
    elif cfg.model == SCALAR_CONST:
        out["v0"] = cfg.param("v0")
        out["kx"] = cfg.param("kx")
    else:
        out.update(_potential(cfg).describe())
        out["grid_L"] = cfg.grid_l
        out["grid_n"] = cfg.grid_n
        out["bc"] = cfg.bc
        out["scheme"] = cfg.scheme
    out["tol"] = cfg.tol
    return out


def _sorted_pair(pair) -> np.ndarray:
    vals = np.asarray(pair, dtype=np.complex128)
    return vals[sort_by_re_im(vals)]


def run_spectrum(cfg: RunConfig) -> ResultRecord:
    """Numerical (and, for 2x2 models, analytic) spectrum with classification."""
    _require_model(cfg, (RASHBA, SCALAR_CONST, SCALAR_GRID))
    if cfg.model in (RASHBA, SCALAR_CONST):
        h, analytic = _block_and_analytic(cfg)
        es = eigendecompose(h, cfg.tol)
        cls = classify_spectrum(es.values, cfg.tol)
        return ResultRecord(
            model=cfg.model,
            params=_record_params(cfg),
            eigenvalues=complex_table(es.values),
            analytic_eigenvalues=complex_table(_sorted_pair(analytic)),
            classification=cls.kind,
        )
    pp = _phys(cfg)
    g = gridmod.make_grid(cfg.grid_l, cfg.grid_n, cfg.bc)
    op = gridmod.build_dirac_grid(_potential(cfg), g, pp, cfg.scheme)
    es = eigendecompose(op.matrix, cfg.tol)
    cls = classify_spectrum(es.values, cfg.tol)
    return ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        eigenvalues=complex_table(es.values),
        classification=cls.kind,
    )


def _metric_candidates(cfg: RunConfig, h, pp: PhysParams) -> dict:
    out: dict = {}
    for method in cfg.methods:
        if method == "spectral":
            out[method] = spectral_metric(h, normalize=cfg.normalize, tol=cfg.tol)
        elif method == "paper":
            if cfg.model == RASHBA:
                k = Momentum2(cfg.param("kx"), cfg.param("ky"))
                eta = eta_paper_rashba(k, pp, cfg.param("lambda"))
            else:
                eta = eta_paper_scalar(cfg.param("kx"), pp, cfg.param("v0"))
            out[method] = make_metric(eta, "paper_printed")
        elif method == "diagonal":
            if cfg.model != RASHBA:
                raise ValueError("--method diagonal applies to the rashba model only")
            out[method] = make_metric(eta_diag_rashba(pp, cfg.param("lambda")),
                                      "diagonal_derived")
        else:
            raise ValueError(f"unknown metric method {method!r}")
    return out


def run_metric(cfg: RunConfig) -> ResultRecord:
    """Construct the requested metric candidates and adjudicate each one."""
    _require_model(cfg, (RASHBA, SCALAR_CONST))
    pp = _phys(cfg)
    h, _ = _block_and_analytic(cfg)
    candidates = _metric_candidates(cfg, h, pp)
    reports = {name: check_metric(h, eta, cfg.tol) for name, eta in candidates.items()}
    es = eigendecompose(h, cfg.tol)
    cls = classify_spectrum(es.values, cfg.tol)
    record = ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        eigenvalues=complex_table(es.values),
        classification=cls.kind,
    )
    if len(reports) == 1:
        record.metric_report = next(iter(reports.values()))
    else:
        record.metric_reports = reports
    return record


def _sweep_point(cfg: RunConfig, value: float):
    params = dict(cfg.params)
    params[cfg.sweep_param] = value
    sub = RunConfig(
        command="spectrum",
        model=cfg.model,
        params=params,
        tol=cfg.tol,
        grid_l=cfg.grid_l,
        grid_n=cfg.grid_n,
        bc=cfg.bc,
        scheme=cfg.scheme,
        potential=cfg.potential,
        pot_file=cfg.pot_file,
    )
    if cfg.model in (RASHBA, SCALAR_CONST):
        h, _ = _block_and_analytic(sub)
        values = eigendecompose(h, cfg.tol).values
    else:
        pp = _phys(sub)
        g = gridmod.make_grid(cfg.grid_l, cfg.grid_n, cfg.bc)
        op = gridmod.build_reduced(_potential(sub), g, pp, cfg.scheme, cfg.form)
        values = eigendecompose(op.matrix, cfg.tol).values
    kind = classify_spectrum(values, cfg.tol).kind
    return values, kind


_SWEEPABLE = {
    RASHBA: ("lambda", "kx", "ky"),
    SCALAR_CONST: ("v0", "kx"),
    SCALAR_GRID: ("v0", "g", "width"),
}


def run_sweep(cfg: RunConfig) -> ResultRecord:
    """Classify the spectrum along a 1-parameter sweep; bisect a reality threshold.

    For the grid model the classified spectrum is the component-eliminated
    operator's, whose reality breaking is the object of interest.
    """
    _require_model(cfg, (RASHBA, SCALAR_CONST, SCALAR_GRID))
    if cfg.sweep_param is None or cfg.sweep_steps < 2:
        raise ValueError("sweep needs --sweep-param, --sweep-min/max and --sweep-steps >= 2")
    if cfg.sweep_param not in _SWEEPABLE[cfg.model]:
        raise ValueError(
            f"cannot sweep {cfg.sweep_param!r} for model {cfg.model!r}; "
            f"choose from {_SWEEPABLE[cfg.model]}"
        )
    if not cfg.sweep_max > cfg.sweep_min:
        raise ValueError("sweep range must satisfy max > min")
    grid_values = np.linspace(cfg.sweep_min, cfg.sweep_max, cfg.sweep_steps)
    points = []
    kinds = []
    for v in grid_values:
        values, kind = _sweep_point(cfg, float(v))
        kinds.append(kind)
        points.append(
            {
                "value": float(v),
                "eigenvalues": complex_table(values),
                "classification": kind,
            }
        )
    threshold = None
    for i in range(len(grid_values) - 1):
        if kinds[i] == ALL_REAL and kinds[i + 1] != ALL_REAL:
            lo, hi = float(grid_values[i]), float(grid_values[i + 1])
            while hi - lo > 1e-9 * max(1.0, abs(hi)):
                mid = 0.5 * (lo + hi)
                _, kind = _sweep_point(cfg, mid)
                if kind == ALL_REAL:
                    lo = mid
                else:
                    hi = mid
            threshold = {"param": cfg.sweep_param, "value": 0.5 * (lo + hi)}
            break
    return ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        sweep={
            "param": cfg.sweep_param,
            "min": cfg.sweep_min,
            "max": cfg.sweep_max,
            "steps": cfg.sweep_steps,
            "points": points,
        },
        threshold=threshold,
        include_threshold=True,
    )


def run_reduce(cfg: RunConfig) -> ResultRecord:
    """Grid solve: Dirac spectrum, component-eliminated spectrum, exact identity check."""
    _require_model(cfg, (SCALAR_GRID,))
    pp = _phys(cfg)
    g = gridmod.make_grid(cfg.grid_l, cfg.grid_n, cfg.bc)
    spec = _potential(cfg)
    dirac = gridmod.build_dirac_grid(spec, g, pp, cfg.scheme)
    reduced = gridmod.build_reduced(spec, g, pp, cfg.scheme, cfg.form)
    dirac_es = eigendecompose(dirac.matrix, cfg.tol)
    reduced_es = eigendecompose(reduced.matrix, cfg.tol)
    mapped = gridmod.reduced_to_dirac_energies(reduced_es.values, pp)
    mapped = mapped[sort_by_re_im(mapped)]
    mismatch = gridmod.reduction_identity_mismatch(
        dirac_es.values, reduced_es.values, pp
    )
    cls = classify_spectrum(dirac_es.values, cfg.tol)
    reduced_cls = classify_spectrum(reduced_es.values, max(cfg.tol, 1e-8))
    return ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        eigenvalues=complex_table(dirac_es.values),
        classification=cls.kind,
        reduction={
            "form": cfg.form,
            "identity_mismatch": mismatch,
            "reduced_classification": reduced_cls.kind,
            "reduced_eigenvalues": complex_table(reduced_es.values),
            "mapped_eigenvalues": complex_table(mapped),
        },
    )


def _check(name: str, value: float, tol: float | None, gate: bool = True) -> dict:
    ok = None if (tol is None or not gate) else bool(value <= tol)
    return {"name": name, "value": float(value), "tol": tol, "pass": ok}


def _verify_block(cfg: RunConfig) -> list[dict]:
    pp = _phys(cfg)
    h, analytic = _block_and_analytic(cfg)
    hd = adjoint(h)
    scale = max(1.0, frob_norm(h))
    es = eigendecompose(h, cfg.tol)
    ana = _sorted_pair(analytic)
    checks = [
        _check(
            "spectrum_matches_closed_form",
            float(np.max(np.abs(es.values - ana) / np.maximum(1.0, np.abs(ana)))),
            cfg.tol,
        ),
        _check(
            "eigenvalues_in_plus_minus_pairs",
            float(abs(es.values[0] + es.values[-1]) / max(1.0, abs(es.values[-1]))),
            1e-12,
        ),
    ]
    if cfg.model == RASHBA:
        k = Momentum2(cfg.param("kx"), cfg.param("ky"))
        lam = cfg.param("lambda")
        spinors = rashba_adjoint_spinors(k, pp, lam)
        try:
            paper_eta = eta_paper_rashba(k, pp, lam)
        except SingularDenominator:
            paper_eta = None  # closed form undefined at E^2 = (m0 c^2)^2
    else:
        kx, v0 = cfg.param("kx"), cfg.param("v0")
        spinors = scalar_adjoint_spinors(kx, pp, v0)
        try:
            paper_eta = eta_paper_scalar(kx, pp, v0)
        except SingularDenominator:
            paper_eta = None
    e = spinors.energy
    checks.append(
        _check(
            "adjoint_spinor_residual_u1",
            float(np.linalg.norm(hd @ spinors.u1 - e * spinors.u1)) / scale,
            1e-10,
        )
    )
    checks.append(
        _check(
            "adjoint_spinor_residual_u2",
            float(np.linalg.norm(hd @ spinors.u2 + e * spinors.u2)) / scale,
            1e-10,
        )
    )
    eta = spectral_metric(h, normalize=cfg.normalize, tol=cfg.tol)
    rep = check_metric(h, eta, cfg.tol)
    checks.append(_check("spectral_metric_relation", rep.relation_residual, cfg.tol))
    checks.append(_check("spectral_metric_min_eig", rep.min_eig, None))
    checks.append(
        _check(
            "spectral_metric_positive_definite",
            0.0 if rep.min_eig > 0 else 1.0,
            0.5,
        )
    )
    paper_rep = check_metric(h, paper_eta, cfg.tol)
    checks.append(
        _check(
            "printed_metric_relation",
            paper_rep.relation_residual,
            cfg.tol,
            gate=False,
        )
    )
    checks.append(_check("printed_metric_min_eig", paper_rep.min_eig, None))
    if cfg.model == RASHBA:
        lam = cfg.param("lambda")
        if abs(lam) < pp.c:
            diag_rep = check_metric(h, eta_diag_rashba(pp, lam), cfg.tol)
            checks.append(
                _check("diagonal_metric_relation", diag_rep.relation_residual, 1e-14)
            )
        parity = rashba_parity_residuals(
            Momentum2(cfg.param("kx"), cfg.param("ky")), pp, lam
        )
        checks.append(
            _check(
                "parity_conjugation_vs_adjoint",
                parity["parity_vs_adjoint"],
                cfg.tol,
                gate=False,
            )
        )
        checks.append(
            _check(
                "parity_with_reversal_vs_adjoint",
                parity["parity_with_reversal_vs_adjoint"],
                cfg.tol,
                gate=False,
            )
        )
        checks.append(
            _check(
                "parity_conjugation_vs_reflected_k",
                parity["parity_vs_reflected_k"],
                1e-12,
            )
        )
    else:
        checks.append(
            _check(
                "parity_with_momentum_reversal_vs_adjoint",
                scalar_parity_residual(cfg.param("kx"), pp, cfg.param("v0")),
                1e-12,
            )
        )
    u = evolve(h, 1.0, pp)
    eta_norm = frob_norm(eta.eta)
    checks.append(
        _check(
            "pseudo_unitarity_t1",
            frob_norm(u.conj().T @ eta.eta @ u - eta.eta) / eta_norm,
            1e-8,
        )
    )
    return checks


def _verify_grid(cfg: RunConfig) -> list[dict]:
    pp = _phys(cfg)
    g = gridmod.make_grid(cfg.grid_l, cfg.grid_n, cfg.bc)
    spec = _potential(cfg)
    d = gridmod.derivative_matrix(g, cfg.scheme)
    perm = gridmod.reflection_permutation(g)
    dirac = gridmod.build_dirac_grid(spec, g, pp, cfg.scheme)
    reduced = gridmod.build_reduced(spec, g, pp, cfg.scheme, gridmod.PRODUCT_EXACT)
    dirac_es = eigendecompose(dirac.matrix, cfg.tol)
    reduced_es = eigendecompose(reduced.matrix, cfg.tol)
    checks = [
        _check(
            "derivative_reflects_odd",
            float(np.max(np.abs(d[np.ix_(perm, perm)] + d))),
            0.0,
        ),
        _check(
            "grid_parity_pseudo_hermiticity",
            gridmod.grid_parity_residual(dirac.matrix, g),
            1e-12,
        ),
        _check(
            "reduced_reflection_conjugation",
            gridmod.reflection_conjugation_residual(reduced.matrix, g),
            1e-12,
        ),
        _check(
            "reduction_identity_mismatch",
            gridmod.reduction_identity_mismatch(dirac_es.values, reduced_es.values, pp),
            1e-8,
        ),
    ]
    kind = classify_spectrum(reduced_es.values, max(cfg.tol, 1e-8)).kind
    checks.append(
        _check(
            "reduced_spectrum_conjugate_closed",
            0.0 if kind in (ALL_REAL, CONJUGATE_PAIRS) else 1.0,
            0.5,
        )
    )
    return checks


def run_verify(cfg: RunConfig) -> ResultRecord:
    """Certification battery for the chosen model at the given parameters."""
    _require_model(cfg, (RASHBA, SCALAR_CONST, SCALAR_GRID))
    checks = (
        _verify_grid(cfg) if cfg.model == SCALAR_GRID else _verify_block(cfg)
    )
    gated = [c["pass"] for c in checks if c["pass"] is not None]
    return ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        checks=checks,
        extra_scalars={"all_passed": bool(all(gated))},
    )


def run_evolve(cfg: RunConfig) -> ResultRecord:
    """Propagator checks: eta-pseudo-unitarity versus naive unitarity."""
    _require_model(cfg, (RASHBA, SCALAR_CONST))
    pp = _phys(cfg)
    h, _ = _block_and_analytic(cfg)
    eta = spectral_metric(h, normalize=cfg.normalize, tol=cfg.tol)
    eta_norm = frob_norm(eta.eta)
    ident = np.eye(h.shape[0])
    rows = []
    for t in cfg.times:
        u = evolve(h, t, pp)
        rows.append(
            {
                "t": float(t),
                "pseudo_unitarity_residual": frob_norm(
                    u.conj().T @ eta.eta @ u - eta.eta
                )
                / eta_norm,
                "naive_unitarity_defect": frob_norm(u.conj().T @ u - ident),
            }
        )
    return ResultRecord(model=cfg.model, params=_record_params(cfg), evolution=rows)


def run_converge(cfg: RunConfig) -> ResultRecord:
    """Grid-refinement study of the lowest-|E| eigenvalue."""
    _require_model(cfg, (SCALAR_GRID,))
    if not cfg.ns:
        raise ValueError("converge needs at least one --N")
    study = gridmod.convergence_study(
        _potential(cfg),
        _phys(cfg),
        list(cfg.ns),
        scheme=cfg.scheme,
        half_length=cfg.grid_l,
        bc=cfg.bc,
        tol=cfg.tol,
        track_level=cfg.track_level,
    )
    return ResultRecord(
        model=cfg.model,
        params=_record_params(cfg),
        study={
            "scheme": study.scheme,
            "track_level": study.track_level,
            "ref_n": study.ref_n,
            "ref_value": study.ref_value,
            "rows": [{"n": n, "error": err} for n, err in study.rows],
        },
    )


_RUNNERS = {
    "spectrum": run_spectrum,
    "metric": run_metric,
    "verify": run_verify,
    "reduce": run_reduce,
    "sweep": run_sweep,
    "evolve": run_evolve,
    "converge": run_converge,
}


def run(cfg: RunConfig) -> ResultRecord:
    if cfg.command not in _RUNNERS:
        raise ValueError(f"unknown command {cfg.command!r}")
    return _RUNNERS[cfg.command](cfg)


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pseudospec",
        description=(
            "Spectra, reality thresholds and positive-definite metric operators "
            "for two non-Hermitian Dirac models."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)
    for name, doc in (
        ("spectrum", "eigenvalues (numerical + closed form) and classification"),
        ("metric", "construct and adjudicate metric candidates"),
        ("verify", "run the full certification battery"),
        ("reduce", "grid solve with the exact component-elimination identity"),
        ("sweep", "1-parameter sweep with reality-threshold bisection"),
        ("evolve", "propagator pseudo-unitarity checks"),
        ("converge", "grid-refinement convergence study"),
    ):
        sp = sub.add_parser(name, help=doc)
        sp.add_argument(
            "--model",
            choices=(RASHBA, SCALAR_CONST, SCALAR_GRID),
            default=RASHBA,
        )
        sp.add_argument("--m0", type=float, default=1.0)
        sp.add_argument("--c", type=float, default=1.0)
        sp.add_argument("--hbar", type=float, default=1.0)
        sp.add_argument("--lambda", dest="lam", type=float, default=0.0,
                        help="imaginary spin-orbit coupling strength (rashba)")
        sp.add_argument("--kx", type=float, default=0.0)
        sp.add_argument("--ky", type=float, default=0.0)
        sp.add_argument("--v0", type=float, default=0.0,
                        help="scalar potential strength (scalar models)")
        sp.add_argument("--grid-L", dest="grid_l", type=float, default=math.pi)
        sp.add_argument("--grid-n", dest="grid_n", type=int, default=64)
        sp.add_argument("--bc", choices=(gridmod.PERIODIC, gridmod.DIRICHLET),
                        default=gridmod.PERIODIC)
        sp.add_argument("--scheme", choices=(gridmod.CENTRAL2, gridmod.FOURIER),
                        default=gridmod.FOURIER)
        sp.add_argument("--potential",
                        choices=("constant", "cosine", "gaussian", "samples"),
                        default="constant")
        sp.add_argument("--g", type=float, default=0.0,
                        help="amplitude for cosine/gaussian potentials")
        sp.add_argument("--mode", type=int, default=1,
                        help="cosine mode number")
        sp.add_argument("--width", type=float, default=1.0,
                        help="gaussian width")
        sp.add_argument("--file", dest="pot_file", default=None,
                        help="CSV file for the samples potential")
        sp.add_argument("--tol", type=float, default=None)
        sp.add_argument("--format", dest="fmt", choices=(JSON, CSV), default=JSON)
        sp.add_argument("--out", default=None)
        if name == "sweep":
            sp.add_argument("--sweep-param", required=True)
            sp.add_argument("--sweep-min", type=float, required=True)
            sp.add_argument("--sweep-max", type=float, required=True)
            sp.add_argument("--sweep-steps", type=int, required=True)
        if name == "metric":
            sp.add_argument("--method", action="append",
                            choices=("spectral", "paper", "diagonal", "all"),
                            help="repeatable; default spectral")
            sp.add_argument("--normalize", action="store_true",
                            help="unit-norm eigenvectors in the spectral sum")
        if name == "evolve":
            sp.add_argument("--t", action="append", type=float,
                            help="repeatable evolution time; default 1.0")
            sp.add_argument("--normalize", action="store_true")
        if name == "reduce":
            sp.add_argument("--form",
                            choices=(gridmod.PRODUCT_EXACT, gridmod.ANALYTIC_U),
                            default=gridmod.PRODUCT_EXACT)
        if name == "converge":
            sp.add_argument("--N", dest="ns", action="append", type=int,
                            help="repeatable grid size; ascending")
            sp.add_argument("--track-level", dest="track_level", type=int,
                            default=0,
                            help="which distinct |E| level to follow (0 = lowest)")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    params = {
        "m0": ns.m0,
        "c": ns.c,
        "hbar": ns.hbar,
        "lambda": ns.lam,
        "kx": ns.kx,
        "ky": ns.ky,
        "v0": ns.v0,
        "g": ns.g,
        "mode": ns.mode,
        "width": ns.width,
    }
    methods: tuple[str, ...] = ("spectral",)
    if getattr(ns, "method", None):
        if "all" in ns.method:
            methods = ("spectral", "paper") + (
                ("diagonal",) if ns.model == RASHBA else ()
            )
        else:
            methods = tuple(dict.fromkeys(ns.method))
    return RunConfig(
        command=ns.command,
        model=ns.model,
        params=params,
        tol=ns.tol if ns.tol is not None else default_tol(),
        fmt=ns.fmt,
        out=ns.out,
        grid_l=ns.grid_l,
        grid_n=ns.grid_n,
        bc=ns.bc,
        scheme=ns.scheme,
        potential=ns.potential,
        pot_file=ns.pot_file,
        form=getattr(ns, "form", gridmod.PRODUCT_EXACT),
        sweep_param=getattr(ns, "sweep_param", None),
        sweep_min=getattr(ns, "sweep_min", 0.0),
        sweep_max=getattr(ns, "sweep_max", 0.0),
        sweep_steps=getattr(ns, "sweep_steps", 0),
        methods=methods,
        normalize=getattr(ns, "normalize", False),
        times=tuple(ns.t) if getattr(ns, "t", None) else (1.0,),
        ns=tuple(ns.ns) if getattr(ns, "ns", None) else (),
        track_level=getattr(ns, "track_level", 0),
    )


def _error_json(exc: Exception) -> str:
    import json as _json

    return _json.dumps(
        {"error": {"type": type(exc).__name__, "message": str(exc)}}
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    cfg = config_from_args(ns)
    started = time.monotonic()
    try:
        record = run(cfg)
    except _REGIME_ERRORS as exc:
        print(_error_json(exc), file=sys.stderr)
        return EXIT_REGIME
    except _SOLVER_ERRORS as exc:
        print(_error_json(exc), file=sys.stderr)
        return EXIT_SOLVER
    except _USAGE_ERRORS as exc:
        print(_error_json(exc), file=sys.stderr)
        return EXIT_USAGE
    except PseudospecError as exc:
        print(_error_json(exc), file=sys.stderr)
        return EXIT_USAGE
    payload = emit(record, cfg.fmt)
    elapsed_ms = int(round(1000 * (time.monotonic() - started)))
    if cfg.out:
        with open(cfg.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    print(f"# runtime_ms={elapsed_ms}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
