"""Scan-and-bisect principal eigenvalue solver.

The residual is scanned on a uniform grid over the admissible spectral
window, every sign-change subinterval is bracketed, and the leftmost bracket
is bisected to tolerance.  The accepted root must additionally carry a
positive eigenfunction (sampled on 1001 uniform points); if it does not, the
next bracket is tried and the rejection is logged.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace

import numpy as np

from .characteristic import char_f
from .model import Params, SolverConfig, check_placement, validate_params
from .propagator import eigenfunction_profile, shooting_residual

log = logging.getLogger(__name__)

_POSITIVITY_SAMPLES = 1001


class SolverError(RuntimeError):
    """Raised when no certified principal eigenvalue can be produced."""


@dataclass(frozen=True)
class SpectralWindow:
    lambda_min: float
    lambda_max: float


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    r_lo: float
    r_hi: float


@dataclass(frozen=True)
class EigenResult:
    lam: float
    bracket: Bracket
    iterations: int
    char_f_residual: float
    positive_ok: bool


def spectral_window(c: float, kappa: float) -> SpectralWindow:
    """Safe scan bounds inside (0, pi^2 / (4 c^2 kappa))."""
    cap = math.pi ** 2 / (4.0 * c * c * kappa)
    return SpectralWindow(max(1e-12, 1e-6 * cap), (1.0 - 1e-9) * cap)


def bracket_scan(residual, w: SpectralWindow, n_lambda: int) -> list[Bracket]:
    """All sign-change brackets of the residual on the uniform scan grid.

    Grid points where the residual is exactly zero yield degenerate
    width-0 brackets (kept, not perturbed, for determinism).  An empty list
    is a valid result; the caller refines.
    """
    step = (w.lambda_max - w.lambda_min) / n_lambda
    out: list[Bracket] = []
    prev_lam = w.lambda_min
    prev_r = residual(prev_lam)
    if prev_r == 0.0:
        out.append(Bracket(prev_lam, prev_lam, 0.0, 0.0))
    for j in range(1, n_lambda + 1):
        lam = w.lambda_min + j * step
        r = residual(lam)
        if r == 0.0:
            out.append(Bracket(lam, lam, 0.0, 0.0))
        elif prev_r * r < 0.0:
            out.append(Bracket(prev_lam, lam, prev_r, r))
        prev_lam, prev_r = lam, r
    return out


def bisect(residual, b: Bracket, tol: float) -> float:
    """Midpoint of the bisected bracket once its width is <= tol."""
    lam, _, _ = _bisect(residual, b, tol)
    return lam


def _bisect(residual, b: Bracket, tol: float) -> tuple[float, Bracket, int]:
    if b.lo == b.hi:
        return b.lo, b, 0
    if not (b.lo < b.hi and b.r_lo * b.r_hi < 0.0):
        raise ValueError(f"invalid bracket {b}")
    lo, hi, r_lo, r_hi = b.lo, b.hi, b.r_lo, b.r_hi
    iters = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution exhausted
        r_mid = residual(mid)
        if not math.isfinite(r_mid):
            raise SolverError(f"non-finite residual at lambda={mid}")
        iters += 1
        if r_mid == 0.0:
            lo = hi = mid
            r_lo = r_hi = 0.0
            break
        if r_lo * r_mid < 0.0:
            hi, r_hi = mid, r_mid
        else:
            lo, r_lo = mid, r_mid
    return 0.5 * (lo + hi), Bracket(lo, hi, r_lo, r_hi), iters


def eigenfunction_positive(a: float, p: Params, lam: float) -> bool:
    xs = np.linspace(0.0, 1.0, _POSITIVITY_SAMPLES)
    u, _ = eigenfunction_profile(a, p, lam, xs)
    return bool(np.all(u > 0.0))


def principal_eigenvalue(a: float, p: Params, cfg: SolverConfig) -> EigenResult:
    """Leftmost positive-eigenfunction root of the shooting residual.

    On an empty scan, the grid count is doubled up to ``max_refine`` times,
    then the lower window edge is dropped by a factor of 1000 once; if the
    scan is still empty the solver fails.
    """
    validate_params(p)
    check_placement(a, p.c)

    def residual(lam: float) -> float:
        return shooting_residual(a, p, lam)

    w = spectral_window(p.c, p.kappa)
    n = cfg.n_lambda
    brackets = bracket_scan(residual, w, n)
    refines = 0
    while not brackets and refines < cfg.max_refine:
        n *= 2
        refines += 1
        brackets = bracket_scan(residual, w, n)
    if not brackets:
        brackets = bracket_scan(residual, replace(w, lambda_min=w.lambda_min / 1e3), n)
    if not brackets:
        raise SolverError(
            f"no bracket found after {cfg.max_refine} refinements (a={a}, p={p})"
        )

    for b in brackets:
        lam, final, iters = _bisect(residual, b, cfg.tol)
        if eigenfunction_positive(a, p, lam):
            return EigenResult(lam, final, iters, abs(char_f(a, p, lam)), True)
        log.warning(
            "root %.12g rejected: eigenfunction not positive (a=%g, p=%s)", lam, a, p
        )
    raise SolverError(f"no positive eigenfunction among roots (a={a}, p={p})")


def a_grid(c: float, n_a: int) -> list[float]:
    return [(1.0 - c) * j / (n_a - 1) for j in range(n_a)]


def lambda_curve(p: Params, cfg: SolverConfig) -> list[tuple[float, float]]:
    """The map a -> principal eigenvalue on the uniform placement grid.

    Any point failure aborts the whole curve; sweep output never contains
    partial curves.
    """
    return [(a, principal_eigenvalue(a, p, cfg).lam) for a in a_grid(p.c, cfg.n_a)]


def _simpson(y: np.ndarray, dx: float) -> float:
    # composite Simpson; len(y) odd
    return dx / 3.0 * (y[0] + y[-1] + 4.0 * y[1:-1:2].sum() + 2.0 * y[2:-2:2].sum())


def rayleigh_check(a: float, p: Params, result: EigenResult,
                   n_per_piece: int = 10_000) -> float:
    """Relative defect of the Rayleigh quotient at the computed eigenpair.

    The quotient (integral of u'^2 plus the Robin boundary terms, over the
    weighted integral of u^2) is evaluated by composite Simpson quadrature
    per constant-weight piece on the reconstructed eigenfunction.
    """
    lam = result.lam
    num = 0.0
    den = 0.0
    b = a + p.c
    for x0, x1, m in ((0.0, a, -1.0), (a, b, p.kappa), (b, 1.0, -1.0)):
        if x1 <= x0:
            continue
        xs = np.linspace(x0, x1, n_per_piece + 1)
        u, du = eigenfunction_profile(a, p, lam, xs)
        dx = (x1 - x0) / n_per_piece
        num += _simpson(du * du, dx)
        den += m * _simpson(u * u, dx)
    u0, _ = eigenfunction_profile(a, p, lam, np.array([0.0, 1.0]))
    num += p.beta0 * u0[0] ** 2 + p.beta1 * u0[1] ** 2
    if den <= 0.0:
        raise SolverError("weighted mass of the eigenfunction is not positive")
    return abs(num / den - lam) / lam
