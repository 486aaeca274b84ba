"""Closed-form characteristic and auxiliary functions.

``char_f`` is the four-term determinant form whose smallest positive zero in
the admissible window is the principal eigenvalue; it serves as an oracle
independent of the transfer-matrix shooting residual.  The remaining
functions support the classification theory: the sign function ``char_g``
driving the a-derivative of the eigenvalue, the linear-in-beta0 coefficients
behind ``beta0_star``, the amplitude bound ``h``, the admissibility threshold
``c_star`` and the uniform bound ``beta0_star_bound``, plus the classical
Neumann/Dirichlet limit characteristic equations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import Params

LIMIT_KINDS = ("neumann", "dirichlet", "lou_neumann", "lou_dirichlet")


class PoleError(ArithmeticError):
    """Evaluation requested at (or numerically on top of) a pole of a
    tan/tanh rational form; the sign change there is not a root."""


class DegenerateConfigError(ArithmeticError):
    """The linear coefficient A(a) is numerically zero, which the theory
    excludes; signals a constraint violation upstream."""


def char_f(a: float, p: Params, lam: float) -> float:
    """Characteristic function; zero iff lam is an eigenvalue for placement a."""
    sq = math.sqrt(lam)
    k = p.kappa
    b0, b1 = p.beta0, p.beta1
    sn = math.sin(sq * math.sqrt(k) * p.c)
    cs = math.cos(sq * math.sqrt(k) * p.c)
    y = sq * (2.0 * a + p.c - 1.0)
    z = sq * (1.0 - p.c)
    return (
        (k + 1.0) * (lam - b0 * b1) * math.cosh(y) * sn
        + (k + 1.0) * (b0 - b1) * sq * math.sinh(y) * sn
        + math.cosh(z) * ((k - 1.0) * (lam + b0 * b1) * sn
                          - 2.0 * sq * math.sqrt(k) * (b0 + b1) * cs)
        + math.sinh(z) * ((k - 1.0) * (b0 + b1) * sq * sn
                          - 2.0 * math.sqrt(k) * (b0 * b1 + lam) * cs)
    )


def char_g(a: float, beta0: float, beta1: float, lam: float, c: float) -> float:
    """Sign surrogate for the a-derivative of char_f on the admissible window."""
    sq = math.sqrt(lam)
    return (lam - beta0 * beta1) * math.tanh(2.0 * sq * (a - (1.0 - c) / 2.0)) \
        + sq * (beta0 - beta1)


def _linear_coeffs(a: float, c: float, kappa: float, lam: float) -> tuple[float, float]:
    """Coefficients (A, B) of the beta1-derivative of char_f, linear in beta0."""
    sq = math.sqrt(lam)
    sn = math.sin(c * math.sqrt(kappa * lam))
    cs = math.cos(c * math.sqrt(kappa * lam))
    z = sq * (1.0 - c)
    y = sq * (2.0 * a + c - 1.0)
    A = (-2.0 * math.sqrt(kappa) * cs * math.sinh(z)
         + (kappa - 1.0) * sn * math.cosh(z)
         - (kappa + 1.0) * sn * math.cosh(y))
    B = (-2.0 * math.sqrt(lam * kappa) * cs * math.cosh(z)
         + (kappa - 1.0) * sq * sn * math.sinh(z)
         - (kappa + 1.0) * sq * sn * math.sinh(y))
    return A, B


def beta0_star(a: float, p: Params, lam: float) -> float:
    """Unique zero in beta0 of the beta1-derivative of char_f, i.e. -B(a)/A(a)."""
    A, B = _linear_coeffs(a, p.c, p.kappa, lam)
    if abs(A) < 1e-12:
        raise DegenerateConfigError(f"A(a) ~ 0 at a={a}, lam={lam}")
    return -B / A


def h_bound(c: float, kappa: float, lam: float) -> float:
    """Threshold compared against cosh(sqrt(lam)(2a+c-1)) to decide the sign
    of A(a); below 1 on the whole window under the c-constraint."""
    sq = math.sqrt(lam)
    sn = math.sin(c * math.sqrt(kappa * lam))
    cs = math.cos(c * math.sqrt(kappa * lam))
    z = sq * (1.0 - c)
    return ((kappa - 1.0) * sn * math.cosh(z) - 2.0 * math.sqrt(kappa) * cs * math.sinh(z)) \
        / ((kappa + 1.0) * sn)


def c_star(kappa: float) -> float:
    """Least admissible interval fraction for kappa > 1."""
    if kappa <= 1.0:
        raise ValueError("c_star is defined for kappa > 1 only")
    rk = math.sqrt(kappa)
    return 1.0 / (1.0 + (2.0 * rk / math.pi) * math.log((rk + 1.0) / (rk - 1.0)))


def beta0_star_bound(c: float, kappa: float) -> float:
    """Uniform (a- and lambda-independent) upper bound on beta0_star.

    Raises ValueError when the denominator is not positive, i.e. outside the
    certified c-range.
    """
    t = math.pi * (1.0 - c) / (2.0 * c * math.sqrt(kappa))
    den = kappa + 1.0 - (kappa - 1.0) * math.cosh(t)
    if den <= 0.0:
        raise ValueError("bound not applicable: denominator non-positive")
    return (math.sqrt(kappa) * math.pi / c) * math.sinh(t) / den


@dataclass(frozen=True)
class HypothesisReport:
    """Computable status of the classification theorem's hypotheses.

    ``c_star``/``beta0_star_bound`` are None when not applicable (kappa <= 1,
    respectively c outside the certified range).
    """

    c_star: float | None
    beta0_star_bound: float | None
    c_ok: bool
    beta0_ok: bool
    h_max: float

    def lines(self) -> list[str]:
        def fmt(v):
            return "not applicable" if v is None else f"{v:.6g}"
        return [
            f"c_star: {fmt(self.c_star)}",
            f"beta0_star_bound: {fmt(self.beta0_star_bound)}",
            f"c_ok: {str(self.c_ok).lower()}",
            f"beta0_ok: {str(self.beta0_ok).lower()}",
            f"h_max: {self.h_max:.6g}",
        ]


def hypothesis_bounds(p: Params, lambda_window: tuple[float, float]) -> HypothesisReport:
    """Evaluate the theorem's hypothesis quantities for one instance.

    h_max is sampled on 256 uniform lambda points of the window (h is smooth;
    the fixed resolution keeps reports reproducible).
    """
    lo, hi = lambda_window
    if p.kappa > 1.0:
        cs = c_star(p.kappa)
        c_ok = p.c > cs
    else:
        cs = None
        c_ok = True
    bound: float | None
    try:
        bound = beta0_star_bound(p.c, p.kappa)
    except ValueError:
        bound = None
    if not c_ok:
        bound = None
    beta0_ok = bound is not None and p.beta0 > bound
    n = 256
    h_max = max(
        h_bound(p.c, p.kappa, lo + (hi - lo) * j / (n - 1)) for j in range(n)
    )
    return HypothesisReport(cs, bound, c_ok, beta0_ok, h_max)


def limit_char_residual(kind: str, a: float, c: float, kappa: float, lam: float) -> float:
    """LHS - RHS of the selected limit characteristic equation.

    Kinds: ``neumann`` and ``dirichlet`` are the beta -> 0 / beta -> inf
    equations at general placement; ``lou_neumann`` and ``lou_dirichlet`` are
    their a=0 reductions.  Raises PoleError when the rational form is
    evaluated too close to a denominator zero.
    """
    if kind not in LIMIT_KINDS:
        raise ValueError(f"unknown limit kind {kind!r}")
    if kind.startswith("lou_") and a != 0.0:
        raise ValueError(f"{kind} requires a = 0")
    sq = math.sqrt(lam)
    rk = math.sqrt(kappa)
    if abs(math.cos(sq * rk * c)) < 1e-12:
        raise PoleError(f"tan pole at lam={lam}")
    t = math.tan(sq * rk * c)
    b = a + c
    if kind == "lou_neumann":
        return rk * t - math.tanh(sq * (1.0 - c))
    if kind == "lou_dirichlet":
        return t + rk * math.tanh(sq * (1.0 - c))
    ta = math.tanh(sq * a)
    lhs = math.tanh(sq * (1.0 - b))
    if kind == "neumann":
        num = rk * t - ta
        den = 1.0 + ta * t / rk
    else:  # dirichlet
        num = t / rk + ta
        den = rk * ta * t - 1.0
    if abs(den) < 1e-10 * max(1.0, abs(num)):
        raise PoleError(f"{kind} residual at a pole: lam={lam}")
    return lhs - num / den


def _limit_cleared(kind: str, a: float, c: float, kappa: float, lam: float) -> float:
    """Denominator-cleared form of the limit equations.

    Continuous in lambda (no tan/tanh poles) and sharing the roots of
    limit_char_residual, so the scan+bisection machinery can be applied
    without pole bookkeeping.
    """
    sq = math.sqrt(lam)
    rk = math.sqrt(kappa)
    theta = sq * rk * c
    sn, cs = math.sin(theta), math.cos(theta)
    if kind == "lou_neumann":
        return rk * sn - math.tanh(sq * (1.0 - c)) * cs
    if kind == "lou_dirichlet":
        return sn + rk * math.tanh(sq * (1.0 - c)) * cs
    ta = math.tanh(sq * a)
    lhs = math.tanh(sq * (1.0 - a - c))
    if kind == "neumann":
        return lhs * (cs + ta * sn / rk) - (rk * sn - ta * cs)
    return lhs * (rk * ta * sn - cs) - (sn / rk + ta * cs)


def limit_root(
    kind: str,
    a: float,
    c: float,
    kappa: float,
    n_lambda: int = 2000,
    tol: float = 1e-12,
) -> float:
    """Smallest positive root of the selected limit equation.

    Scans the admissible window (extended past the quarter-period bound for
    the Dirichlet kinds, whose first root lies beyond it) using the
    denominator-cleared residual, then bisects the leftmost bracket.
    """
    from .eigensolver import SpectralWindow, bisect, bracket_scan, spectral_window

    if kind not in LIMIT_KINDS:
        raise ValueError(f"unknown limit kind {kind!r}")
    if kind.startswith("lou_") and a != 0.0:
        raise ValueError(f"{kind} requires a = 0")
    w = spectral_window(c, kappa)
    if "dirichlet" in kind:
        # allow the trig piece a half period instead of a quarter
        w = SpectralWindow(w.lambda_min, (1.0 - 1e-9) * math.pi ** 2 / (c * c * kappa))

    def residual(lam: float) -> float:
        return _limit_cleared(kind, a, c, kappa, lam)

    brackets = bracket_scan(residual, w, n_lambda)
    if not brackets:
        raise ValueError(f"no root of {kind} limit equation found in the window")
    return bisect(residual, brackets[0], tol)
