"""Scalar special functions and numeric utilities.

Lambert W on both real branches, adaptive quadrature over finite and
semi-infinite ranges, and bracketed root finding.  Everything here is a
pure function of its arguments.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy import integrate as _integrate
from scipy import optimize as _optimize

__all__ = [
    "BRANCH_POINT",
    "IntegrationError",
    "RootFindingError",
    "find_root",
    "integrate",
    "lambert_w0",
    "lambert_wm1",
    "lambert_wm1_log",
]

#: The common branch point -1/e of W0 and W-1.
BRANCH_POINT = -math.exp(-1.0)

_EPS = np.finfo(float).eps
_MAX_HALLEY = 64

# Coefficients of W0 in powers of p = sqrt(2(ez + 1)); W-1 uses -p.
_BRANCH_SERIES = (
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680863.0 / 43545600.0,
)
# Below this p the truncated series error (~p**8) is far under 1e-16.
_SERIES_CUTOFF = 1e-2


class IntegrationError(ArithmeticError):
    """Quadrature did not reach the requested tolerance.

    The best available estimate and its error bound are kept on the
    exception so a caller can decide whether they are good enough.
    """

    def __init__(self, message: str, estimate: float, error: float):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error


class RootFindingError(ValueError):
    """The bracket handed to :func:`find_root` does not contain a sign change."""


def _branch_series(p: float) -> float:
    w = 0.0
    for c in reversed(_BRANCH_SERIES):
        w = w * p + c
    return w


def _branch_p(z: float) -> float:
    # e*z + 1 can round slightly negative for z == BRANCH_POINT.
    return math.sqrt(max(0.0, 2.0 * (math.e * z + 1.0)))


def _halley(z: float, w: float) -> float:
    for _ in range(_MAX_HALLEY):
        ew = math.exp(w)
        f = w * ew - z
        wp1 = w + 1.0
        if wp1 == 0.0 or f == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) <= 4.0 * _EPS * abs(w):
            break
    return w


def lambert_w0(z: float) -> float:
    """Principal branch W0 of the Lambert W function for real ``z >= -1/e``.

    Returns ``w >= -1`` with ``w * exp(w) == z``.
    """
    z = float(z)
    if not math.isfinite(z) or z < BRANCH_POINT:
        raise ValueError(f"lambert_w0 requires -1/e <= z < inf, got {z!r}")
    if z == 0.0:
        return 0.0
    p = _branch_p(z)
    if p < _SERIES_CUTOFF:
        return _branch_series(p)
    if z < -0.25:
        w = _branch_series(p)
    elif z < 3.0:
        w = math.log1p(z)
    else:
        l1 = math.log(z)
        l2 = math.log(l1)
        w = l1 - l2 + l2 / l1
    return _halley(z, w)


def lambert_wm1(z: float) -> float:
    """Lower real branch W-1 of the Lambert W function on ``[-1/e, 0)``.

    Returns ``w <= -1`` with ``w * exp(w) == z``.  Halley iteration from
    ``log(-z) - log(-log(-z))``, switching to the branch-point series in
    ``p = sqrt(2(ez + 1))`` when ``z`` is close to ``-1/e``.
    """
    z = float(z)
    if not math.isfinite(z) or z < BRANCH_POINT or z >= 0.0:
        raise ValueError(f"lambert_wm1 requires -1/e <= z < 0, got {z!r}")
    if z > -1e-300:
        return lambert_wm1_log(math.log(-z))
    p = _branch_p(z)
    if p < _SERIES_CUTOFF:
        return _branch_series(-p)
    if z < -0.25:
        w = _branch_series(-p)
    else:
        l1 = math.log(-z)
        w = l1 - math.log(-l1)
    return min(_halley(z, w), -1.0)


def lambert_wm1_log(s: float) -> float:
    """``W-1(-exp(s))`` for ``s <= -1``, without forming ``exp(s)``.

    Solves ``w + log(-w) = s`` by Newton's method; usable far past the
    point where ``exp(s)`` underflows.
    """
    s = float(s)
    if not s <= -1.0:
        raise ValueError(f"lambert_wm1_log requires s <= -1, got {s!r}")
    if s > -30.0:
        return lambert_wm1(-math.exp(s))
    w = s - math.log(-s)
    for _ in range(_MAX_HALLEY):
        dw = (w + math.log(-w) - s) / (1.0 + 1.0 / w)
        w -= dw
        if abs(dw) <= 4.0 * _EPS * abs(w):
            break
    return w


def integrate(
    f: Callable[[float], float],
    a: float,
    b: float = math.inf,
    rel_tol: float = 1e-10,
    abs_tol: float = 0.0,
    scale: float = 1.0,
    limit: int = 500,
) -> float:
    """Adaptive Gauss-Kronrod quadrature of ``f`` over ``[a, b]``.

    A semi-infinite range ``[a, inf)`` is mapped onto ``[0, 1)`` with
    ``x = a + scale * t / (1 - t)``; ``scale`` should be of the order of
    the integrand's decay length (``1/theta`` for the lifetime densities
    here) so that the mass is not squeezed against ``t = 1``.

    Raises
    ------
    IntegrationError
        If the subdivision budget ``limit`` is exhausted before the error
        estimate drops under ``max(abs_tol, rel_tol * |result|)``.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    if not math.isfinite(a):
        raise ValueError("lower limit must be finite")
    if b == math.inf:
        def g(t: float) -> float:
            u = 1.0 - t
            return f(a + scale * t / u) * scale / (u * u)

        lo, hi = 0.0, 1.0
    else:
        g, lo, hi = f, a, b
    out = _integrate.quad(
        g, lo, hi, epsabs=abs_tol, epsrel=rel_tol, limit=limit, full_output=1
    )
    value, err = float(out[0]), float(out[1])
    if len(out) == 4 and err > max(abs_tol, rel_tol * abs(value)):
        raise IntegrationError(str(out[3]).splitlines()[0], value, err)
    return value


def find_root(
    g: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12
) -> float:
    """Root of ``g`` in ``[lo, hi]`` by Brent's method.

    Inverse quadratic interpolation with a bisection fallback, so it cannot
    leave the bracket.  ``g(lo)`` and ``g(hi)`` must differ in sign (or one
    of them be zero).
    """
    glo, ghi = g(lo), g(hi)
    if glo == 0.0:
        return float(lo)
    if ghi == 0.0:
        return float(hi)
    if np.sign(glo) == np.sign(ghi):
        raise RootFindingError(
            f"no sign change on [{lo}, {hi}]: g(lo)={glo!r}, g(hi)={ghi!r}"
        )
    return float(
        _optimize.brentq(g, lo, hi, xtol=tol, rtol=4 * _EPS, maxiter=500)
    )
