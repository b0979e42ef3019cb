"""Choice of displacement minimizing the conditional error.

The error curve in ``beta`` is not convex in general, so a coarse grid scan
locates every local minimum and each one is polished with bounded Brent
(golden section + parabolic interpolation). The search is restricted to
``beta >= 0``.
"""
import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .bounds import intermediate_bound
from .quantum_core import DomainError, _check_count, overlap
from .receiver import Method, Rates, ReceiverParams, error_rate, inconclusive_rate

GRID_POINTS = 200
BETA_XTOL = 1e-9
MAX_ITER = 500
MAX_BRACKETS = 5
_TIE_TOL = 1e-15


class OptimizationError(RuntimeError):
    """Scalar minimization did not converge; ``best`` holds the best iterate found."""

    def __init__(self, message, best):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class OptResult:
    beta_opt: float
    rates: Rates
    matched_bound: float
    alphabet_alpha: float
    m: int

    @property
    def alpha_sq(self):
        return self.alphabet_alpha ** 2

    @property
    def gap(self):
        """Excess error over the ideal intermediate measurement at the same ``p_inc``."""
        return self.rates.p_error - self.matched_bound


def search_interval(alpha, m):
    """``[0, alpha + max(3, 5 m)]``; larger cutoffs push the optimum outward."""
    return 0.0, alpha + max(3.0, 5.0 * m)


def _objective(alpha, m):
    def f(beta):
        return float(error_rate(alpha, ReceiverParams(float(beta), m)))
    return f


def _local_minima(values, keep=MAX_BRACKETS):
    """Indices of grid local minima, lowest first; flat plateaus are skipped."""
    n = len(values)
    idx = []
    for i in range(n):
        left = values[i - 1] if i > 0 else np.inf
        right = values[i + 1] if i < n - 1 else np.inf
        if values[i] <= left and values[i] <= right and (values[i] < left or values[i] < right):
            idx.append(i)
    return sorted(idx, key=lambda i: values[i])[:keep]


@functools.lru_cache(maxsize=8192)
def _optimize(alpha, m):
    lo, hi = search_interval(alpha, m)
    grid = np.linspace(lo, hi, GRID_POINTS)
    values = error_rate(alpha, ReceiverParams(grid, m))
    f = _objective(alpha, m)

    candidates = [(float(values[i]), float(grid[i])) for i in range(GRID_POINTS)]
    for i in _local_minima(values):
        a = grid[max(i - 1, 0)]
        b = grid[min(i + 1, GRID_POINTS - 1)]
        res = minimize_scalar(f, bounds=(a, b), method="bounded",
                              options={"xatol": BETA_XTOL, "maxiter": MAX_ITER})
        if not res.success:
            best = min(candidates)
            raise OptimizationError(
                f"bounded minimization failed for alpha={alpha}, m={m}: {res.message}",
                best[1])
        candidates.append((float(res.fun), float(res.x)))

    f_min = min(c[0] for c in candidates)
    beta_opt = min(b for v, b in candidates if v <= f_min + _TIE_TOL)
    return beta_opt


def optimize_displacement(alpha, m):
    """Minimize the conditional error over ``beta >= 0`` at fixed ``(alpha, m)``.

    Returns an :class:`OptResult` that also carries the intermediate bound
    evaluated at the receiver's own inconclusive probability.
    """
    if not (math.isfinite(alpha) and alpha > 0):
        raise DomainError(f"alpha must be positive and finite, got {alpha!r}")
    _check_count("m", m)
    alpha = float(alpha)
    beta = _optimize(alpha, int(m))
    params = ReceiverParams(beta, int(m))
    p_err = float(error_rate(alpha, params))
    p_inc = float(inconclusive_rate(alpha, params))
    bound = float(intermediate_bound(p_inc, float(overlap(alpha))))
    return OptResult(beta, Rates(p_err, p_inc, Method.CLOSED_FORM), bound, alpha, int(m))


def pinc_at_optimum(alpha, m):
    """Inconclusive probability of the receiver at its optimal displacement."""
    return optimize_displacement(alpha, m).rates.p_inconclusive
