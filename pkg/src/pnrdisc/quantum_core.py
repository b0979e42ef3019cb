"""Numerical primitives for binary coherent-state discrimination.

Amplitudes are real throughout. Photon statistics of a displaced coherent
state are Poissonian, so everything downstream reduces to Poisson pmf/cdf
evaluations at the two displaced means ``(beta - alpha)**2`` and
``(beta + alpha)**2``.

All functions accept scalars or numpy arrays for the mean ``mu``.
"""
import math

import numpy as np


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a function."""


def _check_finite(name, value):
    if isinstance(value, float):
        if not math.isfinite(value):
            raise DomainError(f"{name} must be finite, got {value!r}")
        return
    if not np.all(np.isfinite(value)):
        raise DomainError(f"{name} must be finite, got {value!r}")


def _check_count(name, n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    if n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")


def _check_mean(mu):
    _check_finite("mu", mu)
    if isinstance(mu, float):
        if mu < 0:
            raise DomainError(f"mean photon number must be >= 0, got {mu!r}")
        return
    if np.any(np.asarray(mu) < 0):
        raise DomainError(f"mean photon number must be >= 0, got {mu!r}")


def overlap(alpha):
    """Overlap magnitude ``|<-alpha|alpha>| = exp(-2 alpha^2)``."""
    _check_finite("alpha", alpha)
    return np.exp(-2.0 * np.square(alpha))


def displaced_mean(state_sign, alpha, beta):
    """Mean photon number of ``|sign*alpha>`` after the displacement ``D(beta)``.

    ``state_sign=-1`` is the hypothesis nulled by the Kennedy choice
    ``beta = alpha``.
    """
    if state_sign not in (-1, 1):
        raise DomainError(f"state_sign must be +1 or -1, got {state_sign!r}")
    _check_finite("alpha", alpha)
    _check_finite("beta", beta)
    return np.square(beta + state_sign * alpha)


def poisson_pmf(n, mu):
    """``mu**n exp(-mu) / n!``, with ``pmf(0, 0) == 1``."""
    _check_count("n", n)
    _check_mean(mu)
    # iterative product keeps mu == 0 exact (0**0 handled by the empty product)
    term = np.exp(-np.asarray(mu, dtype=float))
    for k in range(n):
        term = term * mu / (k + 1)
    return term[()] if isinstance(term, np.ndarray) else term


def poisson_cdf(m, mu):
    """``P(N <= m)`` for ``N ~ Poisson(mu)``.

    Equal to the regularized upper incomplete gamma ratio
    ``Gamma(m + 1, mu) / Gamma(m + 1)``; for integer ``m`` this is the finite
    sum of the first ``m + 1`` pmf terms, which is what is computed here.
    """
    _check_count("m", m)
    _check_mean(mu)
    term = np.exp(-np.asarray(mu, dtype=float))
    total = term
    for k in range(m):
        term = term * mu / (k + 1)
        total = total + term
    # rounding can push the sum a hair above 1 for tiny mu
    total = np.minimum(total, 1.0)
    return total[()] if isinstance(total, np.ndarray) else total


def poisson_window(lo, hi, mu):
    """``P(lo <= N <= hi)``, summed term by term. Empty window gives 0."""
    _check_count("lo", lo)
    _check_count("hi", hi)
    _check_mean(mu)
    mu = np.asarray(mu, dtype=float)
    term = np.exp(-mu)
    total = np.zeros_like(mu)
    for k in range(hi + 1):
        if k > 0:
            term = term * mu / k
        if k >= lo:
            total = total + term
    return total[()]


def poisson_tail_cutoff(mu, min_terms=1, tol=1e-15):
    """Smallest ``N`` (at least ``min_terms - 1``) with ``P(N' > N) <= tol``.

    Uses the geometric tail bound: for ``k + 1 > mu``,
    ``sum_{j > k} pmf(j) <= pmf(k + 1) / (1 - mu / (k + 2))``.
    """
    _check_mean(mu)
    mu = float(mu)
    term = math.exp(-mu)
    k = 0
    while True:
        nxt = term * mu / (k + 1)
        if k + 1 >= min_terms and k + 2 > mu:
            ratio = mu / (k + 2)
            if ratio < 1.0 and nxt / (1.0 - ratio) <= tol:
                return k
        term = nxt
        k += 1
