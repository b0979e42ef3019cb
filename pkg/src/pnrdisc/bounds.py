"""Reference limits for discriminating ``{|-alpha>, |alpha>}``.

* Helstrom: minimum error with every result conclusive.
* IDP: minimum inconclusive probability for error-free discrimination.
* Intermediate (Chefles) bound: minimum error at a fixed inconclusive
  probability. Only the equal-prior form is provided.
"""
import math
from dataclasses import dataclass

import numpy as np

from .quantum_core import DomainError, _check_finite, overlap

_PRIOR_TOL = 1e-12


@dataclass(frozen=True)
class Alphabet:
    """Binary coherent-state source: ``|-alpha>`` with prior ``p1``, ``|alpha>`` with ``p2``."""

    alpha: float
    p1: float = 0.5
    p2: float = 0.5

    def __post_init__(self):
        _check_finite("alpha", self.alpha)
        for name in ("p1", "p2"):
            p = getattr(self, name)
            if not (math.isfinite(p) and 0.0 <= p <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1], got {p!r}")
        if abs(self.p1 + self.p2 - 1.0) > _PRIOR_TOL:
            raise DomainError(f"priors must sum to 1, got {self.p1} + {self.p2}")

    @classmethod
    def from_mean_photon_number(cls, alpha_sq, p1=0.5):
        if not (math.isfinite(alpha_sq) and alpha_sq >= 0):
            raise DomainError(f"alpha_sq must be >= 0, got {alpha_sq!r}")
        return cls(math.sqrt(alpha_sq), p1, 1.0 - p1)

    @property
    def sigma(self):
        return float(overlap(self.alpha))


def helstrom(a):
    """Helstrom minimum error ``(1 - sqrt(1 - 4 p1 p2 sigma^2)) / 2``."""
    s = a.sigma
    radicand = max(1.0 - 4.0 * a.p1 * a.p2 * s * s, 0.0)
    return 0.5 * (1.0 - math.sqrt(radicand))


def idp_inconclusive(a):
    """IDP inconclusive probability, the overlap ``sigma``."""
    return a.sigma


def intermediate_bound(p_inc, sigma):
    """Minimum error at inconclusive probability ``p_inc`` (equal priors).

    Returns 0 for ``p_inc >= sigma``, where unambiguous discrimination is
    possible. Vectorizes over ``p_inc``.
    """
    p = np.asarray(p_inc, dtype=float)
    _check_finite("p_inc", p)
    _check_finite("sigma", sigma)
    if np.any(p < 0) or np.any(p >= 1):
        raise DomainError(f"p_inc must lie in [0, 1), got {p_inc!r}")
    if not 0.0 <= sigma <= 1.0:
        raise DomainError(f"sigma must lie in [0, 1], got {sigma!r}")
    radicand = 1.0 - 2.0 * p * (1.0 - sigma) - sigma * sigma
    root = np.sqrt(np.maximum(radicand, 0.0))
    value = (1.0 - p - root) / (2.0 * (1.0 - p))
    value = np.where(p >= sigma, 0.0, np.maximum(value, 0.0))
    return value[()]
