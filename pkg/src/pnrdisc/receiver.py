"""Displacement + photon-number-resolving receiver.

The signal ``|+-alpha>`` is displaced by ``beta`` and photons are counted.
A count of zero identifies ``|-alpha>``, counts ``1..m`` are dropped as
inconclusive and anything larger identifies ``|alpha>``.

Two evaluation paths are provided. :func:`error_rate` and
:func:`inconclusive_rate` are the closed forms for equal priors;
:func:`rates_direct` sums the Poisson distributions explicitly and accepts
arbitrary priors.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .bounds import Alphabet
from .quantum_core import (
    DomainError,
    _check_count,
    _check_finite,
    displaced_mean,
    poisson_cdf,
    poisson_pmf,
    poisson_tail_cutoff,
    poisson_window,
)

_DEGENERATE = 1e-15


class NoConclusiveResults(ArithmeticError):
    """The inconclusive probability is 1, so the conditional error is undefined."""


class Outcome(enum.Enum):
    IDENTIFY_MINUS = "identify_minus"
    IDENTIFY_PLUS = "identify_plus"
    INCONCLUSIVE = "inconclusive"


class Method(enum.Enum):
    CLOSED_FORM = "closed_form"
    DIRECT_SUM = "direct_sum"
    MONTE_CARLO = "monte_carlo"


@dataclass(frozen=True)
class ReceiverParams:
    """Displacement ``beta`` and postselection cutoff ``m`` (``m = 0``: nothing dropped)."""

    beta: float
    m: int = 0

    def __post_init__(self):
        _check_finite("beta", self.beta)
        _check_count("m", self.m)


@dataclass(frozen=True)
class Rates:
    p_error: float
    p_inconclusive: float
    method: Method


def classify(n, params):
    """Decision rule for a photon count ``n``."""
    _check_count("n", n)
    if n == 0:
        return Outcome.IDENTIFY_MINUS
    if n <= params.m:
        return Outcome.INCONCLUSIVE
    return Outcome.IDENTIFY_PLUS


def _means(alpha, beta):
    return displaced_mean(-1, alpha, beta), displaced_mean(+1, alpha, beta)


def inconclusive_rate(alpha, params):
    """Probability of an inconclusive result, equal priors."""
    _check_finite("alpha", alpha)
    mu_minus, mu_plus = _means(alpha, params.beta)
    if params.m == 0:
        return 0.0 * mu_minus
    # P(1 <= n <= m) = cdf(m) - pmf(0)
    drop_minus = poisson_cdf(params.m, mu_minus) - np.exp(-mu_minus)
    drop_plus = poisson_cdf(params.m, mu_plus) - np.exp(-mu_plus)
    return 0.5 * (np.maximum(drop_minus, 0.0) + np.maximum(drop_plus, 0.0))


def error_numerator(alpha, params):
    """Joint probability of a wrong conclusive guess, equal priors."""
    _check_finite("alpha", alpha)
    mu_minus, mu_plus = _means(alpha, params.beta)
    return 0.5 * (1.0 - poisson_cdf(params.m, mu_minus) + np.exp(-mu_plus))


def error_rate(alpha, params):
    """Error probability conditioned on a conclusive result, equal priors.

    Raises :class:`NoConclusiveResults` if ``1 - p_inc < 1e-15``.
    Vectorizes over ``alpha`` and ``params.beta`` when given arrays.
    """
    conclusive = 1.0 - inconclusive_rate(alpha, params)
    if np.any(conclusive < _DEGENERATE):
        raise NoConclusiveResults(
            f"no conclusive results at alpha={alpha!r}, beta={params.beta!r}, m={params.m}")
    return error_numerator(alpha, params) / conclusive


def rates(alpha, params):
    """Closed-form :class:`Rates` for equal priors."""
    return Rates(float(error_rate(alpha, params)),
                 float(inconclusive_rate(alpha, params)),
                 Method.CLOSED_FORM)


def outcome_probabilities(mu, m):
    """``(P(minus), P(inconclusive), P(plus))`` for a count with mean ``mu``.

    Each is an explicit pmf sum; the ``plus`` sum runs past ``m`` until the
    remaining tail is provably below 1e-15.
    """
    cutoff = poisson_tail_cutoff(mu, min_terms=m + 1)
    p_minus = float(poisson_pmf(0, mu))
    p_inc = float(poisson_window(1, m, mu)) if m > 0 else 0.0
    p_plus = float(poisson_window(m + 1, cutoff, mu)) if cutoff > m else 0.0
    return p_minus, p_inc, p_plus


def rates_direct(alpha, params, p1=0.5, p2=None):
    """Rates by explicit summation over photon counts, for arbitrary priors."""
    if p2 is None:
        p2 = 1.0 - p1
    a = Alphabet(alpha, p1, p2)
    mu_minus, mu_plus = _means(a.alpha, params.beta)
    minus_ok, minus_inc, minus_wrong = outcome_probabilities(float(mu_minus), params.m)
    plus_wrong, plus_inc, plus_ok = outcome_probabilities(float(mu_plus), params.m)
    p_inc = a.p1 * minus_inc + a.p2 * plus_inc
    conclusive = 1.0 - p_inc
    if conclusive < _DEGENERATE:
        raise NoConclusiveResults(
            f"no conclusive results at alpha={alpha!r}, beta={params.beta!r}, m={params.m}")
    p_err = (a.p1 * minus_wrong + a.p2 * plus_wrong) / conclusive
    return Rates(min(max(p_err, 0.0), 1.0), p_inc, Method.DIRECT_SUM)


def kennedy_error(alpha):
    """Error of the Kennedy receiver (``beta = alpha``, ``m = 0``): ``exp(-4 alpha^2) / 2``."""
    return 0.5 * math.exp(-4.0 * alpha * alpha)
