"""Monte Carlo simulation of the receiver, independent of the closed forms.

Each trial draws the true state from the priors, displaces it, draws a
Poissonian photon count by CDF inversion and classifies it with
:func:`pnrdisc.receiver.classify`.

Random numbers come from numpy's PCG64. Trials are cut into fixed-size
chunks; chunk ``i`` is seeded from ``SeedSequence([seed, i])``. The tally
therefore depends only on ``(alphabet, params, n_trials, seed)`` and not on
how many workers ran the chunks.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .bounds import Alphabet
from .quantum_core import DomainError, _check_mean, displaced_mean, poisson_tail_cutoff
from .receiver import Method, Outcome, Rates, classify

CHUNK_SIZE = 1 << 18
STATES = ("minus", "plus")
OUTCOMES = (Outcome.IDENTIFY_MINUS, Outcome.INCONCLUSIVE, Outcome.IDENTIFY_PLUS)


def sample_poisson(mu, rng):
    """One Poisson draw by sequential-search inversion."""
    _check_mean(mu)
    u = rng.random()
    k = 0
    p = math.exp(-mu)
    cdf = p
    while u >= cdf:
        k += 1
        p *= mu / k
        if p == 0.0:
            # u landed in the float rounding gap above the summed cdf
            break
        cdf += p
    return k


def _inverse_cdf_table(mu):
    cutoff = poisson_tail_cutoff(mu, tol=1e-17)
    pmf = np.empty(cutoff + 1)
    pmf[0] = math.exp(-mu)
    for k in range(1, cutoff + 1):
        pmf[k] = pmf[k - 1] * mu / k
    return np.cumsum(pmf)


def sample_poisson_many(mu, u):
    """Vectorized inversion: counts for an array of uniforms ``u``."""
    _check_mean(mu)
    cdf = _inverse_cdf_table(float(mu))
    return np.searchsorted(cdf, u, side="right")


@dataclass(frozen=True)
class TrialTally:
    """Counts of (true state, outcome); rows are ``STATES``, columns ``OUTCOMES``."""

    n_trials: int
    counts: np.ndarray
    seed: int
    empirical_rates: Rates
    stderr_error: float
    stderr_inc: float

    @property
    def n_conclusive(self):
        return int(self.counts[:, 0].sum() + self.counts[:, 2].sum())

    @property
    def n_errors(self):
        # minus identified as plus, plus identified as minus
        return int(self.counts[0, 2] + self.counts[1, 0])

    @property
    def error_defined(self):
        return self.n_conclusive > 0

    def as_rows(self):
        """Flat ``(state, outcome, count)`` triples."""
        return [(s, o.value, int(self.counts[i, j]))
                for i, s in enumerate(STATES) for j, o in enumerate(OUTCOMES)]


def _classify_counts(n, params):
    """Column index into ``OUTCOMES`` for every count, via :func:`classify`."""
    values, inverse = np.unique(n, return_inverse=True)
    column = np.array([OUTCOMES.index(classify(int(v), params)) for v in values], dtype=np.intp)
    return column[inverse]


def _run_chunk(alphabet, params, size, seed, index):
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, index])))
    is_plus = rng.random(size) >= alphabet.p1
    u = rng.random(size)
    table = np.zeros((2, 3), dtype=np.int64)
    for row, sign in ((0, -1), (1, +1)):
        mask = is_plus if sign > 0 else ~is_plus
        mu = displaced_mean(sign, alphabet.alpha, params.beta)
        n = sample_poisson_many(mu, u[mask])
        table[row] = np.bincount(_classify_counts(n, params), minlength=3)
    return table


def simulate(alphabet, params, n_trials, seed, workers=1):
    """Simulate ``n_trials`` receptions and tally outcomes.

    Empirical error is wrong conclusive guesses over conclusive trials; it is
    NaN (``error_defined`` is False) when no trial was conclusive.
    """
    if not isinstance(alphabet, Alphabet):
        raise TypeError("alphabet must be an Alphabet")
    if isinstance(n_trials, bool) or not isinstance(n_trials, (int, np.integer)) or n_trials < 1:
        raise DomainError(f"n_trials must be a positive integer, got {n_trials!r}")
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)) or not 0 <= seed < 2**64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed!r}")

    sizes = [CHUNK_SIZE] * (n_trials // CHUNK_SIZE)
    if n_trials % CHUNK_SIZE:
        sizes.append(n_trials % CHUNK_SIZE)
    jobs = [(alphabet, params, size, int(seed), i) for i, size in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tables = list(pool.map(lambda job: _run_chunk(*job), jobs))
    else:
        tables = [_run_chunk(*job) for job in jobs]
    counts = np.sum(tables, axis=0)

    n_inc = int(counts[:, 1].sum())
    n_conc = n_trials - n_inc
    n_err = int(counts[0, 2] + counts[1, 0])
    p_inc = n_inc / n_trials
    se_inc = math.sqrt(p_inc * (1 - p_inc) / n_trials)
    if n_conc > 0:
        p_err = n_err / n_conc
        se_err = math.sqrt(p_err * (1 - p_err) / n_conc)
    else:
        p_err = se_err = math.nan
    return TrialTally(n_trials, counts, int(seed), Rates(p_err, p_inc, Method.MONTE_CARLO),
                      se_err, se_inc)
