"""Tabulated sweeps behind the receiver figures.

A sweep returns a list of rows; each row is a ``dict`` whose key order is the
column order. Column names are stable and suffixed with ``_m{m}`` for
per-cutoff quantities.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .bounds import Alphabet, helstrom, intermediate_bound
from .optimizer import optimize_displacement
from .quantum_core import overlap
from .receiver import ReceiverParams, error_rate, inconclusive_rate


class SweepSpecError(ValueError):
    pass


class SweepKind(enum.Enum):
    ERROR_VS_BETA = "error_vs_beta"
    ACCEPTANCE_VS_BETA = "acceptance_vs_beta"
    BETA_OPT_VS_ALPHA = "beta_opt_vs_alpha"
    ERROR_VS_ALPHA = "error_vs_alpha"
    ACCEPTANCE_VS_ALPHA = "acceptance_vs_alpha"
    PARAMETRIC = "parametric"


_BETA_KINDS = (SweepKind.ERROR_VS_BETA, SweepKind.ACCEPTANCE_VS_BETA)
DOT_SPACING = 0.1


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep.

    ``alpha_sq_range`` and ``beta_range`` are ``(start, stop, step)`` with
    ``stop`` included when it lies on the grid. Setting ``alpha_sq_log_points``
    replaces the linear ``alpha_sq`` grid by that many log-spaced points
    between ``start`` and ``stop`` (``step`` is then ignored).
    """

    kind: SweepKind
    m_values: tuple = (0, 1, 2, 3, 4)
    alpha_sq_range: tuple = (0.01, 1.0, 0.01)
    beta_range: tuple = (0.0, 3.0, 0.005)
    fixed_alpha_sq: float = None
    alpha_sq_log_points: int = None

    def __post_init__(self):
        object.__setattr__(self, "kind", SweepKind(self.kind))
        object.__setattr__(self, "m_values", tuple(self.m_values))
        if not self.m_values:
            raise SweepSpecError("m_values must be non-empty")
        for m in self.m_values:
            if isinstance(m, bool) or not isinstance(m, (int, np.integer)) or m < 0:
                raise SweepSpecError(f"m_values must be non-negative integers, got {m!r}")
        if self.kind in _BETA_KINDS:
            if self.fixed_alpha_sq is None:
                raise SweepSpecError(f"{self.kind.value} requires fixed_alpha_sq")
            if not (math.isfinite(self.fixed_alpha_sq) and self.fixed_alpha_sq >= 0):
                raise SweepSpecError(f"fixed_alpha_sq must be >= 0, got {self.fixed_alpha_sq!r}")
            _check_range("beta_range", self.beta_range, allow_negative=True)
        else:
            _check_range("alpha_sq_range", self.alpha_sq_range, allow_negative=False)
            if self.alpha_sq_range[0] <= 0:
                raise SweepSpecError("alpha_sq_range must start above 0 for optimized sweeps")
            if self.alpha_sq_log_points is not None and self.alpha_sq_log_points < 1:
                raise SweepSpecError("alpha_sq_log_points must be >= 1")

    def axis(self):
        """The independent-variable grid."""
        if self.kind in _BETA_KINDS:
            return linear_grid(*self.beta_range)
        start, stop, step = self.alpha_sq_range
        if self.alpha_sq_log_points is not None:
            return np.geomspace(start, stop, self.alpha_sq_log_points)
        return linear_grid(start, stop, step)


def _check_range(name, rng, allow_negative):
    if len(rng) != 3:
        raise SweepSpecError(f"{name} must be (start, stop, step)")
    start, stop, step = rng
    if not all(math.isfinite(v) for v in rng):
        raise SweepSpecError(f"{name} must be finite")
    if step <= 0:
        raise SweepSpecError(f"{name} step must be > 0")
    if stop < start:
        raise SweepSpecError(f"{name} is empty (stop < start)")
    if not allow_negative and start < 0:
        raise SweepSpecError(f"{name} must be non-negative")


def linear_grid(start, stop, step):
    n = int(math.floor((stop - start) / step + 1e-9)) + 1
    return np.round(start + step * np.arange(n), 12)


def _dot_rows(alpha_sq):
    """Flag the row nearest each multiple of ``DOT_SPACING`` inside the range."""
    flags = np.zeros(len(alpha_sq), dtype=int)
    k = 1
    while k * DOT_SPACING <= alpha_sq.max() + 1e-12:
        t = k * DOT_SPACING
        if t >= alpha_sq.min() - 1e-12:
            flags[int(np.argmin(np.abs(alpha_sq - t)))] = 1
        k += 1
    return flags


def run_sweep(spec):
    """Evaluate ``spec`` and return its rows in grid order."""
    kind = spec.kind
    xs = spec.axis()
    ms = spec.m_values
    rows = []

    if kind in _BETA_KINDS:
        alpha = math.sqrt(spec.fixed_alpha_sq)
        sigma = float(overlap(alpha))
        p_h = helstrom(Alphabet(alpha))
        curves = {}
        for m in ms:
            params = ReceiverParams(xs, m)
            if kind is SweepKind.ERROR_VS_BETA:
                curves[m] = error_rate(alpha, params)
            else:
                curves[m] = 1.0 - inconclusive_rate(alpha, params)
        for i, beta in enumerate(xs):
            row = {"beta": float(beta)}
            if kind is SweepKind.ERROR_VS_BETA:
                row.update({f"p_error_m{m}": float(curves[m][i]) for m in ms})
                row["helstrom"] = p_h
            else:
                row.update({f"acceptance_m{m}": float(curves[m][i]) for m in ms})
                row["usd_acceptance"] = 1.0 - sigma
            rows.append(row)
        return rows

    dots = _dot_rows(xs) if kind is SweepKind.PARAMETRIC else None
    for i, a2 in enumerate(xs):
        a2 = float(a2)
        alpha = math.sqrt(a2)
        sigma = float(overlap(alpha))
        opt = {m: optimize_displacement(alpha, m) for m in ms}
        row = {"alpha_sq": a2}
        if kind is SweepKind.BETA_OPT_VS_ALPHA:
            row["kennedy_beta"] = alpha
            row.update({f"beta_opt_m{m}": opt[m].beta_opt for m in ms})
        elif kind is SweepKind.ERROR_VS_ALPHA:
            row["helstrom"] = helstrom(Alphabet(alpha))
            row.update({f"p_error_m{m}": opt[m].rates.p_error for m in ms})
            row.update({f"bound_m{m}": opt[m].matched_bound for m in ms})
        elif kind is SweepKind.ACCEPTANCE_VS_ALPHA:
            row["usd_acceptance"] = 1.0 - sigma
            row.update({f"acceptance_m{m}": 1.0 - opt[m].rates.p_inconclusive for m in ms})
        else:
            row["dot"] = int(dots[i])
            row.update({f"p_inc_m{m}": opt[m].rates.p_inconclusive for m in ms})
            row.update({f"p_error_m{m}": opt[m].rates.p_error for m in ms})
            row.update({f"bound_m{m}": float(intermediate_bound(opt[m].rates.p_inconclusive, sigma))
                        for m in ms})
        rows.append(row)
    return rows


FIGURES = {
    "2a": dict(kind=SweepKind.ERROR_VS_BETA, m_values=(0, 1, 2, 3), fixed_alpha_sq=0.4),
    "2b": dict(kind=SweepKind.ACCEPTANCE_VS_BETA, m_values=(1, 2, 3), fixed_alpha_sq=0.4),
    "3a": dict(kind=SweepKind.BETA_OPT_VS_ALPHA, m_values=(0, 1, 2, 3, 4)),
    "3b": dict(kind=SweepKind.ERROR_VS_ALPHA, m_values=(0, 1, 2, 3, 4)),
    "4a": dict(kind=SweepKind.ACCEPTANCE_VS_ALPHA, m_values=(1, 2, 3, 4)),
    "4b": dict(kind=SweepKind.PARAMETRIC, m_values=(1, 2, 3, 4),
               alpha_sq_range=(0.002, 1.0, 0.002), alpha_sq_log_points=500),
}


def figure_spec(which):
    """Default :class:`SweepSpec` reproducing one figure panel (``"2a"`` ... ``"4b"``)."""
    try:
        return SweepSpec(**FIGURES[which])
    except KeyError:
        raise SweepSpecError(f"unknown figure {which!r}; choose from {sorted(FIGURES)}") from None
