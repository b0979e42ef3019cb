"""Discrimination of BPSK coherent states with a displacement + PNR receiver."""
from .bounds import Alphabet, helstrom, idp_inconclusive, intermediate_bound
from .mc import TrialTally, sample_poisson, simulate
from .optimizer import OptimizationError, OptResult, optimize_displacement, pinc_at_optimum
from .quantum_core import (
    DomainError,
    displaced_mean,
    overlap,
    poisson_cdf,
    poisson_pmf,
)
from .receiver import (
    Method,
    NoConclusiveResults,
    Outcome,
    Rates,
    ReceiverParams,
    classify,
    error_rate,
    inconclusive_rate,
    kennedy_error,
    rates,
    rates_direct,
)
from .sweeps import SweepKind, SweepSpec, figure_spec, run_sweep

__version__ = "0.1.0"
