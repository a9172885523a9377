"""Quasi-orthogonal Z-complementary pair design and Doppler-resilient
waveform evaluation."""

from .sequences import (
    SequencePair,
    WeightProfile,
    auto_correlation,
    complementary_sum,
    cross_correlation,
    objective,
    papr,
    reverse_conjugate,
)
from .solver import SolverConfig, SolverState, solve
from .waveform import golay_pair, ptm, ptm_a_schedule, siso_schedule
from .ambiguity import DelayDopplerGrid, ambiguity_surface, taylor_coefficients, zone_metrics

__all__ = [
    "SequencePair",
    "WeightProfile",
    "auto_correlation",
    "complementary_sum",
    "cross_correlation",
    "objective",
    "papr",
    "reverse_conjugate",
    "SolverConfig",
    "SolverState",
    "solve",
    "golay_pair",
    "ptm",
    "ptm_a_schedule",
    "siso_schedule",
    "DelayDopplerGrid",
    "ambiguity_surface",
    "taylor_coefficients",
    "zone_metrics",
    "__version__",
]

__version__ = "0.1.0"
