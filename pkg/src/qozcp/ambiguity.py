"""Delay-Doppler evaluation of transmit schedules.

The ambiguity value at delay k and Doppler increment theta (radians per PRI)
is the Doppler-phased sum of per-PRI correlations,

    g(k, theta) = sum_n exp(j n theta) * C_{a_n, b_n}(k),

auto-ambiguity when both rows coincide and cross-ambiguity otherwise.
Per-PRI correlations are computed once with the FFT path and reused for every
Doppler sample.
"""

from dataclasses import dataclass, field

import numpy as np

from .sequences import SequencePair, WeightProfile, lag_index
from .spectral import cross_correlation_fft
from .waveform import TransmitSchedule, materialize, ptm, ptm_a_schedule, prouhet_partition_sums

__all__ = [
    "DelayDopplerGrid",
    "AmbiguitySurface",
    "TaylorReport",
    "MetricsReport",
    "ambiguity_surface",
    "taylor_coefficients",
    "zone_metrics",
]

OMEGA1_DOPPLER_MAX = 0.1
OMEGA1_SAMPLES = 256
OMEGA2_DOPPLER_MAX = 3.0
OMEGA2_SAMPLES = 512


@dataclass
class DelayDopplerGrid:
    """Integer delays -K..K and a sorted list of Doppler phases."""

    delays: np.ndarray
    dopplers: np.ndarray

    def __post_init__(self):
        self.delays = np.asarray(self.delays, dtype=np.int64)
        self.dopplers = np.asarray(self.dopplers, dtype=np.float64)
        if self.dopplers.size == 0:
            raise ValueError("doppler list must be non-empty")
        if np.any(np.diff(self.dopplers) < 0):
            raise ValueError("doppler list must be sorted")

    @classmethod
    def zone(cls, Z: int, doppler_max: float, samples: int) -> "DelayDopplerGrid":
        return cls(
            delays=np.arange(-(Z - 1), Z),
            dopplers=np.linspace(0.0, doppler_max, samples),
        )


@dataclass
class AmbiguitySurface:
    grid: DelayDopplerGrid
    values: np.ndarray           # len(delays) x len(dopplers)

    def modulus(self) -> np.ndarray:
        return np.abs(self.values)


@dataclass
class TaylorReport:
    """Order-m Doppler Taylor coefficient of a surface, as a lag vector."""

    order: int
    lag_vector: np.ndarray
    beta_m: float
    in_zone_max: float
    out_zone_max: float


@dataclass
class MetricsReport:
    """The four tabulated zone metrics plus the matched-filter peak."""

    max_complementary_sidelobe_in_zone: float
    max_cross_correlation_in_zone: float
    max_aaf_sidelobe_omega1: float
    max_caf_omega2: float
    peak_value: float

    def as_dict(self) -> dict:
        return {
            "max_complementary_sidelobe_in_zone": self.max_complementary_sidelobe_in_zone,
            "max_cross_correlation_in_zone": self.max_cross_correlation_in_zone,
            "max_aaf_sidelobe_omega1": self.max_aaf_sidelobe_omega1,
            "max_caf_omega2": self.max_caf_omega2,
            "peak_value": self.peak_value,
        }


def _per_pri_correlations(schedule: TransmitSchedule, row_a: int, row_b: int) -> np.ndarray:
    """Stack of C_{a_n, b_n}(k) lag vectors, one row per PRI."""
    return np.stack([
        cross_correlation_fft(materialize(schedule, row_a, n),
                              materialize(schedule, row_b, n))
        for n in range(schedule.n_pri)
    ])


def ambiguity_surface(schedule: TransmitSchedule, row_a: int, row_b: int,
                      grid: DelayDopplerGrid) -> AmbiguitySurface:
    """Evaluate the (auto- or cross-) ambiguity surface over the grid."""
    L = schedule.pair.length
    if np.any(np.abs(grid.delays) > L - 1):
        raise ValueError("grid delay exceeds L-1")
    corr = _per_pri_correlations(schedule, row_a, row_b)
    rows = np.array([lag_index(int(k), L) for k in grid.delays])
    n = np.arange(schedule.n_pri)
    phases = np.exp(1j * np.outer(n, grid.dopplers))
    values = corr[:, rows].T @ phases
    return AmbiguitySurface(grid=grid, values=values)


def taylor_coefficients(schedule: TransmitSchedule, row_a: int, row_b: int,
                        m_max: int, Z: int | None = None) -> list[TaylorReport]:
    """Lag-domain Doppler Taylor coefficients sum_n n^m C_{a_n, b_n}(k).

    ``beta_m`` is the shared power sum of the Thue-Morse index classes.  The
    zone split uses Z when given (full range otherwise); the zero lag is
    excluded from the in-zone maximum for auto surfaces only.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    L = schedule.pair.length
    corr = _per_pri_correlations(schedule, row_a, row_b)
    bits = ptm(schedule.n_pri)
    lags = np.arange(-(L - 1), L)
    zone = L if Z is None else Z
    in_zone = np.abs(lags) < zone
    if row_a == row_b:
        in_zone &= lags != 0
    reports = []
    for m in range(m_max + 1):
        n_pow = np.arange(schedule.n_pri, dtype=np.float64) ** m
        vec = n_pow @ corr
        _, beta_m = prouhet_partition_sums(bits, m)
        reports.append(TaylorReport(
            order=m,
            lag_vector=vec,
            beta_m=beta_m,
            in_zone_max=float(np.max(np.abs(vec[in_zone]))) if np.any(in_zone) else 0.0,
            out_zone_max=float(np.max(np.abs(vec[~in_zone]))) if np.any(~in_zone) else 0.0,
        ))
    return reports


def zone_metrics(pair: SequencePair, wp: WeightProfile,
                 schedule: TransmitSchedule | None = None,
                 omega1: DelayDopplerGrid | None = None,
                 omega2: DelayDopplerGrid | None = None) -> MetricsReport:
    """Zone maxima of the pair correlations and the V/H ambiguity surfaces.

    Defaults reproduce the tabulated evaluation regions: delays inside the
    zone, Doppler spans [0, 0.1] for the auto surface and [0, 3] for the
    cross surface, with an 8-PRI two-row schedule.
    """
    L = pair.length
    Z = wp.Z
    if schedule is None:
        schedule = ptm_a_schedule(pair, 8)
    if omega1 is None:
        omega1 = DelayDopplerGrid.zone(Z, OMEGA1_DOPPLER_MAX, OMEGA1_SAMPLES)
    if omega2 is None:
        omega2 = DelayDopplerGrid.zone(Z, OMEGA2_DOPPLER_MAX, OMEGA2_SAMPLES)

    r = cross_correlation_fft(pair.x, pair.x) + cross_correlation_fft(pair.y, pair.y)
    c = cross_correlation_fft(pair.x, pair.y)
    lags = np.arange(-(L - 1), L)
    comp_zone = (np.abs(lags) < Z) & (lags != 0)
    cross_zone = np.abs(lags) < Z

    aaf = ambiguity_surface(schedule, 0, 0, omega1)
    aaf_mod = aaf.modulus()
    off_peak = aaf.grid.delays != 0
    if schedule.rows == 2:
        caf = ambiguity_surface(schedule, 0, 1, omega2)
        caf_max = float(np.max(caf.modulus()))
    else:
        caf_max = 0.0

    theta0 = np.argmin(np.abs(aaf.grid.dopplers))
    peak_row = np.where(aaf.grid.delays == 0)[0]
    peak = float(aaf_mod[peak_row[0], theta0]) if peak_row.size else 0.0

    return MetricsReport(
        max_complementary_sidelobe_in_zone=float(np.max(np.abs(r[comp_zone]))),
        max_cross_correlation_in_zone=float(np.max(np.abs(c[cross_zone]))),
        max_aaf_sidelobe_omega1=float(np.max(aaf_mod[off_peak, :])),
        max_caf_omega2=caf_max,
        peak_value=peak,
    )
