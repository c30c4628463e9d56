"""Classical additive decomposition with a centred 2x12 moving average.

The model is ``Y[t] = T[t] + S[m(t)] + R[t]`` where ``m(t)`` is the calendar
month of ``t``. The trend is undefined for the first and last six months, so
the random component is as well.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IncompleteCycleError, SeriesTooShortError, UnexpectedMissingError
from .series import MonthlySeries, cycle_figures

PERIOD = 12
HALF = PERIOD // 2
COMPONENTS = ("aggregate", "trend", "seasonal", "random")

# half weights on the two end points so the window is symmetric about t
TREND_WEIGHTS = np.r_[0.5, np.ones(PERIOD - 1), 0.5] / PERIOD


@dataclass(frozen=True)
class SeasonalFigures:
    """Per-calendar-month offsets; ``by_month[0]`` is January."""

    by_month: np.ndarray

    def __post_init__(self):
        arr = np.array(self.by_month, dtype=float)
        if arr.shape != (PERIOD,):
            raise ValueError("need exactly 12 seasonal figures")
        arr.setflags(write=False)
        object.__setattr__(self, "by_month", arr)

    def __getitem__(self, month: int) -> float:
        """Figure for calendar month 1..12."""
        return float(self.by_month[month - 1])

    def total(self) -> float:
        return float(np.sum(self.by_month))


@dataclass(frozen=True)
class Decomposition:
    aggregate: MonthlySeries
    trend: MonthlySeries
    seasonal: SeasonalFigures
    random: MonthlySeries

    def seasonal_series(self) -> MonthlySeries:
        return cycle_figures(self.seasonal.by_month, self.aggregate)

    def component(self, name: str) -> MonthlySeries:
        if name == "aggregate":
            return self.aggregate
        if name == "trend":
            return self.trend
        if name == "seasonal":
            return self.seasonal_series()
        if name == "random":
            return self.random
        raise ValueError(f"unknown component {name!r}; choose from {COMPONENTS}")


def _require_complete(s: MonthlySeries, minimum: int):
    if not s.is_complete:
        raise UnexpectedMissingError(f"series {s.label!r} has missing values")
    if len(s) < minimum:
        raise SeriesTooShortError(
            f"series {s.label!r} has {len(s)} months, need at least {minimum}")


def centered_ma_trend(s: MonthlySeries) -> MonthlySeries:
    """Centred 13-point (2x12) moving average of a complete series."""
    _require_complete(s, PERIOD + 1)
    y = s.values
    trend = np.full(y.size, np.nan)
    for t in range(HALF, y.size - HALF):
        trend[t] = TREND_WEIGHTS @ y[t - HALF:t + HALF + 1]
    return s.with_values(trend)


def seasonal_figures(s: MonthlySeries, trend: MonthlySeries) -> SeasonalFigures:
    """Average the detrended values by calendar month, then centre them."""
    if trend.start != s.start or len(trend) != len(s):
        raise ValueError("trend must span the same months as the series")
    detrended = s.values - trend.values
    month_idx = np.array([m.month - 1 for m in s.months])
    raw = np.empty(PERIOD)
    for m in range(PERIOD):
        vals = detrended[(month_idx == m) & ~np.isnan(detrended)]
        if vals.size == 0:
            raise IncompleteCycleError(f"no detrended values for calendar month {m + 1}")
        raw[m] = vals.mean()
    return SeasonalFigures(raw - raw.mean())


def decompose(s: MonthlySeries) -> Decomposition:
    _require_complete(s, 2 * PERIOD)
    trend = centered_ma_trend(s)
    figures = seasonal_figures(s, trend)
    seasonal = cycle_figures(figures.by_month, s).values
    random = s.values - trend.values - seasonal
    return Decomposition(s, trend, figures, s.with_values(random))
