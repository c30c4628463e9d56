"""Simple least-squares fits between two monthly series and forecast tables."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    InsufficientDataError,
    InvalidWindowError,
    MissingActualError,
    MissingPredictorError,
    WindowMismatchError,
    ZeroActualError,
    ZeroVarianceError,
)
from .series import MonthlySeries, MonthStamp, Window, align, window

DEFAULT_TRAIN = Window(MonthStamp(2009, 1), MonthStamp(2014, 12))
DEFAULT_TEST = Window(MonthStamp(2015, 1), MonthStamp(2016, 4))

SLOPE_SIG_DIGITS = 4
INTERCEPT_DECIMALS = 2


def round_sig(value: float, digits: int) -> float:
    if value == 0 or not math.isfinite(value):
        return value
    return round(value, digits - 1 - math.floor(math.log10(abs(value))))


@dataclass(frozen=True)
class LinearModelSummary:
    intercept: float
    slope: float
    rse: float
    df: int
    r_squared: float
    adj_r_squared: float
    n: int
    train_window: Window
    dependent: str = ""
    independent: str = ""

    def rounded_coefficients(self, slope_digits: int = SLOPE_SIG_DIGITS,
                             intercept_decimals: int = INTERCEPT_DECIMALS) -> LinearModelSummary:
        """Copy with coefficients cut to the precision a printed summary shows.

        Forecast tables built from printed summaries multiply by these rounded
        coefficients, so reproducing such a table needs the same rounding.
        """
        return replace(self, slope=round_sig(self.slope, slope_digits),
                       intercept=round(self.intercept, intercept_decimals))

    def predict(self, x):
        return self.intercept + self.slope * np.asarray(x, dtype=float)


def fit_ols(dependent: MonthlySeries, independent: MonthlySeries,
            train: Window = DEFAULT_TRAIN) -> LinearModelSummary:
    """Regress ``dependent`` on ``independent`` over the training window."""
    pair = align(window(independent, *train), window(dependent, *train), min_overlap=0)
    n = pair.n
    if n < 3:
        raise InsufficientDataError(f"need at least 3 training months, got {n}")
    x, y = pair.x, pair.y
    if np.ptp(x) == 0:
        raise ZeroVarianceError(f"predictor {independent.label!r} is constant over {train}")
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = math.fsum(dx * dx)
    syy = math.fsum(dy * dy)
    sxy = math.fsum(dx * dy)
    slope = sxy / sxx
    intercept = y.mean() - slope * x.mean()
    resid = y - (intercept + slope * x)
    df = n - 2
    rse = math.sqrt(math.fsum(resid * resid) / df)
    # symmetric in x and y, so swapped fits report identical values
    r2 = min(1.0, sxy * sxy / (sxx * syy)) if syy > 0 else 1.0
    adj = 1.0 - (1.0 - r2) * (n - 1) / df
    return LinearModelSummary(intercept, slope, rse, df, r2, adj, n,
                              Window(pair.months[0], pair.months[-1]),
                              dependent.label, independent.label)


def _test_months(test: Window) -> list[MonthStamp]:
    if test.first > test.last:
        raise InvalidWindowError(f"test window {test} is reversed")
    return [test.first.shift(k) for k in range(test.last - test.first + 1)]


def forecast(model: LinearModelSummary, independent: MonthlySeries,
             test: Window = DEFAULT_TEST) -> list[tuple[MonthStamp, float]]:
    out = []
    for month in _test_months(test):
        x = independent.value_at(month)
        if x is None:
            raise MissingPredictorError(month)
        out.append((month, model.intercept + model.slope * x))
    return out


@dataclass(frozen=True)
class ForecastRow:
    month: MonthStamp
    actual: float
    predictor: float
    contribution: float
    intercept_term: float
    forecast: float
    percent_error: float


@dataclass(frozen=True)
class ForecastTable:
    model: LinearModelSummary
    rows: tuple[ForecastRow, ...] = field(default=())

    @property
    def mean_percent_error(self) -> float:
        return float(np.mean([r.percent_error for r in self.rows]))


def error_table(model: LinearModelSummary, dependent: MonthlySeries,
                independent: MonthlySeries, test: Window = DEFAULT_TEST,
                signed: bool = False, round_forecast: bool = False) -> ForecastTable:
    """Per-month forecast against actuals with percent error.

    The error is ``|E - A| / A * 100`` unless ``signed``. With
    ``round_forecast`` the forecast is rounded to a whole number before the
    error is taken.
    """
    rows = []
    for month, _ in forecast(model, independent, test):
        actual = dependent.value_at(month)
        if actual is None:
            raise MissingActualError(month)
        if actual == 0:
            raise ZeroActualError(month)
        b = independent.value_at(month)
        c = b * model.slope
        e = c + model.intercept
        if round_forecast:
            e = float(round(e))
        err = (e - actual) / actual * 100.0
        if not signed:
            err = abs(err)
        rows.append(ForecastRow(month, actual, b, c, model.intercept, e, err))
    return ForecastTable(model, tuple(rows))


def reciprocal_fit_check(m_xy: LinearModelSummary, m_yx: LinearModelSummary) -> float:
    """Product of the slopes of ``y ~ x`` and ``x ~ y``; equals their shared R^2."""
    if m_xy.train_window != m_yx.train_window or m_xy.n != m_yx.n:
        raise WindowMismatchError(
            f"fits use different windows: {m_xy.train_window} (n={m_xy.n}) vs "
            f"{m_yx.train_window} (n={m_yx.n})")
    if (m_xy.dependent, m_xy.independent) != (m_yx.independent, m_yx.dependent):
        raise WindowMismatchError("models do not swap the same two series")
    return m_xy.slope * m_yx.slope
