"""Bivariate association: Pearson correlation test and cross-correlation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidDfError, LagExceedsDataError, ZeroVarianceError
from .series import AlignedPair
from .special import betainc

DEFAULT_MAX_LAG = 24
P_FLOOR = 2.2e-16


def _centered(pair: AlignedPair):
    if pair.n < 3:
        raise ValueError(f"need at least 3 paired observations, got {pair.n}")
    for name, v in (("x", pair.x), ("y", pair.y)):
        if np.ptp(v) == 0:
            raise ZeroVarianceError(f"{name} is constant")
    return pair.x - pair.x.mean(), pair.y - pair.y.mean()


def _norm(dx, dy) -> float:
    sxx = math.fsum(dx * dx)
    syy = math.fsum(dy * dy)
    if sxx == 0 or syy == 0:
        # spread so small its squares underflow
        raise ZeroVarianceError("variance underflows to zero")
    prod = sxx * syy
    if prod == 0 or math.isinf(prod):
        return math.sqrt(sxx) * math.sqrt(syy)
    return math.sqrt(prod)


def pearson_r(pair: AlignedPair) -> float:
    """Sample Pearson correlation of an aligned pair."""
    dx, dy = _centered(pair)
    r = math.fsum(dx * dy) / _norm(dx, dy)
    return min(1.0, max(-1.0, r))


def student_t_sf(t: float, df: float) -> float:
    """Upper tail probability ``P(T > t)`` of Student's t with ``df`` degrees of freedom."""
    if not df >= 1:
        raise InvalidDfError(f"degrees of freedom must be >= 1, got {df}")
    if math.isnan(t):
        return math.nan
    if t < 0:
        return 1.0 - student_t_sf(-t, df)
    if math.isinf(t):
        return 0.0
    x = df / (df + t * t)
    return 0.5 * betainc(df / 2.0, 0.5, x)


@dataclass(frozen=True)
class CorrelationTest:
    """Two-sided test of zero correlation."""

    r: float
    t: float
    df: int
    p: float
    n: int
    degenerate: bool = False

    def p_display(self) -> str:
        if self.p < P_FLOOR:
            return "< 2.2e-16"
        return f"{self.p:.4g}"


def cor_test(pair: AlignedPair) -> CorrelationTest:
    r = pearson_r(pair)
    n = pair.n
    df = n - 2
    if abs(r) == 1.0:
        return CorrelationTest(r, math.copysign(math.inf, r), df, 0.0, n, degenerate=True)
    t = r * math.sqrt(df / (1.0 - r * r))
    p = min(1.0, 2.0 * student_t_sf(abs(t), df))
    return CorrelationTest(r, t, df, p, n)


@dataclass(frozen=True)
class CrossCorrelogram:
    """Correlations indexed by integer month lag ``-max_lag..max_lag``.

    ``values[k + max_lag]`` correlates ``x[t + k]`` with ``y[t]``; a peak at
    negative ``k`` means ``x`` trails ``y``.
    """

    max_lag: int
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.shape != (2 * self.max_lag + 1,):
            raise ValueError("need one value per lag")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def lags(self) -> np.ndarray:
        return np.arange(-self.max_lag, self.max_lag + 1)

    @staticmethod
    def lag_year_fraction(k: int) -> float:
        return k / 12.0

    def __getitem__(self, k: int) -> float:
        if abs(k) > self.max_lag:
            raise KeyError(k)
        return float(self.values[k + self.max_lag])

    def argmax(self) -> int:
        """Lag of the largest correlation (smallest |lag| on ties)."""
        return self._best(self.values)

    def argmax_abs(self) -> int:
        """Lag of the correlation largest in magnitude."""
        return self._best(np.abs(self.values))

    def _best(self, score):
        best = score.max()
        cands = self.lags[score == best]
        return int(cands[np.argmin(np.abs(cands))])


def ccf(pair: AlignedPair, max_lag: int = DEFAULT_MAX_LAG) -> CrossCorrelogram:
    """Sample cross-correlation with full-sample means and a 1/n normaliser."""
    if max_lag < 0:
        raise ValueError("max_lag must be non-negative")
    n = pair.n
    if n < max_lag + 3:
        raise LagExceedsDataError(f"max_lag {max_lag} needs at least {max_lag + 3} pairs, got {n}")
    dx, dy = _centered(pair)
    scale = _norm(dx, dy)
    out = np.empty(2 * max_lag + 1)
    for i, k in enumerate(range(-max_lag, max_lag + 1)):
        if k >= 0:
            prods = dx[k:] * dy[:n - k]
        else:
            prods = dx[:n + k] * dy[-k:]
        # fsum is exact-rounded, so swapping x and y reproduces each value bit for bit
        out[i] = math.fsum(prods) / scale
    return CrossCorrelogram(max_lag, np.clip(out, -1.0, 1.0))
