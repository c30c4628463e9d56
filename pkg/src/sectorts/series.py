"""Monthly series model, ingestion and alignment."""

from __future__ import annotations

import csv
import datetime as dt
import io
import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import (
    EmptyDatasetError,
    EmptyWindowError,
    GapMonthError,
    InsufficientOverlapError,
    InvalidWindowError,
    ParseError,
)

UNIT_HINTS = ("integer", "one-decimal", "raw")

_STAMP_RE = re.compile(r"^\s*(\d{4})-(\d{1,2})\s*$")


@dataclass(frozen=True, order=True)
class MonthStamp:
    year: int
    month: int

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month must be in 1..12, got {self.month}")

    @classmethod
    def parse(cls, text: str) -> MonthStamp:
        m = _STAMP_RE.match(text)
        if m is None:
            raise ValueError(f"expected YYYY-MM, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    @classmethod
    def from_ordinal(cls, ordinal: int) -> MonthStamp:
        year, month0 = divmod(ordinal, 12)
        return cls(year, month0 + 1)

    @property
    def ordinal(self) -> int:
        return 12 * self.year + self.month - 1

    def shift(self, months: int) -> MonthStamp:
        return MonthStamp.from_ordinal(self.ordinal + months)

    def __sub__(self, other: MonthStamp) -> int:
        return self.ordinal - other.ordinal

    def __str__(self):
        return f"{self.year:04d}-{self.month:02d}"


class Window(NamedTuple):
    """Inclusive month range."""

    first: MonthStamp
    last: MonthStamp

    @classmethod
    def parse(cls, text: str) -> Window:
        try:
            a, b = text.split(":")
        except ValueError:
            raise ValueError(f"expected FROM:TO, got {text!r}") from None
        return cls(MonthStamp.parse(a), MonthStamp.parse(b))

    def __str__(self):
        return f"{self.first}:{self.last}"


@dataclass(frozen=True)
class MonthlySeries:
    """A monthly sequence anchored at ``start``.

    Missing values are stored as NaN and may only appear as a leading and/or
    trailing run. The value array is read-only.
    """

    start: MonthStamp
    values: np.ndarray
    label: str = ""
    unit_hint: str = "raw"

    def __post_init__(self):
        vals = np.array(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise EmptyDatasetError("a series needs at least one value")
        obs = np.flatnonzero(~np.isnan(vals))
        if obs.size and np.isnan(vals[obs[0]:obs[-1] + 1]).any():
            raise ValueError("missing values are only allowed at either end")
        if self.unit_hint not in UNIT_HINTS:
            raise ValueError(f"unknown unit hint {self.unit_hint!r}")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return self.values.size

    @property
    def end(self) -> MonthStamp:
        return self.start.shift(len(self) - 1)

    @property
    def months(self) -> list[MonthStamp]:
        return [self.start.shift(i) for i in range(len(self))]

    @property
    def observed(self) -> np.ndarray:
        return ~np.isnan(self.values)

    @property
    def is_complete(self) -> bool:
        return bool(self.observed.all())

    def index_of(self, month: MonthStamp) -> int | None:
        i = month - self.start
        return i if 0 <= i < len(self) else None

    def value_at(self, month: MonthStamp) -> float | None:
        i = self.index_of(month)
        if i is None or np.isnan(self.values[i]):
            return None
        return float(self.values[i])

    def with_values(self, values, **changes) -> MonthlySeries:
        """Same anchor and metadata, new values."""
        kw = dict(start=self.start, label=self.label, unit_hint=self.unit_hint)
        kw.update(changes)
        return MonthlySeries(values=values, **kw)

    def observed_part(self) -> MonthlySeries:
        """Drop the missing leading and trailing runs."""
        obs = np.flatnonzero(self.observed)
        if obs.size == 0:
            raise EmptyDatasetError(f"series {self.label!r} has no observed values")
        return self.with_values(self.values[obs[0]:obs[-1] + 1],
                                start=self.start.shift(int(obs[0])))


@dataclass(frozen=True)
class DailyRecord:
    date: dt.date
    value: float


@dataclass(frozen=True)
class AlignedPair:
    x: np.ndarray
    y: np.ndarray
    months: tuple[MonthStamp, ...] = field(default=())

    def __post_init__(self):
        x = np.array(self.x, dtype=float)
        y = np.array(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 1:
            raise ValueError("x and y must be 1-d and of equal length")
        if np.isnan(x).any() or np.isnan(y).any():
            raise ValueError("aligned pairs cannot hold missing values")
        months = tuple(self.months)
        if months and len(months) != x.size:
            raise ValueError("months must match the paired values")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "months", months)

    @property
    def n(self) -> int:
        return self.x.size

    @classmethod
    def from_arrays(cls, x, y) -> AlignedPair:
        return cls(np.asarray(x, dtype=float), np.asarray(y, dtype=float))

    def swapped(self) -> AlignedPair:
        return AlignedPair(self.y, self.x, self.months)


def aggregate_daily_to_monthly(records: Iterable[DailyRecord], label: str = "",
                               unit_hint: str = "raw") -> MonthlySeries:
    """Average daily observations into calendar months.

    Every month between the first and last record must hold at least one
    observation; gaps are not interpolated.
    """
    buckets: dict[MonthStamp, list[float]] = defaultdict(list)
    for rec in records:
        buckets[MonthStamp(rec.date.year, rec.date.month)].append(rec.value)
    if not buckets:
        raise EmptyDatasetError("no daily records")
    first, last = min(buckets), max(buckets)
    values = []
    for k in range(last - first + 1):
        month = first.shift(k)
        if month not in buckets:
            raise GapMonthError(month)
        # sorted so the mean does not depend on record order
        values.append(float(np.mean(sorted(buckets[month]))))
    return MonthlySeries(first, np.array(values), label, unit_hint)


def parse_daily_csv(text: str | bytes) -> list[DailyRecord]:
    """Read ``date,value`` CSV text with ISO dates."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        raise EmptyDatasetError("daily file is empty")
    if [h.strip().lower() for h in header] != ["date", "value"]:
        raise ParseError(1, ",".join(header))
    records = []
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not c.strip() for c in row):
            continue
        if len(row) != 2:
            raise ParseError(lineno, ",".join(row))
        try:
            date = dt.date.fromisoformat(row[0].strip())
        except ValueError:
            raise ParseError(lineno, row[0]) from None
        records.append(DailyRecord(date, _parse_number(row[1], lineno)))
    if not records:
        raise EmptyDatasetError("daily file holds no records")
    return records


def parse_monthly_file(text: str | bytes, start: MonthStamp, label: str = "",
                       unit_hint: str = "raw") -> MonthlySeries:
    """Read whitespace-separated numbers, one per consecutive month."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for token in line.split():
            values.append(_parse_number(token, lineno))
    if not values:
        raise EmptyDatasetError(f"no values in monthly data for {label!r}")
    return MonthlySeries(start, np.array(values), label, unit_hint)


def _parse_number(token: str, lineno: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(lineno, token) from None
    if not np.isfinite(value):
        raise ParseError(lineno, token)
    return value


def window(s: MonthlySeries, first: MonthStamp, last: MonthStamp) -> MonthlySeries:
    """Restrict ``s`` to the inclusive range [first, last]."""
    if first > last:
        raise InvalidWindowError(f"window start {first} is after its end {last}")
    lo = max(first, s.start)
    hi = min(last, s.end)
    if lo > hi:
        raise EmptyWindowError(
            f"window {first}:{last} does not overlap {s.start}:{s.end}")
    i, j = lo - s.start, hi - s.start
    return s.with_values(s.values[i:j + 1], start=lo)


def align(a: MonthlySeries, b: MonthlySeries, min_overlap: int = 3) -> AlignedPair:
    """Pair the months where both series are observed."""
    lo = max(a.start, b.start)
    hi = min(a.end, b.end)
    months, xs, ys = [], [], []
    for k in range(max(hi - lo + 1, 0)):
        month = lo.shift(k)
        x, y = a.value_at(month), b.value_at(month)
        if x is not None and y is not None:
            months.append(month)
            xs.append(x)
            ys.append(y)
    if len(months) < min_overlap:
        raise InsufficientOverlapError(
            f"{a.label or 'x'} and {b.label or 'y'} share {len(months)} observed "
            f"months, need {min_overlap}")
    return AlignedPair(np.array(xs), np.array(ys), tuple(months))


def cycle_figures(figures: Sequence[float], like: MonthlySeries, label: str = "") -> MonthlySeries:
    """Repeat 12 calendar-month figures across the span of ``like``."""
    vals = [figures[m.month - 1] for m in like.months]
    return like.with_values(vals, label=label or like.label)
