"""Dataset registry loaded from an INI-style config file.

Example::

    [analysis]
    train = 2009-01:2014-12
    test = 2015-01:2016-04
    max_lag = 24

    [dataset:usd_inr]
    path = usd_inr.txt
    kind = monthly
    start = 2009-01
    unit = one-decimal
    plot_scale = 100

Relative paths resolve against the config file's directory.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .association import DEFAULT_MAX_LAG
from .errors import ConfigError, UnknownDatasetError
from .regression import DEFAULT_TEST, DEFAULT_TRAIN
from .series import (
    UNIT_HINTS,
    MonthlySeries,
    MonthStamp,
    Window,
    aggregate_daily_to_monthly,
    parse_daily_csv,
    parse_monthly_file,
)

DATASET_PREFIX = "dataset:"


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    path: Path
    kind: str = "monthly"
    start: MonthStamp | None = None
    unit_hint: str = "raw"
    plot_scale: float = 1.0
    label: str = ""

    def __post_init__(self):
        if self.kind not in ("monthly", "daily"):
            raise ConfigError(f"dataset {self.name}: kind must be monthly or daily")
        if self.kind == "monthly" and self.start is None:
            raise ConfigError(f"dataset {self.name}: monthly data needs a start month")
        if not self.plot_scale > 0:
            raise ConfigError(f"dataset {self.name}: plot_scale must be positive")
        if self.unit_hint not in UNIT_HINTS:
            raise ConfigError(f"dataset {self.name}: unknown unit {self.unit_hint!r}")

    def load(self) -> MonthlySeries:
        try:
            raw = self.path.read_bytes()
        except OSError as exc:
            raise ConfigError(f"dataset {self.name}: cannot read {self.path}: {exc}") from exc
        label = self.label or self.name
        if self.kind == "daily":
            return aggregate_daily_to_monthly(parse_daily_csv(raw), label, self.unit_hint)
        return parse_monthly_file(raw, self.start, label, self.unit_hint)


@dataclass(frozen=True)
class AnalysisConfig:
    datasets: tuple[DatasetSpec, ...] = field(default=())
    default_train: Window = DEFAULT_TRAIN
    default_test: Window = DEFAULT_TEST
    max_lag: int = DEFAULT_MAX_LAG

    def __post_init__(self):
        names = [d.name for d in self.datasets]
        if len(set(names)) != len(names):
            raise ConfigError("dataset names must be unique")
        if not self.default_train.last < self.default_test.first:
            raise ConfigError("training window must end before the test window starts")

    def dataset(self, name: str) -> DatasetSpec:
        for d in self.datasets:
            if d.name == name:
                return d
        known = ", ".join(d.name for d in self.datasets)
        raise UnknownDatasetError(f"unknown dataset {name!r} (known: {known})")

    def load(self, name: str) -> MonthlySeries:
        return self.dataset(name).load()


def parse_config(text: str, base_dir: Path) -> AnalysisConfig:
    cp = configparser.ConfigParser(interpolation=None)
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(str(exc)) from exc
    try:
        analysis = cp["analysis"] if cp.has_section("analysis") else {}
        train = Window.parse(analysis["train"]) if "train" in analysis else DEFAULT_TRAIN
        test = Window.parse(analysis["test"]) if "test" in analysis else DEFAULT_TEST
        max_lag = int(analysis.get("max_lag", DEFAULT_MAX_LAG))
        datasets = []
        for section in cp.sections():
            if not section.startswith(DATASET_PREFIX):
                continue
            sec = cp[section]
            start = sec.get("start")
            datasets.append(DatasetSpec(
                name=section[len(DATASET_PREFIX):].strip(),
                path=base_dir / sec["path"],
                kind=sec.get("kind", "monthly"),
                start=MonthStamp.parse(start) if start else None,
                unit_hint=sec.get("unit", "raw"),
                plot_scale=float(sec.get("plot_scale", "1")),
                label=sec.get("label", ""),
            ))
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad config: {exc}") from exc
    return AnalysisConfig(tuple(datasets), train, test, max_lag)


def load_config(path: str | Path | None = None) -> AnalysisConfig:
    """Read a config file, or the bundled one with the five shipped datasets."""
    if path is None:
        ref = resources.files("sectorts") / "data" / "datasets.ini"
        with resources.as_file(ref) as p:
            return parse_config(p.read_text(encoding="utf-8"), p.parent)
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, path.parent)
