"""Table rendering and number formatting for command output."""

from __future__ import annotations

import calendar
import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .association import CorrelationTest, CrossCorrelogram
from .decomposition import COMPONENTS, Decomposition
from .regression import ForecastTable, LinearModelSummary, round_sig
from .series import MonthlySeries

FORMATS = ("table", "tsv", "csv")


def fmt_raw(v: float) -> str:
    """Shortest text that parses back to exactly ``v``."""
    if not math.isfinite(v):
        return str(float(v))
    if v == int(v) and abs(v) < 2 ** 53:
        return str(int(v))
    return repr(float(v))


def fmt_fixed(v: float, decimals: int, strip: bool = False) -> str:
    s = f"{v:.{decimals}f}"
    if strip and "." in s:
        s = s.rstrip("0").rstrip(".")
    if s.lstrip("-").strip("0.") == "":
        s = s.lstrip("-")  # no negative zero
    return s


def fmt_sig(v: float, digits: int) -> str:
    """Round to ``digits`` significant figures, keeping trailing zeros."""
    if v == 0 or not math.isfinite(v):
        return str(v)
    decimals = max(0, digits - 1 - math.floor(math.log10(abs(v))))
    return fmt_fixed(round_sig(v, digits), decimals)


def fmt_value(v: float, unit_hint: str, raw: bool = False) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return ""
    if raw or unit_hint == "raw":
        return fmt_raw(v)
    if unit_hint == "integer":
        return fmt_fixed(v, 0)
    return fmt_fixed(v, 1, strip=True)


@dataclass
class Table:
    headers: list[str]
    rows: list[list[str]] = field(default_factory=list)
    footer: list[str] = field(default_factory=list)

    def render(self, fmt: str = "table") -> str:
        if fmt == "table":
            return self._fixed_width()
        if fmt not in FORMATS:
            raise ValueError(f"unknown format {fmt!r}")
        buf = io.StringIO()
        w = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
        w.writerow(self.headers)
        w.writerows(self.rows)
        return buf.getvalue()

    def _fixed_width(self) -> str:
        widths = [len(h) for h in self.headers]
        for row in self.rows:
            widths = [max(w, len(c)) for w, c in zip(widths, row)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(self.headers, widths)).rstrip()]
        for row in self.rows:
            cells = [c.rjust(w) if _numeric(c) else c.ljust(w) for c, w in zip(row, widths)]
            lines.append("  ".join(cells).rstrip())
        lines.extend(self.footer)
        return "\n".join(lines) + "\n"


def _numeric(cell: str) -> bool:
    if cell == "":
        return True
    try:
        float(cell)
    except ValueError:
        return cell.startswith("<")
    return True


def _year_month(month, fmt: str, prev_year):
    if fmt == "table":
        year = str(month.year) if month.year != prev_year else ""
        return [year, calendar.month_name[month.month]]
    return [str(month.year), str(month.month)]


def decomposition_table(dec: Decomposition, fmt: str = "table", raw: bool = False,
                        components=COMPONENTS) -> Table:
    unit = dec.aggregate.unit_hint
    cols = {c: dec.component(c) for c in components}
    headers = ["Year", "Month"] + [c.capitalize() for c in components]
    if fmt != "table":
        headers = [h.lower() for h in headers]
    table = Table(headers)
    prev = None
    for i, month in enumerate(dec.aggregate.months):
        row = _year_month(month, fmt, prev)
        prev = month.year
        row += [fmt_value(float(cols[c].values[i]), unit, raw) for c in components]
        table.rows.append(row)
    return table


def correlation_table(test: CorrelationTest, raw: bool = False) -> Table:
    if raw:
        vals = [fmt_raw(test.t), str(test.df), fmt_raw(test.p), fmt_raw(test.r)]
    else:
        vals = [f"{test.t:.5g}", str(test.df), test.p_display(), f"{test.r:.7g}"]
    names = ["t-statistic", "Degrees of freedom (df)", "p-value", "Correlation coefficient"]
    table = Table(["Parameter", "Value"], [list(p) for p in zip(names, vals)])
    if test.degenerate:
        table.footer.append("note: |r| = 1, the fit is degenerate")
    return table


def correlogram_table(cg: CrossCorrelogram, raw: bool = False) -> Table:
    table = Table(["Lag (months)", "Lag (years)", "Correlation"])
    for k, r in zip(cg.lags, cg.values):
        table.rows.append([str(int(k)), fmt_raw(k / 12) if raw else f"{k / 12:.3f}",
                           fmt_raw(r) if raw else f"{r:.4f}"])
    for name, k in (("max r", cg.argmax()), ("max |r|", cg.argmax_abs())):
        r = cg[k]
        table.footer.append(
            f"peak ({name}): lag {k} months ({k / 12:.3f} yr), r = "
            + (fmt_raw(r) if raw else f"{r:.4f}"))
    return table


def summary_table(model: LinearModelSummary, raw: bool = False) -> Table:
    if raw:
        vals = [fmt_raw(model.intercept), fmt_raw(model.slope),
                f"{fmt_raw(model.rse)} on {model.df} degrees of freedom",
                fmt_raw(model.r_squared), fmt_raw(model.adj_r_squared)]
    else:
        vals = [f"{model.intercept:.2f}", fmt_sig(model.slope, 4),
                f"{fmt_sig(model.rse, 4)} on {model.df} degrees of freedom",
                f"{model.r_squared:.4f}", f"{model.adj_r_squared:.4f}"]
    names = ["Intercept", f"Coefficient of {model.independent or 'x'}",
             "Residual standard error", "Multiple R-squared", "Adjusted R-squared"]
    table = Table(["Parameter", "Value"], [list(p) for p in zip(names, vals)])
    table.footer.append(
        f"{model.dependent or 'y'} ~ {model.independent or 'x'}, "
        f"trained on {model.train_window} (n = {model.n})")
    return table


def forecast_table(ft: ForecastTable, fmt: str = "table", raw: bool = False,
                   unit_hint: str = "integer", predictor_hint: str = "raw") -> Table:
    dep = ft.model.dependent or "y"
    ind = ft.model.independent or "x"
    if fmt == "table":
        headers = ["Year", "Month", f"Actual {dep} (A)", f"{ind} (B)", "B * coefficient (C)",
                   "Intercept (D)", "Forecast E = C + D", "Percent error"]
    else:
        headers = ["year", "month", "actual", "predictor", "contribution", "intercept",
                   "forecast", "percent_error"]
    table = Table(headers)
    prev = None
    for row in ft.rows:
        cells = _year_month(row.month, fmt, prev)
        prev = row.month.year
        if raw:
            cells += [fmt_raw(v) for v in (row.actual, row.predictor, row.contribution,
                                           row.intercept_term, row.forecast, row.percent_error)]
        else:
            cells += [fmt_value(row.actual, unit_hint), fmt_value(row.predictor, predictor_hint),
                      f"{row.contribution:.2f}", f"{row.intercept_term:.2f}",
                      fmt_fixed(row.forecast, 0), f"{row.percent_error:.2f}"]
        table.rows.append(cells)
    mpe = ft.mean_percent_error
    table.footer.append(f"mean percent error: {fmt_raw(mpe) if raw else f'{mpe:.2f}'}")
    return table


def plot_rows(s: MonthlySeries, scale: float = 1.0) -> str:
    """``YYYY-MM<TAB>value`` lines for the observed months, values times ``scale``."""
    lines = []
    for month, v in zip(s.months, s.values):
        if not np.isnan(v):
            lines.append(f"{month}\t{fmt_raw(float(v) * scale)}")
    return "\n".join(lines) + "\n"
