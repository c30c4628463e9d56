"""Command-line front end.

Every command computes its full output before writing anything, so a failure
leaves stdout (or the ``--out`` file) untouched and exits with the error's
``exit_code``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .association import ccf, cor_test
from .config import AnalysisConfig, load_config
from .decomposition import COMPONENTS, decompose
from .errors import AnalysisError, OutputError
from .regression import error_table, fit_ols
from .report import (
    FORMATS,
    correlation_table,
    correlogram_table,
    decomposition_table,
    forecast_table,
    plot_rows,
    summary_table,
)
from .series import MonthlySeries, Window, align, window


def _window_arg(text):
    try:
        return Window.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _select(config: AnalysisConfig, name: str, component: str,
            win: Window | None) -> MonthlySeries:
    s = config.load(name)
    if component != "aggregate":
        s = decompose(s).component(component)
    if win is not None:
        s = window(s, *win)
    return s


def cmd_decompose(args, config):
    s = config.load(args.dataset)
    if args.window is not None:
        s = window(s, *args.window)
    comps = COMPONENTS if args.component is None else (args.component,)
    return decomposition_table(decompose(s), args.format, args.raw, comps).render(args.format)


def cmd_correlate(args, config):
    x = _select(config, args.x, args.component, args.window)
    y = _select(config, args.y, args.component, args.window)
    test = cor_test(align(x, y))
    return correlation_table(test, args.raw).render(args.format)


def cmd_ccf(args, config):
    x = _select(config, args.x, args.component, args.window)
    y = _select(config, args.y, args.component, args.window)
    max_lag = config.max_lag if args.max_lag is None else args.max_lag
    return correlogram_table(ccf(align(x, y), max_lag), args.raw).render(args.format)


def cmd_fit(args, config):
    train = args.train or args.window or config.default_train
    test = args.test or config.default_test
    dep = _select(config, args.dependent, args.component, None)
    ind = _select(config, args.on, args.component, None)
    model = fit_ols(dep, ind, train)
    # printed coefficients drive the forecast columns unless --raw
    used = model if args.raw else model.rounded_coefficients()
    ft = error_table(used, dep, ind, test, signed=args.signed_errors,
                     round_forecast=args.round_forecast)
    fc = forecast_table(ft, args.format, args.raw, dep.unit_hint, ind.unit_hint)
    return summary_table(model, args.raw).render(args.format) + "\n" + fc.render(args.format)


def cmd_export_plot_data(args, config):
    out_dir = Path(args.out or ".")
    files = {}
    for name in args.datasets:
        spec = config.dataset(name)
        s = _select(config, name, args.component, args.window)
        text = plot_rows(s, spec.plot_scale)
        if args.format == "csv":
            text = text.replace("\t", ",")
        ext = "csv" if args.format == "csv" else "tsv"
        files[out_dir / f"{name}_{args.component}.{ext}"] = text
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for path, text in files.items():
            path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write plot data to {out_dir}: {exc}") from exc
    return "".join(f"{p}\n" for p in files)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="dataset registry file (default: bundled datasets)")
    common.add_argument("--window", type=_window_arg, metavar="FROM:TO",
                        help="restrict to months FROM..TO, given as YYYY-MM")
    common.add_argument("--out", help="write output to this path instead of stdout")
    common.add_argument("--raw", action="store_true", help="disable all display rounding")
    common.add_argument("--format", choices=FORMATS, default="table")

    def component(p, default="aggregate"):
        p.add_argument("--component", choices=COMPONENTS, default=default)

    parser = argparse.ArgumentParser(
        prog="sectorts",
        description="Monthly index decomposition, association and regression forecasting.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="trend/seasonal/random table")
    p.add_argument("dataset")
    component(p, default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("correlate", parents=[common], help="Pearson correlation test")
    p.add_argument("x")
    p.add_argument("y")
    component(p)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("ccf", parents=[common], help="cross-correlation over lags")
    p.add_argument("x")
    p.add_argument("y")
    component(p)
    p.add_argument("--max-lag", type=int, help="largest lag in months (default from config)")
    p.set_defaults(func=cmd_ccf)

    p = sub.add_parser("fit", parents=[common], help="least-squares fit and forecast table")
    p.add_argument("dependent")
    p.add_argument("--on", required=True, metavar="INDEPENDENT")
    p.add_argument("--train", type=_window_arg, metavar="FROM:TO")
    p.add_argument("--test", type=_window_arg, metavar="FROM:TO")
    p.add_argument("--signed-errors", action="store_true",
                   help="report (E - A) / A * 100 instead of its magnitude")
    p.add_argument("--round-forecast", action="store_true",
                   help="round forecasts to whole numbers before taking errors")
    component(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("export-plot-data", parents=[common],
                       help="one YYYY-MM<TAB>value file per dataset")
    p.add_argument("datasets", nargs="+")
    component(p)
    p.set_defaults(func=cmd_export_plot_data)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        text = args.func(args, config)
        if args.out and args.func is not cmd_export_plot_data:
            try:
                Path(args.out).write_text(text, encoding="utf-8")
            except OSError as exc:
                raise OutputError(f"cannot write {args.out}: {exc}") from exc
        else:
            sys.stdout.write(text)
    except AnalysisError as exc:
        print(f"sectorts: error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
