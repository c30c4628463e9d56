import subprocess
import sys

import pytest

from sectorts.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _config(tmp_path, n, kind="monthly", extra=""):
    (tmp_path / "short.txt").write_text("\n".join(str(100 + i) for i in range(n)) + "\n")
    cfg = tmp_path / "cfg.ini"
    cfg.write_text(
        "[dataset:short]\npath = short.txt\nkind = %s\nstart = 2009-01\nunit = integer\n%s"
        % (kind, extra))
    return cfg


def test_decompose_table(capsys):
    code, out, _ = run(capsys, "decompose", "it")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["Year", "Month", "Aggregate", "Trend", "Seasonal", "Random"]
    assert len(lines) == 89
    july = lines[7].split()
    assert july == ["July", "3500", "3550", "-175", "125"]


def test_decompose_exchange_rate_decimals(capsys):
    code, out, _ = run(capsys, "decompose", "usd_inr", "--format", "tsv")
    assert code == 0
    row = out.splitlines()[7].split("\t")
    assert row == ["2009", "7", "48", "48.3", "0.2", "-0.5"]


def test_decompose_single_component(capsys):
    code, out, _ = run(capsys, "decompose", "cg", "--component", "trend", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "year,month,trend"
    assert lines[1] == "2009,1,"


def test_too_short_series_fails_cleanly(tmp_path, capsys):
    cfg = _config(tmp_path, 23)
    out_file = tmp_path / "out.txt"
    code, out, err = run(capsys, "decompose", "short", "--config", str(cfg), "--out", str(out_file))
    assert code == 9
    assert out == "" and not out_file.exists()
    assert err.startswith("sectorts: error:")


def test_window_then_decompose(capsys):
    code, _, err = run(capsys, "decompose", "it", "--window", "2009-01:2010-10")
    assert code == 9 and "need at least 24" in err


def test_correlate(capsys):
    code, out, _ = run(capsys, "correlate", "it", "djia")
    assert code == 0
    vals = [line.split()[-1] for line in out.splitlines()[1:]]
    assert vals[0] == "26.907" and vals[1] == "86" and vals[3] == "0.945425"
    assert "< 2.2e-16" in out


def test_correlate_window(capsys):
    code, out, _ = run(capsys, "correlate", "cg", "djia", "--window", "2009-01:2014-12")
    assert code == 0
    assert "0.08224673" in out and " 70" in out


def test_ccf_peak_footer(capsys):
    code, out, _ = run(capsys, "ccf", "it", "djia", "--component", "seasonal")
    assert code == 0
    assert "peak (max r): lag -3 months (-0.250 yr), r = 0.8588" in out
    # header, lags -24..24, two peak lines
    assert len(out.splitlines()) == 1 + 49 + 2


def test_ccf_lag_too_large(capsys):
    code, _, _ = run(capsys, "ccf", "it", "djia", "--component", "trend", "--max-lag", "80")
    assert code == 14


def test_fit(capsys):
    code, out, _ = run(capsys, "fit", "nifty", "--on", "cg", "--train", "2014-01:2014-12")
    assert code == 0
    for token in ("3323.79", "0.3041", "323.6 on 10 degrees of freedom", "0.8474", "0.8322"):
        assert token in out
    assert "mean percent error" in out


def test_fit_raw_round_trip(capsys):
    from sectorts.config import load_config
    from sectorts.regression import fit_ols

    code, out, _ = run(capsys, "fit", "it", "--on", "djia", "--raw", "--format", "tsv")
    assert code == 0
    cfg = load_config()
    m = fit_ols(cfg.load("it"), cfg.load("djia"))
    rows = dict(line.split("\t", 1) for line in out.splitlines()[1:6])
    assert float(rows["Intercept"]) == m.intercept
    assert float(rows[f"Coefficient of {m.independent}"]) == m.slope


def test_deterministic(capsys):
    _, first, _ = run(capsys, "fit", "usd_inr", "--on", "it", "--round-forecast")
    _, second, _ = run(capsys, "fit", "usd_inr", "--on", "it", "--round-forecast")
    assert first == second


def test_out_file(tmp_path, capsys):
    target = tmp_path / "c.txt"
    code, out, _ = run(capsys, "correlate", "it", "nifty", "--out", str(target))
    assert code == 0 and out == ""
    assert "0.9609" in target.read_text()


def test_export_plot_data(tmp_path, capsys):
    code, out, _ = run(capsys, "export-plot-data", "it", "usd_inr", "--component", "trend",
                       "--out", str(tmp_path))
    assert code == 0
    usd = (tmp_path / "usd_inr_trend.tsv").read_text().splitlines()
    it = (tmp_path / "it_trend.tsv").read_text().splitlines()
    assert len(usd) == len(it) == 76
    month, value = usd[0].split("\t")
    assert month == "2009-07"
    assert 4000 < float(value) < 6000  # exchange rate scaled by 100


def test_export_unwritable(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, _ = run(capsys, "export-plot-data", "it", "--out", str(blocker / "sub"))
    assert code == 21


def test_unknown_dataset(capsys):
    code, _, err = run(capsys, "correlate", "it", "ftse")
    assert code == 19 and "ftse" in err


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.ini"
    cfg.write_text("[dataset:x]\nkind = monthly\n")
    code, _, _ = run(capsys, "decompose", "x", "--config", str(cfg))
    assert code == 20


def test_daily_dataset(tmp_path, capsys):
    rows = ["date,value"]
    for k in range(30):
        y, m = 2009 + k // 12, k % 12 + 1
        rows += [f"{y}-{m:02d}-03,{100 + k}", f"{y}-{m:02d}-10,{102 + k}"]
    (tmp_path / "d.csv").write_text("\n".join(rows) + "\n")
    cfg = tmp_path / "cfg.ini"
    cfg.write_text("[dataset:d]\npath = d.csv\nkind = daily\nunit = raw\n")
    code, out, _ = run(capsys, "decompose", "d", "--config", str(cfg), "--format", "tsv")
    assert code == 0
    assert out.splitlines()[1].split("\t")[:3] == ["2009", "1", "101"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "sectorts.cli", "correlate", "it", "djia"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "0.945425" in res.stdout


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["fit", "it"])
    assert exc.value.code == 2
