import csv
from pathlib import Path

import pytest

from sectorts.config import load_config
from sectorts.series import MonthStamp

DATA = Path(__file__).parent / "data"

# table number of each published decomposition
DECOMPOSITION_TABLES = {"it": 1, "cg": 2, "djia": 3, "nifty": 4, "usd_inr": 5}


def read_table(number):
    """Published table as a list of dicts; blank cells become None."""
    with open(DATA / f"table{number:02d}.tsv", newline="") as f:
        rows = list(csv.DictReader(f, delimiter="\t"))
    out = []
    for row in rows:
        rec = {"month": MonthStamp(int(row.pop("year")), int(row.pop("month")))}
        rec.update({k: (float(v) if v.strip() else None) for k, v in row.items()})
        out.append(rec)
    return out


@pytest.fixture(scope="session")
def config():
    return load_config()


@pytest.fixture(scope="session")
def bundled(config):
    return {d.name: d.load() for d in config.datasets}
