#!/usr/bin/env python3
"""Regenerates tests/data/adf_oracle.csv from the reference ADF implementation.

Usage:
    build/tests/tendex_make_golden adf-series /tmp/adf_fixtures
    python3 scripts/gen_adf_oracle.py /tmp/adf_fixtures tests/data/adf_oracle.csv

The fixture series come from the library's own deterministic generators, so
the t-statistics and p-values below correspond exactly to the series the
tests regenerate in-process. Reference: statsmodels adfuller with
regression='ct', maxlag=1, autolag=None.
"""

import csv
import pathlib
import sys

import numpy as np
from statsmodels.tsa.stattools import adfuller


def main() -> None:
    if len(sys.argv) != 3:
        sys.exit(__doc__)
    fixture_dir = pathlib.Path(sys.argv[1])
    out_path = pathlib.Path(sys.argv[2])

    rows = []
    for kind in ("wn", "rw"):
        for seed in range(1, 21):
            path = fixture_dir / f"{kind}_{seed:02d}.csv"
            values = np.loadtxt(path, delimiter=",", skiprows=1, usecols=1)
            t_stat, p_value, *_ = adfuller(values, maxlag=1, regression="ct", autolag=None)
            rows.append((kind, seed, repr(float(t_stat)), repr(float(p_value))))

    with out_path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["kind", "seed", "t_stat", "p_value"])
        writer.writerows(rows)
    print(f"wrote {out_path} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
