#!/usr/bin/env python3
"""Charting the solvability region of so6-diag over a (t1, t2) grid.

Drives the command-line scan in process: every grid cell records the two
inequality verdicts, membership in the exact region, and what the solver
actually found.  The CSV plus a standalone matplotlib script land in
demos/output/.
"""

import csv
from collections import Counter
from pathlib import Path

from natred.cli import main as cli_main

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    dest = OUT / "region_chart.csv"
    rc = cli_main([
        "scan", "so6-diag",
        "--t1", "0.11:0.45", "--t2", "0.11:0.45",
        "--resolution", "24",
        "--annotate-examples",
        "--out", str(dest),
    ])
    assert rc == 0

    with open(dest, newline="") as fh:
        rows = list(csv.DictReader(fh))

    print(f"scanned {len(rows)} cells into {dest}")
    print(f"  sufficient condition holds: {sum(r['sufficient'] == 'true' for r in rows)}")
    print(f"  necessary condition holds:  {sum(r['necessary'] == 'true' for r in rows)}")
    print(f"  inside the exact region:    {sum(r['cad'] == 'inside' for r in rows)}")
    print(f"  solver outcomes: {dict(Counter(r['solver'] for r in rows))}")

    mismatch = [
        r for r in rows
        if (r["cad"] == "inside") != (r["solver"] == "SolutionFound")
    ]
    print(f"  solver vs exact region disagreements: {len(mismatch)} "
          "(grid points this close to the boundary can land either way)")
    print(f"render with: python3 {OUT / 'region_chart_plot.py'}")


if __name__ == "__main__":
    main()
