#!/usr/bin/env python3
"""Render the slice scalar-curvature surface from surface_solvable.csv.

Empty S cells (infeasible points) appear blank.

Usage: python surface_solvable_plot.py [csv-path]
"""
import csv
import sys

import numpy as np
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else 'surface_solvable.csv'
with open(path, newline="") as fh:
    rows = list(csv.DictReader(fh))

xs = np.unique(np.array([float(r["alpha1"]) for r in rows]))
ys = np.unique(np.array([float(r["alpha2"]) for r in rows]))
s = np.array([float(r["S"]) if r["S"] else np.nan for r in rows])
grid = s.reshape(xs.size, ys.size)

fig, ax = plt.subplots(figsize=(6, 5))
mesh = ax.pcolormesh(xs, ys, grid.T, shading="nearest")
fig.colorbar(mesh, ax=ax, label="S")
ax.set_xlabel("alpha_1")
ax.set_ylabel("alpha_2")
ax.set_title("scalar curvature on the unit-trace slice")
plt.tight_layout()
plt.show()
