#!/usr/bin/env python3
"""Render the solvability region chart from region_chart.csv.

Shading: necessary condition (green), sufficient condition (blue); black
contour traces the exact region boundary when present; the four reference tensors are marked in red.

Usage: python region_chart_plot.py [csv-path]
"""
import csv
import sys

import numpy as np
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else 'region_chart.csv'
with open(path, newline="") as fh:
    rows = list(csv.DictReader(fh))

xs = np.unique(np.array([float(r["t1"]) for r in rows]))
ys = np.unique(np.array([float(r["t2"]) for r in rows]))
shape = (xs.size, ys.size)


def layer(key, true_value):
    vals = np.array([1.0 if r[key] == true_value else 0.0 for r in rows])
    return vals.reshape(shape)


fig, ax = plt.subplots(figsize=(6, 6))
extent = (xs[0], xs[-1], ys[0], ys[-1])
ax.imshow(layer("necessary", "true").T, origin="lower", extent=extent,
          cmap="Greens", alpha=0.35, aspect="auto")
ax.imshow(layer("sufficient", "true").T, origin="lower", extent=extent,
          cmap="Blues", alpha=0.35, aspect="auto")
if rows and rows[0].get("cad", "n/a") != "n/a":
    ax.contour(xs, ys, layer("cad", "inside").T, levels=[0.5], colors="black")
if rows and "solver" in rows[0]:
    ax.contour(xs, ys, layer("solver", "SolutionFound").T, levels=[0.5],
               colors="red", linestyles="dotted")
examples = [(1/6, 1/6), (1/10, 1/10), (0.13, 0.16), (2/15, 2/15)]
ax.scatter([p[0] for p in examples], [p[1] for p in examples],
           color="red", zorder=5)
ax.set_xlabel("t1")
ax.set_ylabel("t2")
ax.set_title("solvability regions")
plt.tight_layout()
plt.show()
