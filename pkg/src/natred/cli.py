"""Command-line frontend.

Subcommands:

  check     condition verdicts for one configured instance (JSON)
  solve     full classification of one instance, exit code by outcome (JSON)
  scan      solvability region chart over a (t1, t2) grid (CSV + plot script)
  surface   slice scalar-curvature samples over an (alpha_1, alpha_2) grid
  catalog   built-in structures (JSON)

Configs are single JSON documents

    {"structure": {...} | "catalog-name",
     "tensor": {"t_a": ..., "ts": [...]},
     "solver_opts": {...}}

where any numeric leaf may be an exact rational string such as "2/15".
Grid CSV output uses '.' as the decimal separator and 17 significant digits,
and is byte-identical across runs for a fixed config and seed.  Plot scripts
are emitted next to --out as standalone files; nothing is rendered in
process.  NATRED_THREADS caps the scan worker count.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import sys
from pathlib import Path

from .conditions import necessary_condition, simple_k_solvable, sufficient_condition
from .curvature import scalar_on_slice
from .errors import InfeasiblePoint, NatredError
from .solver import (
    SolveStatus,
    SolverOptions,
    cad_verdict_so6,
    classify,
    maximize_scalar,
)
from .structure import (
    PrescribedTensor,
    StructureData,
    catalog_lookup,
    catalog_names,
    parse_real,
    structure_from_dict,
    tensor_from_dict,
    total_dimension,
)

_SO6_DIAG = catalog_lookup("so6-diag")

_OPT_FIELDS = {
    "max_iter": int,
    "starts": int,
    "seed": int,
    "gtol": float,
    "step_tol": float,
    "residual_tol": float,
    "dedup_tol": float,
}


def _fmt(x: float) -> str:
    return "%.17g" % float(x)


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_range(spec: str, name: str, positive: bool = True) -> tuple[float, float]:
    parts = spec.split(":")
    if len(parts) != 2:
        raise NatredError(f"--{name} must look like LO:HI, got {spec!r}")
    lo, hi = (parse_real(p) for p in parts)
    if not lo < hi:
        raise NatredError(f"--{name}: need LO < HI, got {spec!r}")
    if positive and not lo > 0.0:
        raise NatredError(f"--{name}: range must be positive, got {spec!r}")
    return lo, hi


def _grid(lo: float, hi: float, resolution: int) -> list[float]:
    if resolution < 2:
        raise NatredError(f"resolution must be at least 2, got {resolution}")
    step = (hi - lo) / (resolution - 1)
    values = [lo + i * step for i in range(resolution)]
    values[-1] = hi  # pin the endpoint against accumulated rounding
    return values


def _opts_from_config(obj, seed_override=None) -> SolverOptions:
    if obj is None:
        obj = {}
    if not isinstance(obj, dict):
        raise NatredError(f"solver_opts must be an object, got {obj!r}")
    unknown = sorted(set(obj) - set(_OPT_FIELDS))
    if unknown:
        raise NatredError(f"unknown solver_opts fields: {', '.join(unknown)}")
    kwargs = {}
    for key, value in obj.items():
        if _OPT_FIELDS[key] is int:
            if isinstance(value, bool) or not isinstance(value, int):
                raise NatredError(f"solver_opts.{key} must be an integer, got {value!r}")
            kwargs[key] = value
        else:
            kwargs[key] = parse_real(value)
    if seed_override is not None:
        kwargs["seed"] = seed_override
    try:
        return SolverOptions(**kwargs)
    except ValueError as exc:
        raise NatredError(str(exc)) from exc


def _load_config(path: str, seed_override=None):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise NatredError(f"cannot read config {path!r}: {exc}")
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NatredError(
            f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}"
        )
    if not isinstance(obj, dict):
        raise NatredError(f"{path}: config must be a JSON object")
    unknown = sorted(set(obj) - {"structure", "tensor", "solver_opts"})
    if unknown:
        raise NatredError(f"{path}: unknown config fields: {', '.join(unknown)}")
    for field in ("structure", "tensor"):
        if field not in obj:
            raise NatredError(f"{path}: config is missing the {field!r} field")
    sd = structure_from_dict(obj["structure"])
    T = tensor_from_dict(obj["tensor"])
    opts = _opts_from_config(obj.get("solver_opts"), seed_override)
    return sd, T, opts


def _structure_dict(sd: StructureData) -> dict:
    return {
        "n": sd.n,
        "blocks": [{"d": b.d, "kappa": b.kappa} for b in sd.blocks],
        "dimension": total_dimension(sd),
        "r": sd.r,
        "s": sd.s,
    }


def _json_out(payload: dict, out: str | None) -> None:
    _emit(json.dumps(payload, indent=2) + "\n", out)


# ---------------------------------------------------------------------------
# check / solve


def cmd_check(args) -> int:
    sd, T, _ = _load_config(args.config)
    report = {
        "structure": _structure_dict(sd),
        "tensor": {"t_a": T.t_a, "ts": list(T.ts)},
        "sufficient": sufficient_condition(sd, T).as_dict(),
        "necessary": necessary_condition(sd, T).as_dict(),
        "simple_k": (
            simple_k_solvable(sd, T).as_dict() if sd.r == 1 and sd.s == 0 else None
        ),
        "cad": cad_verdict_so6(T) if sd == _SO6_DIAG and T.t_a > 0.0 else None,
    }
    _json_out(report, args.out)
    return 0


def cmd_solve(args) -> int:
    sd, T, opts = _load_config(args.config, seed_override=args.seed)
    record = classify(sd, T, opts)
    payload = {"structure": _structure_dict(sd), "tensor": {"t_a": T.t_a, "ts": list(T.ts)}}
    payload.update(record.as_dict())
    _json_out(payload, args.out)
    if record.outcome.status in (SolveStatus.SOLUTION_FOUND, SolveStatus.CERTIFIED_NO_SOLUTION):
        return 0
    return 1


# ---------------------------------------------------------------------------
# scan


def _scan_row(payload):
    sd, t1, t2_values, no_solve, is_so6, opts = payload
    lines = []
    for t2 in t2_values:
        T = PrescribedTensor(t_a=1.0, ts=(t1, t2))
        fields = [
            _fmt(t1),
            _fmt(t2),
            _bool(sufficient_condition(sd, T).holds),
            _bool(necessary_condition(sd, T).holds),
            cad_verdict_so6(T) if is_so6 else "n/a",
        ]
        if not no_solve:
            fields.append(str(maximize_scalar(sd, T, opts).status))
        lines.append(",".join(fields))
    return lines


def _worker_count(n_tasks: int) -> int:
    env = os.environ.get("NATRED_THREADS")
    if env is None:
        cap = os.cpu_count() or 1
    else:
        try:
            cap = int(env)
        except ValueError:
            raise NatredError(f"NATRED_THREADS must be an integer, got {env!r}")
        if cap < 1:
            raise NatredError(f"NATRED_THREADS must be positive, got {env!r}")
    return max(1, min(cap, n_tasks))


_SCAN_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Render the solvability region chart from %(csv)s.

Shading: necessary condition (green), sufficient condition (blue); black
contour traces the exact region boundary when present%(dots_note)s.

Usage: python %(script)s [csv-path]
"""
import csv
import sys

import numpy as np
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else %(csv)r
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
%(dots)sax.set_xlabel("t1")
ax.set_ylabel("t2")
ax.set_title("solvability regions")
plt.tight_layout()
plt.show()
'''

_SCAN_DOTS = (
    "examples = [(1/6, 1/6), (1/10, 1/10), (0.13, 0.16), (2/15, 2/15)]\n"
    'ax.scatter([p[0] for p in examples], [p[1] for p in examples],\n'
    '           color="red", zorder=5)\n'
)


def _plot_path(out: str) -> str:
    p = Path(out)
    return str(p.with_name(p.stem + "_plot.py"))


def cmd_scan(args) -> int:
    sd = catalog_lookup(args.structure)
    if len(sd.blocks) != 2:
        raise NatredError(
            f"scan needs a two-block structure, {args.structure!r} has {len(sd.blocks)}"
        )
    is_so6 = sd == _SO6_DIAG
    if args.annotate_examples and not is_so6:
        raise NatredError("--annotate-examples applies to so6-diag only")
    lo1, hi1 = _parse_range(args.t1, "t1")
    lo2, hi2 = _parse_range(args.t2, "t2")
    t1_grid = _grid(lo1, hi1, args.resolution)
    t2_grid = _grid(lo2, hi2, args.resolution)
    opts = SolverOptions(seed=args.seed if args.seed is not None else 0)

    payloads = [
        (sd, t1, t2_grid, args.no_solve, is_so6, opts) for t1 in t1_grid
    ]
    workers = _worker_count(len(payloads))
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            chunks = pool.map(_scan_row, payloads)
    else:
        chunks = [_scan_row(p) for p in payloads]

    header = "t1,t2,sufficient,necessary,cad"
    if not args.no_solve:
        header += ",solver"
    lines = [header]
    for chunk in chunks:  # row-major in t1, then t2; workers never reorder
        lines.extend(chunk)
    _emit("\n".join(lines) + "\n", args.out)

    if args.out is not None:
        plot_path = _plot_path(args.out)
        Path(plot_path).write_text(
            _SCAN_PLOT_TEMPLATE
            % {
                "csv": Path(args.out).name,
                "script": Path(plot_path).name,
                "dots": _SCAN_DOTS if args.annotate_examples else "",
                "dots_note": (
                    "; the four reference tensors are marked in red"
                    if args.annotate_examples
                    else ""
                ),
            }
        )
    return 0


# ---------------------------------------------------------------------------
# surface


_SURFACE_PLOT_TEMPLATE = '''#!/usr/bin/env python3
"""Render the slice scalar-curvature surface from %(csv)s.

Empty S cells (infeasible points) appear blank.

Usage: python %(script)s [csv-path]
"""
import csv
import sys

import numpy as np
import matplotlib.pyplot as plt

path = sys.argv[1] if len(sys.argv) > 1 else %(csv)r
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
'''


def cmd_surface(args) -> int:
    sd, T, _ = _load_config(args.config)
    if len(sd.blocks) != 2:
        raise NatredError(
            f"surface needs a two-block structure, this one has {len(sd.blocks)}"
        )
    lo1, hi1 = _parse_range(args.a1, "a1")
    lo2, hi2 = _parse_range(args.a2, "a2")
    a1_grid = _grid(lo1, hi1, args.resolution)
    a2_grid = _grid(lo2, hi2, args.resolution)

    lines = ["alpha1,alpha2,S"]
    for a1 in a1_grid:
        for a2 in a2_grid:
            try:
                s_field = _fmt(scalar_on_slice(sd, T, (a1, a2)))
            except InfeasiblePoint:
                s_field = ""
            lines.append(f"{_fmt(a1)},{_fmt(a2)},{s_field}")
    _emit("\n".join(lines) + "\n", args.out)

    if args.out is not None:
        plot_path = _plot_path(args.out)
        Path(plot_path).write_text(
            _SURFACE_PLOT_TEMPLATE
            % {"csv": Path(args.out).name, "script": Path(plot_path).name}
        )
    return 0


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args) -> int:
    payload = [
        dict(name=name, **_structure_dict(catalog_lookup(name)))
        for name in catalog_names()
    ]
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="natred",
        description="Prescribed Ricci curvature on naturally reductive metrics: "
        "condition checks, solvers, region scans, surface sampling.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="condition verdicts for a config")
    p.add_argument("--config", required=True, help="JSON config path")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="classify an instance and solve it")
    p.add_argument("--config", required=True, help="JSON config path")
    p.add_argument("--out", help="write the JSON report here instead of stdout")
    p.add_argument("--seed", type=int, help="override the solver seed")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("scan", help="region chart CSV over a (t1, t2) grid with t_a = 1")
    p.add_argument(
        "structure",
        nargs="?",
        default="so6-diag",
        help="catalog name of a two-block structure (default: so6-diag)",
    )
    p.add_argument("--t1", default="0.05:0.45", help="t1 range LO:HI")
    p.add_argument("--t2", default="0.05:0.45", help="t2 range LO:HI")
    p.add_argument("--resolution", type=int, default=64, help="grid points per axis")
    p.add_argument(
        "--no-solve",
        action="store_true",
        help="skip the solver column for a fast condition-only chart",
    )
    p.add_argument(
        "--annotate-examples",
        action="store_true",
        help="mark the four reference tensors in the emitted plot script (so6-diag)",
    )
    p.add_argument("--seed", type=int, help="solver seed for the grid cells")
    p.add_argument("--out", help="CSV path; a companion *_plot.py is written next to it")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("surface", help="sample the slice scalar curvature on a grid")
    p.add_argument("--config", required=True, help="JSON config path")
    p.add_argument("--a1", default="0.5:8", help="alpha_1 range LO:HI")
    p.add_argument("--a2", default="0.5:8", help="alpha_2 range LO:HI")
    p.add_argument("--resolution", type=int, default=64, help="grid points per axis")
    p.add_argument("--out", help="CSV path; a companion *_plot.py is written next to it")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("catalog", help="list the built-in structures")
    p.add_argument("--out", help="write the JSON list here instead of stdout")
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NatredError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
