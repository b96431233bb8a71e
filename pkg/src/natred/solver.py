"""Solvers for Ric(g) = c*T and whole-instance classification.

Two independent routes find solutions:

  * maximize_scalar — multi-start quasi-Newton ascent of the scalar curvature
    restricted to the unit-trace slice; critical points of that restriction
    are exactly the solutions, so a converged ascent both finds and certifies
    a candidate (up to the residual check);
  * solve_algebraic — damped Newton on the ratio equations
    ric_i(x)/t_i = ric_a(x)/t_a in x_i = alpha_i/alpha, which is the same
    problem with the scaling freedom removed.

They share no code beyond the curvature formulas and serve as mutual checks.
solve_simple_k handles the single-block case exactly, classify bundles the
condition verdicts with a solve into one record.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .conditions import (
    ConditionVerdict,
    cad_interval_so6,
    compactness_bounds,
    necessary_condition,
    scalar_ceiling,
    simple_k_solvable,
    sufficient_condition,
)
from .curvature import (
    _slice_alpha,
    _slice_value_grad,
    ricci,
    ricci_residual,
    scalar,
    slice_params,
    trace_g,
)
from .errors import ConsistencyError, DegenerateTa, NonConvergence
from .structure import (
    MetricCoefficients,
    PrescribedTensor,
    StructureData,
    catalog_lookup,
)

# Divergence probes: a run that leaves the compactness box of every epsilon in
# this list (with gradient still above _ESCAPE_GTOL) is treated as escaping
# toward the scalar-curvature ceiling rather than converging.
_PROBE_EPSILONS = (1e-1, 1e-2, 1e-3)
_ESCAPE_GTOL = 1e-8
_ARMIJO = 1e-4
_MAX_BACKTRACK = 40


class SolveStatus(str, Enum):
    """Result taxonomy; only the first two are certificates."""

    SOLUTION_FOUND = "SolutionFound"
    CERTIFIED_NO_SOLUTION = "CertifiedNoSolution"
    NO_CRITICAL_POINT = "NoCriticalPointDetected"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:  # keep json/printing on the bare label
        return self.value


@dataclass(frozen=True)
class SolverOptions:
    max_iter: int = 10000
    starts: int = 16
    seed: int = 0
    gtol: float = 1e-10
    step_tol: float = 1e-14
    residual_tol: float = 1e-8
    dedup_tol: float = 1e-6

    def __post_init__(self):
        if self.max_iter < 1 or self.starts < 1:
            raise ValueError("max_iter and starts must be at least 1")


@dataclass(frozen=True)
class Solution:
    """A verified solution: Ric(metric) = c * T up to the reported residual."""

    metric: MetricCoefficients
    c: float
    residual: float

    def as_dict(self) -> dict:
        return {
            "alpha_a": self.metric.alpha_a,
            "alphas": list(self.metric.alphas),
            "c": self.c,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    solution: Optional[Solution]
    diagnostics: dict

    def as_dict(self) -> dict:
        return {
            "status": str(self.status),
            "solution": None if self.solution is None else self.solution.as_dict(),
            "diagnostics": self.diagnostics,
        }


@dataclass(frozen=True)
class RatioRoot:
    """Root of the ratio system; c_positive flags the geometrically expected
    sign (c should be positive on a compact simple group)."""

    ratios: tuple[float, ...]
    c: float
    c_positive: bool

    def as_dict(self) -> dict:
        return {"ratios": list(self.ratios), "c": self.c, "c_positive": self.c_positive}


def metric_from_ratios(
    sd: StructureData, T: PrescribedTensor, ratios
) -> MetricCoefficients:
    """Scale the ratio vector x_i = alpha_i/alpha onto the unit-trace slice."""
    if T.t_a <= 0.0:
        raise DegenerateTa("slice normalization requires t_a > 0")
    alpha = sd.n * T.t_a + sum(
        b.d * t / x for b, t, x in zip(sd.blocks, T.ts, ratios)
    )
    return MetricCoefficients(
        alpha_a=alpha, alphas=tuple(x * alpha for x in ratios)
    )


# ---------------------------------------------------------------------------
# Variational route


def _sample_start(rng: random.Random, ws):
    # alpha_i = s_i * d_i t_i with s_i log-uniform in [1.1, 100] is always
    # blockwise feasible; for several blocks the trace sum can still reach 1,
    # so rescale the whole point back into the slice when needed.
    scales = [math.exp(rng.uniform(math.log(1.1), math.log(100.0))) for _ in ws]
    q = sum(1.0 / s for s in scales)
    if q >= 0.95:
        scales = [s * (q / 0.9) for s in scales]
    return [math.log(s * w) for s, w in zip(scales, ws)]


def _outside_box(box, alpha, alphas) -> bool:
    gamma_a, gammas = box
    if alpha > gamma_a:
        return True
    return any(a > g for a, g in zip(alphas, gammas))


def _bfgs_update(H, s, y):
    # inverse-Hessian update for the mirrored minimization of -S;
    # skipped when the curvature pairing is too weak to be trustworthy
    sy = sum(si * yi for si, yi in zip(s, y))
    if sy <= 1e-12:
        return H
    k = len(s)
    rho = 1.0 / sy
    Hy = [sum(H[i][j] * y[j] for j in range(k)) for i in range(k)]
    yHy = sum(yi * hi for yi, hi in zip(y, Hy))
    coeff = rho * rho * yHy + rho
    return [
        [
            H[i][j] - rho * (s[i] * Hy[j] + Hy[i] * s[j]) + coeff * s[i] * s[j]
            for j in range(k)
        ]
        for i in range(k)
    ]


@dataclass
class _Run:
    kind: str  # converged | escaped | stalled | maxiter | infeasible
    u: list
    value: float
    gnorm: float
    iters: int
    alphas: Optional[list] = None
    beta: float = 0.0


def _ascend(p, u0, opts: SolverOptions, boxes) -> _Run:
    """Quasi-Newton ascent of the slice function from log-coordinates u0."""
    out = _slice_value_grad(p, u0)
    if out is None:
        return _Run("infeasible", list(u0), -math.inf, math.inf, 0)
    value, grad, alphas, beta = out
    k = len(u0)
    u = list(u0)
    H = [[1.0 if i == j else 0.0 for j in range(k)] for i in range(k)]
    for it in range(1, opts.max_iter + 1):
        gnorm = math.sqrt(sum(g * g for g in grad))
        if gnorm <= opts.gtol:
            return _Run("converged", u, value, gnorm, it, alphas, beta)
        if gnorm > _ESCAPE_GTOL and all(
            _outside_box(box, 1.0 / beta, alphas) for box in boxes
        ):
            return _Run("escaped", u, value, gnorm, it, alphas, beta)

        d = [sum(H[i][j] * grad[j] for j in range(k)) for i in range(k)]
        dg = sum(di * gi for di, gi in zip(d, grad))
        if dg <= 0.0:  # H lost positivity; fall back to steepest ascent
            H = [[1.0 if i == j else 0.0 for j in range(k)] for i in range(k)]
            d = list(grad)
            dg = gnorm * gnorm

        t = 1.0
        accepted = None
        for _ in range(_MAX_BACKTRACK + 1):
            trial = [ui + t * di for ui, di in zip(u, d)]
            out = _slice_value_grad(p, trial)
            if out is not None and out[0] >= value + _ARMIJO * t * dg:
                accepted = (trial, out)
                break
            t *= 0.5
        if accepted is None:
            kind = "converged" if gnorm <= _ESCAPE_GTOL else "stalled"
            return _Run(kind, u, value, gnorm, it, alphas, beta)

        trial, (new_value, new_grad, alphas, beta) = accepted
        step = [t * di for di in d]
        if math.sqrt(sum(si * si for si in step)) < opts.step_tol:
            kind = "converged" if gnorm <= _ESCAPE_GTOL else "stalled"
            return _Run(kind, trial, new_value, gnorm, it, alphas, beta)
        # y in mirrored (minimization) convention is g_old - g_new
        H = _bfgs_update(H, step, [go - gn for go, gn in zip(grad, new_grad)])
        u, value, grad = trial, new_value, new_grad
    return _Run("maxiter", u, value, math.sqrt(sum(g * g for g in grad)), opts.max_iter, alphas, beta)


def maximize_scalar(
    sd: StructureData, T: PrescribedTensor, opts: Optional[SolverOptions] = None
) -> SolveOutcome:
    """Find a solution of Ric(g) = c*T by maximizing S on the unit-trace slice.

    Runs necessary_condition first: its failure certifies non-existence.
    Otherwise performs opts.starts seeded quasi-Newton ascents in log
    coordinates; any critical point is verified through ricci_residual and
    then sharpened by a short Newton run on the ratio system, which restores
    the precision the value-based line search cannot resolve.  When
    every start instead leaves all the probed compactness boxes, the
    algebraic route is consulted once before declaring no critical point,
    because the slice function can rise along a ridge yet still attain its
    maximum elsewhere.
    """
    opts = opts or SolverOptions()
    p = slice_params(sd, T)  # validates shapes and t_a > 0

    if sd.r > 0:
        nec = necessary_condition(sd, T)
        if not nec.holds:
            return SolveOutcome(
                SolveStatus.CERTIFIED_NO_SOLUTION,
                None,
                {
                    "starts": 0,
                    "iterations": 0,
                    "grad_norm": None,
                    "escaped": False,
                    "reason": "necessary condition failed",
                    "necessary": nec.as_dict(),
                },
            )

    boxes = [compactness_bounds(sd, T, eps) for eps in _PROBE_EPSILONS]
    rng = random.Random(opts.seed)
    runs = []
    for _ in range(opts.starts):
        runs.append(_ascend(p, _sample_start(rng, p.ws), opts, boxes))

    candidates = []
    counts = {"converged": 0, "escaped": 0, "stalled": 0, "maxiter": 0, "infeasible": 0}
    for run in runs:
        if run.kind == "converged":
            alpha = _slice_alpha(p, run.alphas)
            metric = MetricCoefficients(alpha_a=alpha, alphas=tuple(run.alphas))
            c, res = ricci_residual(sd, metric, T)
            if res <= opts.residual_tol and c > 0.0:
                polished = _polish_ratios(sd, T, run.alphas, alpha)
                if polished is not None:
                    c2, res2 = ricci_residual(sd, polished, T)
                    if res2 <= res:
                        metric, c, res = polished, c2, res2
                counts["converged"] += 1
                candidates.append((scalar(sd, metric), metric, c, res, run.gnorm))
                continue
            # a pseudo-critical point on the escape ridge: far outside the
            # probe boxes with a tiny slice gradient but a bad residual
            if all(_outside_box(box, alpha, run.alphas) for box in boxes):
                counts["escaped"] += 1
            else:
                counts["stalled"] += 1
        else:
            counts[run.kind] += 1

    total_iters = sum(run.iters for run in runs)
    best_gnorm = min((run.gnorm for run in runs), default=math.inf)
    diagnostics = {
        "starts": opts.starts,
        "iterations": total_iters,
        "grad_norm": best_gnorm,
        "escaped": counts["escaped"] == opts.starts,
        "run_outcomes": counts,
        "ceiling": scalar_ceiling(sd, T),
        "algebraic_fallback": False,
    }

    if candidates:
        value, metric, c, res, gnorm = max(candidates, key=lambda cand: cand[0])
        if abs(trace_g(sd, metric, T) - 1.0) > 1e-10:
            raise ConsistencyError("solution left the unit-trace slice")
        diagnostics["grad_norm"] = gnorm
        diagnostics["value"] = value
        return SolveOutcome(
            SolveStatus.SOLUTION_FOUND, Solution(metric, c, res), diagnostics
        )

    rescue = _algebraic_rescue(sd, T, opts)
    if rescue is not None:
        metric, c, res, value = rescue
        diagnostics["algebraic_fallback"] = True
        diagnostics["value"] = value
        return SolveOutcome(
            SolveStatus.SOLUTION_FOUND, Solution(metric, c, res), diagnostics
        )

    if counts["escaped"] == opts.starts:
        return SolveOutcome(SolveStatus.NO_CRITICAL_POINT, None, diagnostics)
    return SolveOutcome(SolveStatus.INCONCLUSIVE, None, diagnostics)


def _algebraic_rescue(sd, T, opts):
    """Best verified solution the ratio system can offer, or None."""
    try:
        roots = solve_algebraic(sd, T, opts)
    except NonConvergence:
        return None
    best = None
    for root in roots:
        if not root.c_positive:
            continue
        metric = metric_from_ratios(sd, T, root.ratios)
        c, res = ricci_residual(sd, metric, T)
        if res <= opts.residual_tol and c > 0.0:
            value = scalar(sd, metric)
            if best is None or value > best[3]:
                best = (metric, c, res, value)
    return best


# ---------------------------------------------------------------------------
# Algebraic route


def _ratio_system(sd: StructureData, T: PrescribedTensor):
    """Residual and Jacobian of ric_i(x)/t_i - ric_a(x)/t_a in ratio space."""
    k = len(sd.blocks)
    n = sd.n
    kap = np.array([b.kappa for b in sd.blocks])
    ts = np.array([float(t) for t in T.ts])
    bvec = np.array([b.d * (1.0 - b.kappa) for b in sd.blocks])
    t_a = T.t_a

    def fun(x):
        ric_blocks = 0.25 * (kap + (1.0 - kap) * x * x)
        ric_a = 0.25 - float((x - 1.0) @ bvec) / (2.0 * n)
        return ric_blocks / ts - ric_a / t_a

    jac_rank1 = np.tile(bvec / (2.0 * n * t_a), (k, 1))

    def jac(x):
        return np.diag((1.0 - kap) * x / (2.0 * ts)) + jac_rank1

    return fun, jac


def _polish_ratios(sd, T, alphas, alpha):
    """A few undamped Newton steps on the ratio system, seeded right at a
    near-critical point, so verified ascent results are sharpened to machine
    precision (the ascent itself bottoms out near sqrt(eps) because its line
    search compares scalar-curvature values).  Returns alphas or None."""
    fun, jac = _ratio_system(sd, T)
    x = np.array([a / alpha for a in alphas])
    for _ in range(12):
        fx = fun(x)
        if float(np.max(np.abs(fx))) < 1e-15:
            break
        try:
            step = np.linalg.solve(jac(x), -fx)
        except np.linalg.LinAlgError:
            return None
        x = x + step
        if not bool(np.all(x > 0.0)):
            return None
    if float(np.max(np.abs(fun(x)))) > 1e-12:
        return None
    return metric_from_ratios(sd, T, tuple(float(v) for v in x))


def solve_algebraic(
    sd: StructureData, T: PrescribedTensor, opts: Optional[SolverOptions] = None
) -> list[RatioRoot]:
    """All positive roots of ric_i(x)/t_i = ric_a(x)/t_a found by multi-start
    damped Newton, deduplicated; each carries c = ric_a(x)/t_a.

    The system is polynomial in the ratios x_i = alpha_i/alpha, so Newton may
    pass through or land on points with non-positive components; those roots
    are discarded as non-metric.  Raises NonConvergence only when no start
    converges at all, which is a heuristic negative rather than a certificate.
    """
    opts = opts or SolverOptions()
    p = slice_params(sd, T)  # same preconditions: shapes, t_a > 0
    k = len(sd.blocks)
    n = sd.n
    bvec = np.array([b.d * (1.0 - b.kappa) for b in sd.blocks])
    t_a = T.t_a
    fun, jac = _ratio_system(sd, T)

    rng = random.Random(opts.seed)
    starts = [np.ones(k)]
    for _ in range(opts.starts):
        starts.append(
            np.array(
                [math.exp(rng.uniform(math.log(1e-2), math.log(1e2))) for _ in range(k)]
            )
        )

    roots: list[np.ndarray] = []
    converged_any = False
    for x0 in starts:
        x = x0.copy()
        fx = fun(x)
        fnorm = float(np.max(np.abs(fx)))
        for _ in range(200):
            if fnorm < 1e-12:
                break
            try:
                delta = np.linalg.solve(jac(x), -fx)
            except np.linalg.LinAlgError:
                break
            step = 1.0
            improved = False
            for _ in range(_MAX_BACKTRACK + 1):
                xt = x + step * delta
                ft = fun(xt)
                fn = float(np.max(np.abs(ft)))
                if fn < fnorm:
                    x, fx, fnorm = xt, ft, fn
                    improved = True
                    break
                step *= 0.5
            if not improved:
                break
        if fnorm < 1e-12:
            converged_any = True
            if not any(
                float(np.max(np.abs(x - r))) <= opts.dedup_tol * max(1.0, float(np.max(np.abs(r))))
                for r in roots
            ):
                roots.append(x)

    if not converged_any:
        raise NonConvergence("no Newton start converged on the ratio system")

    out = []
    for x in sorted(roots, key=lambda r: tuple(r)):
        if not bool(np.all(x > 0.0)):
            continue
        ric_a = 0.25 - float((x - 1.0) @ bvec) / (2.0 * n)
        c = ric_a / t_a
        out.append(RatioRoot(ratios=tuple(float(v) for v in x), c=c, c_positive=c > 0.0))
    return out


# ---------------------------------------------------------------------------
# Single-block exact solver


def solve_simple_k(sd: StructureData, T: PrescribedTensor) -> SolveOutcome:
    """Exact solve for a single-block structure (one block, kappa > 0).

    The solvability inequality is decisive here: when it fails the outcome is
    CertifiedNoSolution, and when it holds the ratio equation
    ric_1(x)/t_1 = ric_a(x)/t_a has a unique positive root (the difference is
    strictly increasing in x), found by bisection.  t_a = 0 is allowed: the
    equation degenerates to ric_a(x) = 0, still with a unique root; the
    residual then reports |ric_a| with c = ric_1/t_1.
    """
    verdict = simple_k_solvable(sd, T)  # raises NotSimpleK unless r=1, s=0
    if not verdict.holds:
        return SolveOutcome(
            SolveStatus.CERTIFIED_NO_SOLUTION,
            None,
            {"reason": "single-block solvability inequality failed", "verdict": verdict.as_dict()},
        )

    b = sd.blocks[0]
    t1 = T.ts[0]
    b1 = b.d * (1.0 - b.kappa)

    if T.t_a == 0.0:
        x = 1.0 + sd.n / (2.0 * b1)
        alpha_1 = b.d * t1  # unit g-trace with t_a = 0 pins the block coefficient
        metric = MetricCoefficients(alpha_a=alpha_1 / x, alphas=(alpha_1,))
        rep = ricci(sd, metric)
        c = rep.ric_blocks[0] / t1
        residual = abs(rep.ric_a)
        return SolveOutcome(
            SolveStatus.SOLUTION_FOUND,
            Solution(metric, c, residual),
            {"method": "closed-form", "x": x, "verdict": verdict.as_dict()},
        )

    def h(x: float) -> float:
        ric_1 = 0.25 * (b.kappa + (1.0 - b.kappa) * x * x)
        ric_a = 0.25 - (x - 1.0) * b1 / (2.0 * sd.n)
        return ric_1 / t1 - ric_a / T.t_a

    lo, hi = 0.0, 1.0
    while h(hi) <= 0.0:
        hi *= 2.0
        if hi > 1e30:  # unreachable: h grows quadratically
            raise NonConvergence("failed to bracket the ratio root")
    iters = 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        iters += 1
        if h(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)

    metric = metric_from_ratios(sd, T, (x,))
    c, residual = ricci_residual(sd, metric, T)
    return SolveOutcome(
        SolveStatus.SOLUTION_FOUND,
        Solution(metric, c, residual),
        {"method": "bisection", "iterations": iters, "x": x, "verdict": verdict.as_dict()},
    )


# ---------------------------------------------------------------------------
# Classification


_SO6_DIAG = catalog_lookup("so6-diag")


@dataclass(frozen=True)
class ClassifyRecord:
    sufficient: ConditionVerdict
    necessary: ConditionVerdict
    outcome: SolveOutcome
    cad: Optional[str]  # inside | outside | empty, None when not applicable

    def as_dict(self) -> dict:
        return {
            "sufficient": self.sufficient.as_dict(),
            "necessary": self.necessary.as_dict(),
            "outcome": self.outcome.as_dict(),
            "cad": self.cad,
        }


def cad_verdict_so6(T: PrescribedTensor) -> str:
    """Membership of (t1, t2) in the exact so6-diag solvability region.

    Tensors with t_a != 1 are scaled to t_a = 1 first; solvability is
    invariant under that scaling.
    """
    t1, t2 = T.ts[0] / T.t_a, T.ts[1] / T.t_a
    interval = cad_interval_so6(t1)
    if interval is None:
        return "empty"
    lo, hi = interval
    return "inside" if lo < t2 < hi else "outside"


def classify(
    sd: StructureData, T: PrescribedTensor, opts: Optional[SolverOptions] = None
) -> ClassifyRecord:
    """Both condition verdicts, a solve, and (for the so6-diag structure) the
    exact region membership, cross-checked for internal consistency.

    Raises ConsistencyError when the pieces contradict each other, e.g. the
    sufficient condition holds but no solution was found, or a solution was
    found despite the necessary condition failing.
    """
    sufficient = sufficient_condition(sd, T)
    necessary = necessary_condition(sd, T)
    outcome = maximize_scalar(sd, T, opts)
    cad = cad_verdict_so6(T) if sd == _SO6_DIAG and T.t_a > 0.0 else None

    if sufficient.holds and outcome.status is not SolveStatus.SOLUTION_FOUND:
        raise ConsistencyError(
            f"sufficient condition holds but solver returned {outcome.status}"
        )
    if outcome.status is SolveStatus.CERTIFIED_NO_SOLUTION and sufficient.holds:
        raise ConsistencyError("certified no solution contradicts the sufficient condition")
    if outcome.status is SolveStatus.SOLUTION_FOUND and not necessary.holds:
        raise ConsistencyError("found a solution although the necessary condition fails")
    return ClassifyRecord(sufficient, necessary, outcome, cad)
