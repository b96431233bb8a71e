"""Gate suite: the guarantees the package ships with, one test per criterion.

Each test prints a single ``[PASS]``/``[FAIL]`` line (visible under
``pytest -s``) before asserting, so a full run doubles as a checklist.
Stated tolerances and runtime budgets are part of the contract.
"""

import math
import random
import time

import numpy as np

from natred import (
    MetricCoefficients,
    PrescribedTensor,
    SolveStatus,
    SolverOptions,
    cad_interval_so6,
    catalog_lookup,
    classify,
    compactness_bounds,
    grad_scalar_on_slice,
    make_structure,
    max_kappa_ratio_index,
    maximize_scalar,
    necessary_condition,
    ricci,
    scalar,
    scalar_ceiling,
    scalar_on_slice,
    simple_k_solvable,
    slice_alpha,
    solve_algebraic,
    solve_simple_k,
    sufficient_condition,
    sufficient_curve_scalar,
    trace_g,
)
from oracles import central_diff, frac_ricci, frac_scalar, so6_surface

SO6 = catalog_lookup("so6-diag")
T51 = PrescribedTensor(1.0, (1 / 6, 1 / 6))
T52 = PrescribedTensor(1.0, (1 / 10, 1 / 10))
T53 = PrescribedTensor(1.0, (0.13, 0.16))
T54 = PrescribedTensor(1.0, (2 / 15, 2 / 15))


def gate(num, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}")
    assert ok, f"criterion {num}: {detail}"


def rel_err(value, target):
    return abs(value - target) / abs(target)


def random_structure(rng):
    n = rng.randint(2, 12)
    blocks = []
    for _ in range(rng.randint(1, 4)):
        if rng.random() < 0.25:
            blocks.append((1, 0.0))
        else:
            blocks.append((rng.randint(2, 10), rng.uniform(0.05, 0.9)))
    return make_structure(n, blocks)


def random_metric(rng, sd):
    return MetricCoefficients(
        alpha_a=math.exp(rng.uniform(-1.5, 2.5)),
        alphas=tuple(math.exp(rng.uniform(-1.5, 2.5)) for _ in sd.blocks),
    )


def test_criterion_1_exact_values():
    g = MetricCoefficients(45.0, (1.0, 1.0))
    s_err = rel_err(scalar(SO6, g), 427.0 / 900.0)
    tr_err = abs(trace_g(SO6, g, T54) - 1.0)
    ceil_err = abs(scalar_ceiling(SO6, T54) + 1.0 / 192.0 - 91.0 / 192.0)
    ok = s_err <= 1e-12 and tr_err <= 1e-14 and ceil_err <= 1e-14
    gate(1, ok, f"scalar=427/900 (rel {s_err:.1e}), unit trace (abs {tr_err:.1e}), "
                f"ceiling+1/192=91/192 (abs {ceil_err:.1e})")


def test_criterion_2_condition_verdicts():
    suff_51 = sufficient_condition(SO6, T51).holds
    nec_52 = necessary_condition(SO6, T52).holds
    nec_53 = necessary_condition(SO6, T53).holds
    suff_53 = sufficient_condition(SO6, T53).holds
    ok = suff_51 and not nec_52 and nec_53 and not suff_53
    gate(2, ok, f"sufficient(1/6,1/6)={suff_51}, necessary(1/10,1/10)={nec_52}, "
                f"necessary(0.13,0.16)={nec_53}, sufficient(0.13,0.16)={suff_53}")


def test_criterion_3_reference_classification():
    t0 = time.perf_counter()
    recs = [classify(SO6, T) for T in (T51, T52, T53, T54)]
    elapsed = time.perf_counter() - t0

    statuses = [rec.outcome.status for rec in recs]
    expected = [
        SolveStatus.SOLUTION_FOUND,
        SolveStatus.CERTIFIED_NO_SOLUTION,
        SolveStatus.NO_CRITICAL_POINT,
        SolveStatus.SOLUTION_FOUND,
    ]
    solutions_ok = all(
        rec.outcome.solution.c > 0.0 and rec.outcome.solution.residual < 1e-8
        for rec in (recs[0], recs[3])
    )
    value_ok = recs[3].outcome.diagnostics["value"] > 91.0 / 192.0
    ok = statuses == expected and solutions_ok and value_ok and elapsed < 10.0
    gate(3, ok, f"statuses {[str(s) for s in statuses]}, c>0 and residual<1e-8 on both "
                f"solutions={solutions_ok}, max value {recs[3].outcome.diagnostics['value']:.6f}"
                f">91/192, {elapsed:.1f}s<10s")


def test_criterion_4_cad_sweep():
    t0 = time.perf_counter()
    res = 64
    lo, hi = 0.11, 0.45
    h = (hi - lo) / (res - 1)
    grid = [lo + i * h for i in range(res)]
    grid[-1] = hi

    # polyline along both boundary curves; cells within one spacing are skipped
    samples = 2400
    pts = []
    for i in range(samples):
        t1 = 0.005 + i * (0.6 - 0.005) / (samples - 1)
        interval = cad_interval_so6(t1)
        if interval is not None:
            pts.append((t1, interval[0]))
            pts.append((t1, interval[1]))
    pts_arr = np.array(pts)

    agree = total = 0
    for t1 in grid:
        row_d1 = (pts_arr[:, 0] - t1) ** 2
        interval = cad_interval_so6(t1)
        for t2 in grid:
            if float(np.min(row_d1 + (pts_arr[:, 1] - t2) ** 2)) <= h * h:
                continue
            member = interval is not None and interval[0] < t2 < interval[1]
            out = maximize_scalar(SO6, PrescribedTensor(1.0, (t1, t2)))
            label = out.status is SolveStatus.SOLUTION_FOUND
            total += 1
            agree += label == member
    elapsed = time.perf_counter() - t0

    rate = agree / total
    ok = rate >= 0.99 and elapsed < 300.0
    gate(4, ok, f"solver labels match region membership on {agree}/{total} interior "
                f"cells ({100 * rate:.2f}%), {elapsed:.0f}s<300s")


def test_criterion_5_route_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(5)
    worst_ratio = worst_gnorm = 0.0
    count = 0
    while count < 100:
        t1 = rng.uniform(0.13, 0.45)
        interval = cad_interval_so6(t1)
        if interval is None:
            continue
        lo, hi = interval
        T = PrescribedTensor(1.0, (t1, lo + (hi - lo) * rng.uniform(0.15, 0.85)))

        out = maximize_scalar(SO6, T)
        assert out.status is SolveStatus.SOLUTION_FOUND
        metric = out.solution.metric
        var_ratio = tuple(a / metric.alpha_a for a in metric.alphas)

        roots = solve_algebraic(SO6, T)
        nearest = min(
            roots, key=lambda r: max(abs(a - b) for a, b in zip(r.ratios, var_ratio))
        )
        worst_ratio = max(
            worst_ratio,
            max(abs(a - b) / abs(b) for a, b in zip(nearest.ratios, var_ratio)),
        )

        u = tuple(math.log(a) for a in metric.alphas)
        gnorm = max(abs(gj) for gj in grad_scalar_on_slice(SO6, T, u))
        worst_gnorm = max(worst_gnorm, gnorm)
        count += 1
    elapsed = time.perf_counter() - t0

    ok = worst_ratio <= 1e-6 and worst_gnorm < 1e-8 and elapsed < 120.0
    gate(5, ok, f"ascent and root-finding agree on 100 solvable tensors (worst rel "
                f"{worst_ratio:.1e}<=1e-6), slice gradient norm <= {worst_gnorm:.1e}"
                f"<1e-8, {elapsed:.0f}s<120s")


def test_criterion_6_property_suite():
    rng = random.Random(6)

    # Ricci invariance and scalar 1/lambda scaling under metric rescaling
    scale_ok = True
    for _ in range(100):
        sd = random_structure(rng)
        g = random_metric(rng, sd)
        lam = math.exp(rng.uniform(-2.0, 2.0))
        g_scaled = MetricCoefficients(lam * g.alpha_a, tuple(lam * a for a in g.alphas))
        rep, rep_scaled = ricci(sd, g), ricci(sd, g_scaled)
        pairs = list(zip((rep.ric_a, *rep.ric_blocks), (rep_scaled.ric_a, *rep_scaled.ric_blocks)))
        scale_ok &= all(rel_err(b, a) <= 1e-12 for a, b in pairs)
        scale_ok &= rel_err(rep_scaled.scalar, rep.scalar / lam) <= 1e-12

    # bi-invariant metric: Ric = Q/4 and S = d/4
    bi_ok = True
    for _ in range(50):
        sd = random_structure(rng)
        rep = ricci(sd, MetricCoefficients(1.0, tuple(1.0 for _ in sd.blocks)))
        d = sd.n + sum(b.d for b in sd.blocks)
        bi_ok &= all(abs(v - 0.25) <= 1e-13 for v in (rep.ric_a, *rep.ric_blocks))
        bi_ok &= rel_err(rep.scalar, d / 4.0) <= 1e-13

    # scalar curvature equals its own Ricci contraction
    contract_ok = True
    for _ in range(100):
        sd = random_structure(rng)
        g = random_metric(rng, sd)
        rep = ricci(sd, g)
        contraction = sd.n * rep.ric_a / g.alpha_a + sum(
            b.d * r / a for b, r, a in zip(sd.blocks, rep.ric_blocks, g.alphas)
        )
        contract_ok &= rel_err(contraction, rep.scalar) <= 1e-10

    # analytic slice gradient against central differences at feasible points
    grad_ok = True
    for _ in range(100):
        sd = random_structure(rng)
        ts = tuple(rng.uniform(0.05, 1.5) for _ in sd.blocks)
        T = PrescribedTensor(rng.uniform(0.1, 2.0), ts)
        u = [rng.uniform(1.5, 4.0) + math.log(b.d * t) for b, t in zip(sd.blocks, ts)]
        g_exact = grad_scalar_on_slice(sd, T, u)
        for j in range(len(u)):
            def f(v, j=j):
                w = list(u)
                w[j] = v
                return scalar_on_slice(sd, T, tuple(math.exp(x) for x in w))
            fd = central_diff(f, u[j], 1e-6)
            grad_ok &= abs(g_exact[j] - fd) <= 1e-6 * max(1.0, abs(fd))

    # specialized two-variable surface formula against the general one
    surface_ok = True
    for i in range(50):
        for j in range(50):
            a1 = 1.0 + 9.0 * i / 49.0
            a2 = 1.0 + 9.0 * j / 49.0
            direct = so6_surface(2.0 / 15.0, 2.0 / 15.0, a1, a2)
            surface_ok &= rel_err(scalar_on_slice(SO6, T54, (a1, a2)), direct) <= 1e-12

    ok = scale_ok and bi_ok and contract_ok and grad_ok and surface_ok
    gate(6, ok, f"scaling laws={scale_ok}, bi-invariant identity={bi_ok}, "
                f"contraction={contract_ok}, gradient-vs-FD={grad_ok}, "
                f"two-variable surface formula={surface_ok}")


def test_criterion_7_curve_asymptotics():
    m = max_kappa_ratio_index(SO6, T51)
    ceiling = scalar_ceiling(SO6, T51)
    far = sufficient_curve_scalar(SO6, T51, m, 1e8)
    limit_err = rel_err(far, ceiling)

    # first variation: 4 t^2 dS/dt approaches kappa_m tr_Q T / T_m - d - d_m + d_m kappa_m
    t = 1e6
    slope = central_diff(lambda v: sufficient_curve_scalar(SO6, T51, m, v), t, 1e3)
    slope_err = abs(4.0 * t * t * slope - (-2.25))

    ok = limit_err <= 1e-6 and slope_err <= 1e-3
    gate(7, ok, f"curve value at t=1e8 within {limit_err:.1e}<=1e-6 of the ceiling "
                f"{ceiling}, 4t^2 dS/dt at t=1e6 within {slope_err:.1e}<=1e-3 of -2.25")


def test_criterion_8_single_block_completeness():
    rng = random.Random(8)
    predicted = uniqueness = 0
    solvable = 0
    for _ in range(100):
        sd = make_structure(rng.randint(3, 16), [(rng.randint(3, 15), rng.uniform(0.05, 0.9))])
        t_a = 0.0 if rng.random() < 0.1 else rng.uniform(0.05, 2.0)
        T = PrescribedTensor(t_a, (rng.uniform(0.05, 1.2),))

        verdict = simple_k_solvable(sd, T)
        out = solve_simple_k(sd, T)
        expected = SolveStatus.SOLUTION_FOUND if verdict.holds else SolveStatus.CERTIFIED_NO_SOLUTION
        predicted += out.status is expected

        if verdict.holds and t_a > 0.0:
            solvable += 1
            x = out.diagnostics["x"]
            roots = solve_algebraic(sd, T, SolverOptions(starts=20))
            uniqueness += bool(roots) and all(
                abs(r.ratios[0] - x) <= 1e-6 * abs(x) for r in roots
            )

    ok = predicted == 100 and uniqueness == solvable
    gate(8, ok, f"inequality verdict predicted the solve status on {predicted}/100 "
                f"instances; multi-start roots matched the unique ratio on "
                f"{uniqueness}/{solvable} solvable ones")


def test_criterion_9_escape_bound_sampling():
    eps = 1.0 / 192.0
    gamma_a, gammas = compactness_bounds(SO6, T54, eps)
    bound = 91.0 / 192.0
    ws = [b.d * t for b, t in zip(SO6.blocks, T54.ts)]
    rng = random.Random(9)

    below = outside = 0
    worst = -math.inf
    for i in range(1000):
        if i % 2 == 0:
            # one block coefficient beyond its escape bound
            j = rng.randrange(2)
            alphas = [w * rng.uniform(1.5, 50.0) for w in ws]
            alphas[j] = gammas[j] * 10.0 ** rng.uniform(0.05, 3.0)
        else:
            # trace share q near 1 pushes the complement coefficient out
            q = rng.uniform(0.99, 0.99999)
            split = rng.uniform(0.2, 0.8)
            alphas = [ws[0] / (q * split), ws[1] / (q * (1.0 - split))]
        alpha = slice_alpha(SO6, T54, alphas)
        outside += alpha > gamma_a or any(a > g for a, g in zip(alphas, gammas))
        value = scalar_on_slice(SO6, T54, alphas)
        worst = max(worst, value)
        below += value < bound

    ok = below == 1000 and outside == 1000
    gate(9, ok, f"S < 91/192 on {below}/1000 samples outside the bounds "
                f"(all {outside} verified outside; largest value {worst:.6f})")
