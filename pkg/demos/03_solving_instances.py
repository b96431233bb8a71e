#!/usr/bin/env python3
"""Solving Ric(g) = cT two independent ways and cross-checking.

The variational route maximizes scalar curvature on the unit-trace slice
(critical points are exactly the solutions); the algebraic route finds roots
of the ratio system directly.  classify() packages the verdicts, the solve,
and the exact-region membership into one record.
"""

from natred import (
    PrescribedTensor,
    SolveStatus,
    catalog_lookup,
    classify,
    solve_algebraic,
    solve_simple_k,
)

TENSORS = [
    ("T = (1, [1/6, 1/6])", PrescribedTensor(1.0, (1 / 6, 1 / 6))),
    ("T = (1, [1/10, 1/10])", PrescribedTensor(1.0, (1 / 10, 1 / 10))),
    ("T = (1, [0.13, 0.16])", PrescribedTensor(1.0, (0.13, 0.16))),
    ("T = (1, [2/15, 2/15])", PrescribedTensor(1.0, (2 / 15, 2 / 15))),
]


def main():
    sd = catalog_lookup("so6-diag")
    for label, T in TENSORS:
        rec = classify(sd, T)
        out = rec.outcome
        print(f"{label}: {out.status} (exact region: {rec.cad})")
        if out.status is SolveStatus.SOLUTION_FOUND:
            sol = out.solution
            print(f"  metric = ({sol.metric.alpha_a:.8f}, "
                  f"{[round(a, 8) for a in sol.metric.alphas]})")
            print(f"  c = {sol.c:.12f}, residual = {sol.residual:.2e}")
        print()

    T = TENSORS[0][1]
    print("cross-check: every positive root of the ratio system, independently")
    print("of the ascent above (x_i = alpha_i / alpha):")
    for root in solve_algebraic(sd, T):
        print(f"  x = {[round(x, 12) for x in root.ratios]}, c = {root.c:.12f}")
    print()

    print("single-block structures solve exactly (one quadratic in x):")
    for name, t1 in (("so6-so5", 1.0), ("so7-so6", 0.5)):
        sd1 = catalog_lookup(name)
        out = solve_simple_k(sd1, PrescribedTensor(1.0, (t1,)))
        print(f"  {name}, T = (1, [{t1}]): {out.status}", end="")
        if out.status is SolveStatus.SOLUTION_FOUND:
            print(f", x = {out.diagnostics['x']:.10f}, c = {out.solution.c:.10f}")
        else:
            print()


if __name__ == "__main__":
    main()
