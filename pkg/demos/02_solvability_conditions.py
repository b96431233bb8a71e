#!/usr/bin/env python3
"""Deciding Ric(g) = cT before running any solver.

Two inequalities bracket the solvable set: a sufficient one (guarantees the
constrained scalar-curvature maximum exists and solves the equation) and a
necessary one (its failure certifies there is no solution at all).  For the
so6-diag structure the exact solvability region is also available in closed
form, as an interval in t2 for each t1.
"""

from natred import (
    PrescribedTensor,
    cad_interval_so6,
    catalog_lookup,
    necessary_condition,
    simple_k_solvable,
    sufficient_condition,
)

TENSORS = [
    ("T = (1, [1/6, 1/6])", PrescribedTensor(1.0, (1 / 6, 1 / 6))),
    ("T = (1, [1/10, 1/10])", PrescribedTensor(1.0, (1 / 10, 1 / 10))),
    ("T = (1, [0.13, 0.16])", PrescribedTensor(1.0, (0.13, 0.16))),
    ("T = (1, [2/15, 2/15])", PrescribedTensor(1.0, (2 / 15, 2 / 15))),
]


def main():
    sd = catalog_lookup("so6-diag")
    print("verdicts on so6-diag (strict inequalities; lhs < rhs means holds):")
    for label, T in TENSORS:
        suff = sufficient_condition(sd, T)
        nec = necessary_condition(sd, T)
        print(f"  {label}")
        print(f"    sufficient: {suff.holds}  ({suff.lhs:.4f} < {suff.rhs:.4f}?)")
        print(f"    necessary:  {nec.holds}  ({nec.lhs:.4f} < {nec.rhs:.4f}?)")
    print()

    print("The gap between the two shows: (0.13, 0.16) passes the necessary test")
    print("but not the sufficient one, so the inequalities alone cannot decide it.")
    print("The exact region settles such cells; solvable t2 interval per t1:")
    for t1 in (0.10, 0.13, 1 / 6, 0.30):
        interval = cad_interval_so6(t1)
        if interval is None:
            print(f"  t1 = {t1:.4f}: empty (no t2 works)")
        else:
            lo, hi = interval
            print(f"  t1 = {t1:.4f}: ({lo:.6f}, {hi:.6f})")
    print("so (0.13, 0.16) is genuinely unsolvable: 0.16 falls above the interval.")
    print()

    print("Single-block structures have one decisive inequality:")
    for name, ts in (("so6-so5", 1.0), ("so6-so5", 2 / 15), ("so7-so6", 0.5)):
        sd1 = catalog_lookup(name)
        verdict = simple_k_solvable(sd1, PrescribedTensor(1.0, (ts,)))
        print(f"  {name}, T = (1, [{ts:.4f}]): solvable = {verdict.holds}")


if __name__ == "__main__":
    main()
