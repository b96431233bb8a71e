#!/usr/bin/env python3
"""Curvature of naturally reductive metrics, starting from the block data.

A metric here is a list of positive coefficients against the bi-invariant
background form Q: one for the isotropy complement and one per subalgebra
block.  Ricci curvature then has the same block shape, so everything in this
demo is a handful of numbers.
"""

from natred import (
    MetricCoefficients,
    catalog_lookup,
    make_structure,
    ricci,
    scalar,
    total_dimension,
)


def show(sd, g, label):
    rep = ricci(sd, g)
    print(f"  {label}")
    print(f"    ric_a = {rep.ric_a:.10f}")
    for i, r in enumerate(rep.ric_blocks):
        print(f"    ric_{i + 1} = {r:.10f}")
    print(f"    scalar = {rep.scalar:.10f}")


def main():
    sd = catalog_lookup("so6-diag")
    print(f"structure so6-diag: n = {sd.n}, blocks = "
          f"{[(b.d, b.kappa) for b in sd.blocks]}, dimension {total_dimension(sd)}")
    print()

    print("The bi-invariant metric (all coefficients 1) is Einstein with Ric = Q/4,")
    print(f"so its scalar curvature is d/4 = {total_dimension(sd) / 4}:")
    show(sd, MetricCoefficients(1.0, (1.0, 1.0)), "g = Q")
    print()

    print("Shrinking the block coefficients below the complement's trades Ricci")
    print("curvature between the blocks and the complement:")
    show(sd, MetricCoefficients(45.0, (1.0, 1.0)), "g = (45, [1, 1])")
    print()

    print("Scaling the whole metric by 10 leaves the Ricci coefficients alone and")
    print("divides scalar curvature by 10:")
    show(sd, MetricCoefficients(450.0, (10.0, 10.0)), "g = (450, [10, 10])")
    print()

    sd = make_structure(7, [(3, 0.5), (1, 0.0), (4, 0.3)])
    print("Central one-dimensional blocks (kappa = 0) are fine too:")
    show(sd, MetricCoefficients(2.0, (1.0, 0.5, 3.0)), "mixed structure, g = (2, [1, 0.5, 3])")


if __name__ == "__main__":
    main()
