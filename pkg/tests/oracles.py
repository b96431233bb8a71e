"""Independent oracles the test suite compares the library against.

Everything here is implemented from the block-coefficient formulas directly,
in exact rational arithmetic where possible, sharing no code with the
package: curvature in fractions, the specialized two-variable slice formula
for the so6-diag structure, the closed-form first variation along the
block-scaling curve, and a central-difference helper.
"""

from fractions import Fraction


def frac_ricci(n, blocks, alpha, alphas):
    """Ricci coefficients (ric_a, [ric_i]) in exact rational arithmetic.

    blocks is a list of (d, kappa) pairs; all inputs must be Fraction-able.
    """
    alpha = Fraction(alpha)
    ric = []
    acc = Fraction(0)
    for (d, kappa), a in zip(blocks, alphas):
        kappa = Fraction(kappa)
        x = Fraction(a) / alpha
        ric.append(Fraction(1, 4) * (kappa * (1 - x * x) + x * x))
        acc += (x - 1) * d * (1 - kappa)
    ric_a = Fraction(1, 4) - acc / (2 * n)
    return ric_a, ric


def frac_scalar(n, blocks, alpha, alphas):
    """Scalar curvature in exact rational arithmetic."""
    alpha = Fraction(alpha)
    s = Fraction(n, 4) / alpha
    for (d, kappa), a in zip(blocks, alphas):
        kappa = Fraction(kappa)
        a = Fraction(a)
        b = d * (1 - kappa)
        s += -Fraction(1, 4) * a * b / (alpha * alpha) + Fraction(1, 2) * b / alpha
        if kappa > 0:
            s += Fraction(1, 4) * kappa * d / a
    return s


def so6_surface(t1, t2, a1, a2):
    """The specialized two-variable slice formula for the so6-diag structure
    with t_a = 1, written exactly as displayed: all structure constants are
    folded into the numeric coefficients."""
    num = a1 * a2 - 3.0 * t1 * a2 - 3.0 * t2 * a1
    return (
        -num * num * (a1 + a2) / (144.0 * a1 * a1 * a2 * a2)
        + num / (2.0 * a1 * a2)
        + 3.0 / (16.0 * a1)
        + 3.0 / (16.0 * a2)
    )


def necessary_curve_slope(n, blocks, t_a, ts, alpha, alphas, j):
    """Closed-form d/dt at t = 0 of the scalar curvature along the curve that
    scales block j by e^t while the complement coefficient preserves the
    g-trace of T."""
    d_j, kappa_j = blocks[j]
    a_j = alphas[j]
    w_j = d_j * ts[j]
    sum_b_alpha = sum(a * d * (1.0 - k) for (d, k), a in zip(blocks, alphas))
    sum_b = sum(d * (1.0 - k) for d, k in blocks)
    return (
        -w_j * sum_b_alpha / (2.0 * n * t_a * alpha * a_j)
        - a_j * d_j * (1.0 - kappa_j) / (4.0 * alpha * alpha)
        + w_j * sum_b / (2.0 * n * t_a * a_j)
        + w_j / (4.0 * t_a * a_j)
        - kappa_j * d_j / (4.0 * a_j)
    )


def central_diff(f, x, h):
    return (f(x + h) - f(x - h)) / (2.0 * h)
