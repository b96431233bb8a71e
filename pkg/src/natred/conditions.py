"""Solvability conditions and constructive diagnostics for Ric(g) = c*T.

Three inequality tests, all strict:

  * sufficient_condition — guarantees the slice-restricted scalar curvature
    attains a global maximum, hence a solution exists;
  * necessary_condition — its failure certifies that no solution exists;
  * simple_k_solvable — for a single-block structure the two collapse into
    one inequality that is simultaneously necessary and sufficient, with the
    solution unique up to scaling.

The module also exposes the two curve families used to prove the conditions
(one escaping to the scalar-curvature ceiling, one perturbing a candidate
solution inside the slice), the compact-set bounds behind the sufficiency
argument, and the exact solvability interval for the built-in so6-diag
structure with t_a = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .curvature import scalar
from .errors import (
    CurveDomain,
    DegenerateTa,
    NonPositiveCoefficient,
    NonPositiveT1,
    NoSimpleBlocks,
    NotSimpleK,
    ShapeMismatch,
)
from .structure import (
    MetricCoefficients,
    PrescribedTensor,
    StructureData,
    check_shape,
    total_dimension,
    trace_q,
)


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a strict-inequality test: holds iff lhs < rhs.

    witness_index is the block index realizing the extremal ratio the test is
    built on (None only when a test has no such index).  Boundary equality
    yields holds = False; lhs and rhs are reported so callers can detect
    near-boundary instances.
    """

    holds: bool
    lhs: float
    rhs: float
    witness_index: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness_index": self.witness_index,
        }


def max_kappa_ratio_index(sd: StructureData, T: PrescribedTensor) -> int:
    """Index maximizing kappa_i / t_i over blocks with kappa > 0.

    Ties break toward the lowest index so verdicts are reproducible.
    """
    check_shape(sd, T.ts, "tensor")
    best = None
    best_ratio = -1.0
    for i, (b, t) in enumerate(zip(sd.blocks, T.ts)):
        if b.kappa > 0.0:
            ratio = b.kappa / t
            if ratio > best_ratio:
                best = i
                best_ratio = ratio
    if best is None:
        raise NoSimpleBlocks("every block has kappa = 0; the ratio tests are vacuous")
    return best


def scalar_ceiling(sd: StructureData, T: PrescribedTensor) -> float:
    """Supremum kappa_m / (4 t_m) that the slice-restricted scalar curvature
    approaches outside arbitrarily large compact sets.

    For structures with no kappa > 0 block the ceiling degenerates to 0.
    """
    check_shape(sd, T.ts, "tensor")
    try:
        m = max_kappa_ratio_index(sd, T)
    except NoSimpleBlocks:
        return 0.0
    return sd.blocks[m].kappa / (4.0 * T.ts[m])


def sufficient_condition(sd: StructureData, T: PrescribedTensor) -> ConditionVerdict:
    """Existence test: kappa_m * tr_Q(T) / t_m < d + d_m - kappa_m * d_m.

    If it holds, the scalar curvature restricted to the unit-trace slice
    attains a global maximum, which solves Ric(g) = c*T with c > 0.
    """
    m = max_kappa_ratio_index(sd, T)
    b = sd.blocks[m]
    lhs = b.kappa * trace_q(sd, T) / T.ts[m]
    rhs = total_dimension(sd) + b.d - b.kappa * b.d
    return ConditionVerdict(holds=lhs < rhs, lhs=lhs, rhs=rhs, witness_index=m)


def necessary_condition(sd: StructureData, T: PrescribedTensor) -> ConditionVerdict:
    """Obstruction test: n * t_a * max(kappa_i / t_i) < 2 sum d_j(1-kappa_j) + 2s + n.

    Every solution of Ric(g) = c*T satisfies this, so holds = False certifies
    non-existence.  The sum over all blocks already accounts for the central
    ones, since each contributes d_j (1 - kappa_j) = 1.
    """
    m = max_kappa_ratio_index(sd, T)
    lhs = sd.n * T.t_a * sd.blocks[m].kappa / T.ts[m]
    rhs = 2.0 * sum(b.d * (1.0 - b.kappa) for b in sd.blocks) + sd.n
    return ConditionVerdict(holds=lhs < rhs, lhs=lhs, rhs=rhs, witness_index=m)


def simple_k_solvable(sd: StructureData, T: PrescribedTensor) -> ConditionVerdict:
    """Exact solvability for a single-block structure.

    Requires exactly one block, with kappa > 0.  The verdict
    n * t_a * kappa_1 < (2 d_1 (1 - kappa_1) + n) * t_1 is equivalent to both
    the sufficient and the necessary test, and when it holds the solution is
    unique up to scaling.
    """
    check_shape(sd, T.ts, "tensor")
    if sd.r != 1 or sd.s != 0:
        raise NotSimpleK(f"need exactly one block with kappa > 0, got r={sd.r}, s={sd.s}")
    b = sd.blocks[0]
    lhs = sd.n * T.t_a * b.kappa
    rhs = (2.0 * b.d * (1.0 - b.kappa) + sd.n) * T.ts[0]
    return ConditionVerdict(holds=lhs < rhs, lhs=lhs, rhs=rhs, witness_index=0)


def cad_interval_so6(t1: float) -> Optional[tuple[float, float]]:
    """Exact solvability window in t2 for so6-diag with t_a = 1.

    Returns the open interval (lo, hi) such that a solution exists iff
    lo < t2 < hi, or None when the window is empty.  The boundary curves are
    specific to this structure; no such closed form is attempted elsewhere.
    """
    t1 = float(t1)
    if not t1 > 0.0:
        raise NonPositiveT1(f"t1 must be positive, got {t1!r}")
    disc = t1 * t1 + 24.0 * t1 - 3.0
    if disc < 0.0:
        return None
    lo = (12.0 + t1 + math.sqrt(disc)) / 98.0
    hi = (196.0 * t1 * t1 - 48.0 * t1 + 3.0) / (4.0 * t1)
    if lo >= hi:
        return None
    return lo, hi


def sufficient_curve_scalar(sd: StructureData, T: PrescribedTensor, m: int, t: float) -> float:
    """Scalar curvature along the escape curve used in the sufficiency proof.

    The curve sets every coefficient to t except block m, which carries
    phi(t) = d_m t_m t / (t - U) with U = tr_Q(T) - d_m t_m; this keeps the
    g-trace of T equal to 1 for every t > U.  As t grows the value tends to
    the ceiling kappa_m / (4 t_m).
    """
    check_shape(sd, T.ts, "tensor")
    if not 0 <= m < len(sd.blocks):
        raise ShapeMismatch(f"block index {m} out of range for {len(sd.blocks)} blocks")
    u_const = trace_q(sd, T) - sd.blocks[m].d * T.ts[m]
    if not t > u_const:
        raise CurveDomain(f"curve needs t > {u_const}, got {t}")
    phi = sd.blocks[m].d * T.ts[m] * t / (t - u_const)
    alphas = [t] * len(sd.blocks)
    alphas[m] = phi
    return scalar(sd, MetricCoefficients(alpha_a=t, alphas=tuple(alphas)))


def necessary_curve_scalar(
    sd: StructureData, T: PrescribedTensor, g: MetricCoefficients, j: int, t: float
) -> float:
    """Scalar curvature along the slice-preserving perturbation of g.

    Block j is scaled by e^t while the complement coefficient is adjusted to
    f_j(t) = n t_a alpha alpha_j / (n t_a alpha_j + d_j t_j alpha (1 - e^-t)),
    which preserves the g-trace of T; the curve passes through g at t = 0.
    Defined for t > V_j = -ln(1 + n t_a alpha_j / (d_j t_j alpha)).
    """
    check_shape(sd, T.ts, "tensor")
    check_shape(sd, g.alphas, "metric")
    if not 0 <= j < len(sd.blocks):
        raise ShapeMismatch(f"block index {j} out of range for {len(sd.blocks)} blocks")
    if T.t_a <= 0.0:
        raise DegenerateTa("the perturbation curve needs t_a > 0")
    n_ta = sd.n * T.t_a
    alpha = g.alpha_a
    a_j = g.alphas[j]
    w_j = sd.blocks[j].d * T.ts[j]
    v_j = -math.log(1.0 + n_ta * a_j / (w_j * alpha))
    if not t > v_j:
        raise CurveDomain(f"curve needs t > {v_j}, got {t}")
    f_j = n_ta * alpha * a_j / (n_ta * a_j + w_j * alpha * (1.0 - math.exp(-t)))
    alphas = list(g.alphas)
    alphas[j] = a_j * math.exp(t)
    return scalar(sd, MetricCoefficients(alpha_a=f_j, alphas=tuple(alphas)))


def compactness_bounds(sd: StructureData, T: PrescribedTensor, eps: float):
    """Coefficient bounds (gamma_a, gammas) of the compact exhaustion set.

    On the unit-trace slice, any metric with alpha > gamma_a or some
    alpha_j > gammas[j] has scalar curvature below scalar_ceiling + eps.
    """
    check_shape(sd, T.ts, "tensor")
    if T.t_a <= 0.0:
        raise DegenerateTa("the compactness bounds need t_a > 0")
    if not eps > 0.0:
        raise NonPositiveCoefficient(f"eps must be positive, got {eps!r}")
    b_sum = sum(b.d * (1.0 - b.kappa) for b in sd.blocks)
    gamma_a = max(sd.n / (2.0 * eps), b_sum / eps)
    factor = 2.0 * gamma_a * gamma_a / T.t_a * (b_sum / sd.n + 0.5)
    gammas = [factor / (b.d * (1.0 - b.kappa)) for b in sd.blocks]
    return gamma_a, gammas
