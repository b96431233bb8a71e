"""Closed-form Ricci and scalar curvature of block-diagonal metrics.

All curvature output is reported as block coefficients relative to the
background form Q, matching how metrics and prescribed tensors are stored.
With x_i = alpha_i / alpha the block and complement coefficients are

    ric_i = (1/4) * (kappa_i * (1 - x_i^2) + x_i^2)
    ric_a = 1/4 - (1/(2n)) * sum_i (x_i - 1) * d_i * (1 - kappa_i)

and the scalar curvature is

    S = -(1/4) sum_i alpha_i d_i (1-kappa_i) / alpha^2
        + (1/2) sum_i d_i (1-kappa_i) / alpha
        + n / (4 alpha)
        + (1/4) sum_i kappa_i d_i / alpha_i.

The complement formula is the isotropy-irreducible specialization; results
are meaningful only under that modeling assumption (see the structure
module's docstring).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import DegenerateTa, InfeasiblePoint, NonPositiveCoefficient, ShapeMismatch
from .structure import MetricCoefficients, PrescribedTensor, StructureData, check_shape


@dataclass(frozen=True)
class CurvatureReport:
    """Ricci coefficients relative to Q plus the scalar curvature."""

    ric_a: float
    ric_blocks: tuple[float, ...]
    scalar: float


def ricci(sd: StructureData, g: MetricCoefficients) -> CurvatureReport:
    """Ricci curvature of g as block coefficients relative to Q."""
    check_shape(sd, g.alphas, "metric")
    alpha = g.alpha_a
    ric_blocks = []
    acc = 0.0
    for b, a_i in zip(sd.blocks, g.alphas):
        x = a_i / alpha
        ric_blocks.append(0.25 * (b.kappa * (1.0 - x * x) + x * x))
        acc += (x - 1.0) * b.d * (1.0 - b.kappa)
    ric_a = 0.25 - 0.5 * acc / sd.n
    return CurvatureReport(ric_a=ric_a, ric_blocks=tuple(ric_blocks), scalar=scalar(sd, g))


def scalar(sd: StructureData, g: MetricCoefficients) -> float:
    """Scalar curvature of g."""
    check_shape(sd, g.alphas, "metric")
    return _scalar_core(sd.n, sd.blocks, g.alpha_a, g.alphas)


def _scalar_core(n, blocks, alpha, alphas) -> float:
    inv_a = 1.0 / alpha
    s = n * 0.25 * inv_a
    for b, a_i in zip(blocks, alphas):
        db = b.d * (1.0 - b.kappa)
        s += db * inv_a * (0.5 - 0.25 * a_i * inv_a)
        if b.kappa > 0.0:
            s += 0.25 * b.kappa * b.d / a_i
    return s


def trace_g(sd: StructureData, g: MetricCoefficients, T: PrescribedTensor) -> float:
    """Trace of T with respect to g: n*t_a/alpha + sum d_i*t_i/alpha_i."""
    check_shape(sd, g.alphas, "metric")
    check_shape(sd, T.ts, "tensor")
    return sd.n * T.t_a / g.alpha_a + sum(
        b.d * t / a for b, t, a in zip(sd.blocks, T.ts, g.alphas)
    )


def ricci_residual(sd: StructureData, g: MetricCoefficients, T: PrescribedTensor):
    """Extract c = ric_a / t_a and the worst block deviation from Ric = c*T.

    Returns (c, residual) where residual = max_i |ric_i / t_i - c|; g solves
    the prescribed-curvature equation exactly when the residual vanishes.
    """
    check_shape(sd, T.ts, "tensor")
    if T.t_a <= 0.0:
        raise DegenerateTa("residual extraction requires t_a > 0")
    rep = ricci(sd, g)
    c = rep.ric_a / T.t_a
    residual = max(abs(r / t - c) for r, t in zip(rep.ric_blocks, T.ts))
    return c, residual


class SliceParams(NamedTuple):
    """Precomputed per-(structure, tensor) constants for the slice kernels.

    ws[i] = d_i * t_i, bs[i] = d_i * (1 - kappa_i), kds[i] = kappa_i * d_i.
    """

    n: int
    n_ta: float
    ws: tuple[float, ...]
    bs: tuple[float, ...]
    kds: tuple[float, ...]
    b_sum: float


def slice_params(sd: StructureData, T: PrescribedTensor) -> SliceParams:
    """Constants of the trace-slice elimination; requires t_a > 0."""
    check_shape(sd, T.ts, "tensor")
    if T.t_a <= 0.0:
        raise DegenerateTa("slice elimination needs t_a > 0; with t_a = 0 the complement "
                           "coefficient is unconstrained by the trace")
    ws = tuple(b.d * t for b, t in zip(sd.blocks, T.ts))
    bs = tuple(b.d * (1.0 - b.kappa) for b in sd.blocks)
    kds = tuple(b.kappa * b.d for b in sd.blocks)
    return SliceParams(sd.n, sd.n * T.t_a, ws, bs, kds, sum(bs))


def _slice_alpha(p: SliceParams, alphas) -> Optional[float]:
    """Complement coefficient forced by unit trace, or None when infeasible."""
    q = 0.0
    for w, a in zip(p.ws, alphas):
        if not a > 0.0:
            return None
        q += w / a
    if not q < 1.0:
        return None
    return p.n_ta / (1.0 - q)


def _slice_value(p: SliceParams, alphas) -> Optional[float]:
    """Scalar curvature on the unit-trace slice, or None when infeasible."""
    q = 0.0
    rest = 0.0
    weighted = 0.0
    for w, b, kd, a in zip(p.ws, p.bs, p.kds, alphas):
        if not a > 0.0:
            return None
        q += w / a
        weighted += b * a
        if kd != 0.0:
            rest += kd / a
    if not q < 1.0:
        return None
    beta = (1.0 - q) / p.n_ta  # 1/alpha
    return -0.25 * beta * beta * weighted + (0.5 * p.b_sum + 0.25 * p.n) * beta + 0.25 * rest


def _slice_value_grad(p: SliceParams, us):
    """Value and log-coordinate gradient of the slice function, or None.

    With beta = 1/alpha = (1 - sum_j w_j/alpha_j) / (n t_a) the chain rule
    gives d beta / d alpha_j = w_j / (n t_a alpha_j^2), so

        dS/d alpha_j = (-(1/2) beta A + (1/2) B + n/4) * d beta/d alpha_j
                       - (1/4) beta^2 b_j - (1/4) kd_j / alpha_j^2,

    where A = sum b_i alpha_i and B = sum b_i, and the gradient with respect
    to u_j = ln alpha_j is alpha_j times that.
    """
    alphas = []
    q = 0.0
    weighted = 0.0
    rest = 0.0
    for w, b, kd, u in zip(p.ws, p.bs, p.kds, us):
        if u > 700.0:  # exp would overflow; the point is far outside any bound box
            return None
        a = math.exp(u)
        if a == 0.0:
            return None
        alphas.append(a)
        q += w / a
        weighted += b * a
        if kd != 0.0:
            rest += kd / a
    if not q < 1.0:
        return None
    beta = (1.0 - q) / p.n_ta
    value = -0.25 * beta * beta * weighted + (0.5 * p.b_sum + 0.25 * p.n) * beta + 0.25 * rest
    common = -0.5 * beta * weighted + 0.5 * p.b_sum + 0.25 * p.n
    grad = []
    for w, b, kd, a in zip(p.ws, p.bs, p.kds, alphas):
        d_alpha = common * w / (p.n_ta * a * a) - 0.25 * beta * beta * b - 0.25 * kd / (a * a)
        grad.append(a * d_alpha)
    return value, grad, alphas, beta


def slice_alpha(sd: StructureData, T: PrescribedTensor, alphas) -> float:
    """Complement coefficient that puts (alpha, alphas) on the unit-trace slice."""
    p = slice_params(sd, T)
    check_shape(sd, alphas, "block coefficients")
    a = _slice_alpha(p, tuple(float(x) for x in alphas))
    if a is None:
        raise InfeasiblePoint(
            "block coefficients violate sum d_i t_i / alpha_i < 1 (or are non-positive)"
        )
    return a


def scalar_on_slice(sd: StructureData, T: PrescribedTensor, alphas) -> float:
    """Scalar curvature restricted to the unit-trace slice.

    The trace constraint determines the complement coefficient,
    1/alpha = (1 - sum d_i t_i / alpha_i) / (n t_a), leaving S a function of
    the block coefficients alone on the open set where the sum is below 1.
    """
    p = slice_params(sd, T)
    check_shape(sd, alphas, "block coefficients")
    alphas = tuple(float(a) for a in alphas)
    for i, a in enumerate(alphas):
        if not a > 0.0:
            raise NonPositiveCoefficient(f"alphas[{i}] must be positive, got {a!r}")
    value = _slice_value(p, alphas)
    if value is None:
        raise InfeasiblePoint(
            "block coefficients violate sum d_i t_i / alpha_i < 1"
        )
    return value


def grad_scalar_on_slice(sd: StructureData, T: PrescribedTensor, u) -> list[float]:
    """Exact gradient of u -> scalar_on_slice(sd, T, exp(u)) in log coordinates.

    See _slice_value_grad for the derivation.
    """
    p = slice_params(sd, T)
    check_shape(sd, u, "log coordinates")
    out = _slice_value_grad(p, tuple(float(x) for x in u))
    if out is None:
        raise InfeasiblePoint("exp(u) violates sum d_i t_i / alpha_i < 1")
    return out[1]
