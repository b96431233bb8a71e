"""Block-coefficient data model for naturally reductive metrics.

Everything in this package is expressed relative to a fixed bi-invariant
background inner product Q on the Lie algebra.  A structure records the
dimension n of the isotropy complement together with one (dimension, kappa)
pair per orthogonal block of the isotropy subalgebra, where kappa in [0, 1)
compares the block's own Killing form to Q.  Metrics and prescribed tensors
are then plain coefficient vectors: one positive number per block plus one
for the complement.  Q itself is the all-ones coefficient vector and is never
materialized as a matrix.

Results are meaningful under the modeling assumption that the isotropy action
on the complement is irreducible; the library does not (and cannot, from this
data) verify that assumption, nor that the ambient algebra is simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    CentralBlockNotOneDim,
    EmptyStructure,
    KappaOutOfRange,
    NonPositiveCoefficient,
    ShapeMismatch,
    UnknownCatalogEntry,
)


@dataclass(frozen=True)
class Block:
    """One orthogonal summand of the isotropy algebra.

    d is the block dimension; kappa is the Casimir constant of the block,
    zero exactly for central (one-dimensional) summands.
    """

    d: int
    kappa: float


@dataclass(frozen=True)
class StructureData:
    """Abstract structure of a homogeneous pair: complement dimension and blocks.

    Validation happens on construction, so any StructureData in circulation
    satisfies the invariants: n >= 1, at least one block, each block has
    d >= 1 and 0 <= kappa < 1, and kappa = 0 forces d = 1.
    """

    n: int
    blocks: tuple[Block, ...]

    def __post_init__(self):
        if not self.blocks:
            raise EmptyStructure("structure needs at least one block")
        if int(self.n) != self.n or self.n < 1:
            raise EmptyStructure(f"complement dimension must be a positive integer, got {self.n!r}")
        for i, b in enumerate(self.blocks):
            if int(b.d) != b.d or b.d < 1:
                raise EmptyStructure(f"block {i}: dimension must be a positive integer, got {b.d!r}")
            if not 0.0 <= b.kappa < 1.0:
                raise KappaOutOfRange(f"block {i}: kappa must lie in [0, 1), got {b.kappa!r}")
            if b.kappa == 0.0 and b.d != 1:
                raise CentralBlockNotOneDim(f"block {i}: kappa = 0 requires d = 1, got d = {b.d}")

    @property
    def r(self) -> int:
        """Number of blocks with kappa > 0."""
        return sum(1 for b in self.blocks if b.kappa > 0.0)

    @property
    def s(self) -> int:
        """Number of central blocks (kappa = 0)."""
        return sum(1 for b in self.blocks if b.kappa == 0.0)

    @property
    def k(self) -> int:
        """Total block count r + s."""
        return len(self.blocks)


@dataclass(frozen=True)
class MetricCoefficients:
    """A naturally reductive metric as positive coefficients relative to Q."""

    alpha_a: float
    alphas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "alpha_a", float(self.alpha_a))
        if not self.alpha_a > 0.0:
            raise NonPositiveCoefficient(f"alpha_a must be positive, got {self.alpha_a!r}")
        for i, a in enumerate(self.alphas):
            if not a > 0.0:
                raise NonPositiveCoefficient(f"alphas[{i}] must be positive, got {a!r}")


@dataclass(frozen=True)
class PrescribedTensor:
    """Target tensor as coefficients relative to Q.

    Block coefficients must be strictly positive (the equation cannot hold
    otherwise); t_a = 0 is admitted as the degenerate complement case.
    """

    t_a: float
    ts: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "ts", tuple(float(t) for t in self.ts))
        object.__setattr__(self, "t_a", float(self.t_a))
        if self.t_a < 0.0:
            raise NonPositiveCoefficient(f"t_a must be nonnegative, got {self.t_a!r}")
        for i, t in enumerate(self.ts):
            if not t > 0.0:
                raise NonPositiveCoefficient(f"ts[{i}] must be positive, got {t!r}")


def make_structure(n, blocks) -> StructureData:
    """Validate raw (n, [(d, kappa), ...]) input into a StructureData."""
    return StructureData(n=n, blocks=tuple(Block(d=d, kappa=float(kappa)) for d, kappa in blocks))


# Built-in structures.  so6-diag is SO(6) over the diagonal SO(3) x SO(3),
# the pair every closed-form region test in this package specializes to.
# The so(n-1) < so(n) entries use the standard Killing-form ratio
# kappa = (n-3)/(n-2) with complement dimension n-1.
_CATALOG: dict[str, StructureData] = {
    "so6-diag": make_structure(9, [(3, 0.25), (3, 0.25)]),
    "so6-so5": make_structure(5, [(10, 3.0 / 4.0)]),
    "so7-so6": make_structure(6, [(15, 4.0 / 5.0)]),
}


def catalog_names() -> list[str]:
    """Names of the built-in structures, sorted."""
    return sorted(_CATALOG)


def catalog_lookup(name: str) -> StructureData:
    """Return a built-in structure by name."""
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownCatalogEntry(
            f"unknown structure {name!r}; built-ins: {', '.join(catalog_names())}"
        ) from None


def total_dimension(sd: StructureData) -> int:
    """Dimension of the whole algebra: n plus the sum of block dimensions."""
    return sd.n + sum(b.d for b in sd.blocks)


def check_shape(sd: StructureData, coeffs, what: str = "coefficients"):
    if len(coeffs) != len(sd.blocks):
        raise ShapeMismatch(
            f"{what}: expected {len(sd.blocks)} block entries, got {len(coeffs)}"
        )


def trace_q(sd: StructureData, T: PrescribedTensor) -> float:
    """Trace of T against the background form: n*t_a + sum of d_i*t_i."""
    check_shape(sd, T.ts, "tensor")
    return sd.n * T.t_a + sum(b.d * t for b, t in zip(sd.blocks, T.ts))


def parse_real(value) -> float:
    """Convert a JSON scalar to float; strings are parsed exactly as rationals.

    Accepts ints, floats, and strings like "2/15" or "0.25".
    """
    if isinstance(value, bool):
        raise NonPositiveCoefficient(f"expected a number, got {value!r}")
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, str):
        try:
            return float(Fraction(value.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise NonPositiveCoefficient(f"cannot parse {value!r} as a rational number") from exc
    raise NonPositiveCoefficient(f"expected a number or rational string, got {value!r}")


def structure_from_dict(obj) -> StructureData:
    """Build a structure from the JSON input schema.

    Either a catalog name (string) or an object with fields
    ``n`` (integer) and ``blocks`` (array of ``{d, kappa}``); ``kappa`` may be
    a number or an exact rational string.  An optional ``name`` field is
    ignored here and used only for labeling.
    """
    if isinstance(obj, str):
        return catalog_lookup(obj)
    if not isinstance(obj, dict):
        raise EmptyStructure(f"structure must be a catalog name or an object, got {obj!r}")
    try:
        n = obj["n"]
        raw_blocks = obj["blocks"]
    except KeyError as exc:
        raise EmptyStructure(f"structure object is missing field {exc.args[0]!r}") from None
    if not isinstance(raw_blocks, list):
        raise EmptyStructure("structure field 'blocks' must be an array")
    blocks = []
    for entry in raw_blocks:
        if not isinstance(entry, dict) or "d" not in entry or "kappa" not in entry:
            raise EmptyStructure(f"each block needs fields 'd' and 'kappa', got {entry!r}")
        blocks.append((entry["d"], parse_real(entry["kappa"])))
    return make_structure(n, blocks)


def tensor_from_dict(obj) -> PrescribedTensor:
    """Build a prescribed tensor from the JSON schema ``{t_a, ts}``."""
    if not isinstance(obj, dict):
        raise NonPositiveCoefficient(f"tensor must be an object, got {obj!r}")
    try:
        t_a = obj["t_a"]
        ts = obj["ts"]
    except KeyError as exc:
        raise NonPositiveCoefficient(f"tensor object is missing field {exc.args[0]!r}") from None
    if not isinstance(ts, list):
        raise NonPositiveCoefficient("tensor field 'ts' must be an array")
    return PrescribedTensor(t_a=parse_real(t_a), ts=tuple(parse_real(t) for t in ts))
