"""Structure data model: validation, catalog, traces, config parsing."""

from fractions import Fraction

import pytest

from natred import (
    Block,
    CentralBlockNotOneDim,
    EmptyStructure,
    KappaOutOfRange,
    MetricCoefficients,
    NonPositiveCoefficient,
    PrescribedTensor,
    ShapeMismatch,
    UnknownCatalogEntry,
    catalog_lookup,
    catalog_names,
    make_structure,
    structure_from_dict,
    tensor_from_dict,
    total_dimension,
    trace_q,
)
from natred.structure import check_shape, parse_real


def test_block_counts_and_dimension():
    sd = make_structure(9, [(3, 0.25), (1, 0.0), (3, 0.5)])
    assert (sd.r, sd.s, sd.k) == (2, 1, 3)
    assert total_dimension(sd) == 9 + 3 + 1 + 3


def test_structure_rejects_bad_input():
    with pytest.raises(EmptyStructure):
        make_structure(9, [])
    with pytest.raises(EmptyStructure):
        make_structure(0, [(3, 0.25)])
    with pytest.raises(EmptyStructure):
        make_structure(9, [(0, 0.25)])
    with pytest.raises(KappaOutOfRange):
        make_structure(9, [(3, 1.0)])
    with pytest.raises(KappaOutOfRange):
        make_structure(9, [(3, -0.1)])
    # kappa = 0 marks a central block, which must be one-dimensional
    with pytest.raises(CentralBlockNotOneDim):
        make_structure(9, [(3, 0.0)])
    assert Block(d=1, kappa=0.0).d == 1


def test_metric_and_tensor_validation():
    g = MetricCoefficients(alpha_a=2, alphas=(1, 3))
    assert g.alpha_a == 2.0 and g.alphas == (1.0, 3.0)
    with pytest.raises(NonPositiveCoefficient):
        MetricCoefficients(alpha_a=0.0, alphas=(1.0,))
    with pytest.raises(NonPositiveCoefficient):
        MetricCoefficients(alpha_a=1.0, alphas=(1.0, -2.0))
    T = PrescribedTensor(t_a=0.0, ts=(0.5,))
    assert T.t_a == 0.0
    with pytest.raises(NonPositiveCoefficient):
        PrescribedTensor(t_a=-1.0, ts=(0.5,))
    with pytest.raises(NonPositiveCoefficient):
        PrescribedTensor(t_a=1.0, ts=(0.0,))


def test_catalog():
    assert catalog_names() == sorted(catalog_names())
    assert "so6-diag" in catalog_names()
    sd = catalog_lookup("so6-diag")
    assert sd.n == 9
    assert [(b.d, b.kappa) for b in sd.blocks] == [(3, 0.25), (3, 0.25)]
    assert total_dimension(sd) == 15
    with pytest.raises(UnknownCatalogEntry):
        catalog_lookup("so5-diag")


def test_check_shape():
    sd = catalog_lookup("so6-diag")
    with pytest.raises(ShapeMismatch):
        check_shape(sd, (1.0,), "tensor")
    check_shape(sd, (1.0, 2.0))


def test_trace_q():
    sd = catalog_lookup("so6-diag")
    T = PrescribedTensor(1.0, (Fraction(2, 15), Fraction(2, 15)))
    # 9*1 + 3*(2/15) + 3*(2/15) = 49/5
    assert trace_q(sd, T) == pytest.approx(9.8, abs=1e-15)


def test_parse_real_exact_rationals():
    assert parse_real("2/15") == float(Fraction(2, 15))
    assert parse_real("0.25") == 0.25
    assert parse_real(3) == 3.0
    with pytest.raises(NonPositiveCoefficient):
        parse_real("2//15")
    with pytest.raises(NonPositiveCoefficient):
        parse_real(True)
    with pytest.raises(NonPositiveCoefficient):
        parse_real([1])


def test_structure_from_dict():
    assert structure_from_dict("so6-diag") == catalog_lookup("so6-diag")
    sd = structure_from_dict({"n": 9, "blocks": [{"d": 3, "kappa": "1/4"}]})
    assert sd.blocks[0].kappa == 0.25
    with pytest.raises(UnknownCatalogEntry):
        structure_from_dict("nope")
    with pytest.raises(EmptyStructure):
        structure_from_dict({"blocks": []})
    with pytest.raises(EmptyStructure):
        structure_from_dict({"n": 9, "blocks": [{"d": 3}]})
    with pytest.raises(EmptyStructure):
        structure_from_dict(42)


def test_tensor_from_dict():
    T = tensor_from_dict({"t_a": 1, "ts": ["1/6", 0.25]})
    assert T.t_a == 1.0
    assert T.ts == (float(Fraction(1, 6)), 0.25)
    with pytest.raises(NonPositiveCoefficient):
        tensor_from_dict({"ts": [1]})
    with pytest.raises(NonPositiveCoefficient):
        tensor_from_dict({"t_a": 1, "ts": "nope"})
