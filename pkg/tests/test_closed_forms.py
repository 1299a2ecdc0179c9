#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
闭式谱公式测试：数值、顶点数恒等式、勘误、与穷举计算的一致性
"""

import pytest

from src.cli.spec_parser import parse_group_spec
from src.core.closed_forms import (
    PredictedSpectrum, evaluate_formula, fixed_spectrum, formula_for_spec,
    literal_ac_times_abelian_display, literal_pq_display, spec_a4, spec_ac, spec_ac_times_abelian,
    spec_central_quotient_pp, spec_clique_union_family, spec_dihedral, spec_gl2, spec_hanaki_a,
    spec_hanaki_b, spec_pq, spec_psl2, spec_quasidihedral, spec_quaternion, spec_sl23,
    spec_sz2_quotient,
)
from src.core.commuting_graph import clique_decomposition
from src.core.errors import FormulaError, ParameterError
from src.core.exact_spectrum import clique_union_spectrum, spectrum_from_counts
from src.core.group_families import build_group
from tests.conftest import graph


def _counts(predicted: PredictedSpectrum) -> dict:
    return predicted.spectrum.as_dict()


@pytest.mark.parametrize('predicted,expected,vertex_count', [
    (spec_quasidihedral(4), {5: 1, 1: 4, -1: 9}, 14),
    (spec_quasidihedral(5), {13: 1, 1: 8, -1: 21}, 30),
    (spec_gl2(3), {5: 3, 3: 4, 1: 6, -1: 33}, 46),
    (spec_gl2(4), {11: 6, 8: 5, 5: 10, -1: 156}, 177),
    (spec_psl2(2), {3: 6, 2: 5, 1: 10, -1: 38}, 59),
    (spec_psl2(3), {7: 28, 6: 9, 5: 36, -1: 430}, 503),
    (spec_sz2_quotient(1), {3: 1, 2: 5, -1: 13}, 19),
    (spec_sz2_quotient(2), {7: 1, 5: 5, -1: 32}, 38),
    (spec_hanaki_a(2), {3: 3, -1: 9}, 12),
    (spec_hanaki_a(3), {7: 7, -1: 49}, 56),
    (spec_hanaki_b(2, 1), {1: 3, -1: 3}, 6),
    (spec_hanaki_b(3, 1), {5: 4, -1: 20}, 24),
    (spec_central_quotient_pp(2, 4), {3: 3, -1: 9}, 12),
    (spec_dihedral(3), {1: 1, 0: 3, -1: 1}, 5),
    (spec_dihedral(4), {1: 3, -1: 3}, 6),
    (spec_quaternion(2), {1: 3, -1: 3}, 6),
    (spec_pq(3, 7), {5: 1, 1: 7, -1: 12}, 20),
    (spec_pq(5, 11), {9: 1, 3: 11, -1: 42}, 54),
    (spec_clique_union_family(3, 4), {3: 3, -1: 9}, 12),
    (spec_a4(), {2: 1, 1: 4, -1: 6}, 11),
    (spec_sl23(), {3: 4, 1: 3, -1: 15}, 22),
])
def test_formula_values(predicted, expected, vertex_count):
    assert _counts(predicted) == expected
    assert predicted.vertex_count == vertex_count
    assert predicted.is_integral


def test_ac_formula():
    """D6 的中心化子阶 {3,2,2,2}、|Z| = 1"""
    assert spec_ac([3, 2, 2, 2], 1).spectrum == spec_dihedral(3).spectrum


def test_ac_times_abelian():
    assert _counts(spec_ac_times_abelian([3, 2, 2, 2], 1, 3)) == {5: 1, 2: 3, -1: 11}
    assert _counts(spec_ac_times_abelian([4, 3, 3, 3, 3], 1, 2)) == {5: 1, 3: 4, -1: 17}
    assert spec_ac_times_abelian([3, 2, 2, 2], 1, 1).spectrum == spec_ac([3, 2, 2, 2], 1).spectrum
    assert spec_ac_times_abelian([3, 2, 2, 2], 1, 3).errata_flag


def test_pq_literal_display_fails_vertex_count():
    """展示式 (−1)^{pq−q−1} 的重数合计多出 1"""
    for p, q in ((3, 7), (5, 11), (3, 13)):
        literal = literal_pq_display(p, q)
        assert literal.fails_vertex_count
        assert literal.literal_total == p * q
        assert literal.vertex_count == p * q - 1
        assert spec_pq(p, q).errata_flag


def test_ac_times_abelian_literal_display_fails():
    literal = literal_ac_times_abelian_display([3, 2, 2, 2], 1, 3)
    assert literal.literal_total == -21
    assert literal.vertex_count == 15
    assert literal.to_json()['literal_fails'] is True


@pytest.mark.parametrize('m', [3, 5, 7])
def test_pq_with_p_two_is_dihedral(m):
    assert spec_pq(2, m).spectrum == spec_dihedral(m).spectrum


@pytest.mark.parametrize('p', [2, 3, 5])
def test_hanaki_b_matches_central_quotient(p):
    """A(1,p) 的中心阶为 p，商群为 Z_p × Z_p"""
    assert spec_hanaki_b(p, 1).spectrum == spec_central_quotient_pp(p, p).spectrum


def test_clique_union_family_matches_complete_graph_counts():
    assert spec_clique_union_family(1, 6).spectrum == spectrum_from_counts({5: 1, -1: 5})


@pytest.mark.parametrize('call', [
    lambda: spec_gl2(6),
    lambda: spec_gl2(2),
    lambda: spec_pq(3, 11),
    lambda: spec_pq(7, 3),
    lambda: spec_dihedral(2),
    lambda: spec_quaternion(1),
    lambda: spec_quasidihedral(3),
    lambda: spec_hanaki_a(1),
    lambda: spec_hanaki_b(4, 1),
    lambda: spec_ac([1, 2], 1),
    lambda: fixed_spectrum('S4'),
    lambda: evaluate_formula('nope', ()),
])
def test_invalid_formula_parameters(call):
    with pytest.raises(FormulaError):
        call()


def test_vertex_count_identity_is_enforced():
    with pytest.raises(FormulaError):
        PredictedSpectrum(spectrum_from_counts({1: 2}), 'broken', 3)


def test_evaluate_formula_dispatch():
    assert evaluate_formula('fixed', ('SL(2,3)',)).spectrum == spec_sl23().spectrum
    assert evaluate_formula('dihedral', (5,)).vertex_count == 9


@pytest.mark.parametrize('text,expected', [
    ('QD:16', {5: 1, 1: 4, -1: 9}),
    ('D:6 x Z:3', {5: 1, 2: 3, -1: 11}),
    ('Z:3 x D:6', {5: 1, 2: 3, -1: 11}),
    ('A:4 x Z:2', {5: 1, 3: 4, -1: 17}),
    ('Z:2 x D:8', {3: 3, -1: 9}),
    ('F20 x Z:2', {7: 1, 5: 5, -1: 32}),
    ('SL2:2', {1: 1, 0: 3, -1: 1}),
    ('M16', {3: 3, -1: 9}),
])
def test_formula_for_spec(text, expected):
    assert _counts(formula_for_spec(parse_group_spec(text))) == expected


@pytest.mark.parametrize('text', [
    'Z:5', 'S:4', 'A:6', 'HA:1', 'PQ:3:11', 'S:4 x Z:2', 'PSL2:2', 'GL2:2', 'HB:4:1', 'PSL2:2 x Z:3',
])
def test_formula_for_spec_without_formula(text):
    assert formula_for_spec(parse_group_spec(text)) is None


def test_formula_requires_a_constructible_group():
    """PSL(2,2) 不在 build_group 的参数范围内，闭式公式也不给出结果"""
    spec = parse_group_spec('PSL2:2')
    with pytest.raises(ParameterError):
        build_group(spec)
    assert formula_for_spec(spec) is None
    sl22 = parse_group_spec('SL2:2')
    assert build_group(sl22).order == 6
    assert formula_for_spec(sl22).vertex_count == 5


@pytest.mark.parametrize('text', [
    'D:10', 'D:12', 'Q:16', 'QD:16', 'QD:32', 'M16', 'Z4sZ4', 'D8cZ4', 'SG16_3',
    'GL2:3', 'F20', 'F20 x Z:2', 'HA:2', 'HA:3', 'HB:2:1', 'HB:3:1', 'HB:2:2',
    'PQ:3:7', 'PQ:5:11', 'A:4', 'SL2:3', 'D:6 x Z:3', 'A:4 x Z:2',
])
def test_formulas_match_exhaustive_computation(text):
    cg = graph(text)
    predicted = formula_for_spec(parse_group_spec(text))
    assert predicted.vertex_count == cg.vertex_count
    assert clique_union_spectrum(clique_decomposition(cg)) == predicted.spectrum
