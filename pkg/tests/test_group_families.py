#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
具体群族构造测试
"""

import logging

import pytest

from src.core.config import TestingConfig
from src.core.errors import CapExceededError, ParameterError
from src.core.group_families import MetacyclicModel, build_group, flatten_model
from src.core.group_kernel import (
    Family, FamilySpec, center, centralizer_family, check_group_axioms, is_abelian,
)
from tests.conftest import build


@pytest.mark.parametrize('text,order,center_order', [
    ('D:6', 6, 1),
    ('D:8', 8, 2),
    ('D:12', 12, 2),
    ('Q:8', 8, 2),
    ('Q:12', 12, 2),
    ('QD:16', 16, 2),
    ('M16', 16, 4),
    ('Z4sZ4', 16, 4),
    ('D8cZ4', 16, 4),
    ('SG16_3', 16, 4),
    ('A:4', 12, 1),
    ('A:5', 60, 1),
    ('S:4', 24, 1),
    ('SL2:3', 24, 2),
    ('F20', 20, 1),
    ('GL2:3', 48, 2),
    ('PSL2:4', 60, 1),
    ('HA:2', 16, 4),
    ('HA:3', 64, 8),
    ('HB:2:1', 8, 2),
    ('HB:3:1', 27, 3),
    ('PQ:3:7', 21, 1),
    ('Z:2 x D:8', 16, 4),
    ('D:6 x Z:3', 18, 3),
])
def test_orders_and_centers(text, order, center_order):
    g = build(text)
    assert g.order == order
    assert center(g).size == center_order
    assert not is_abelian(g)


def test_tables_satisfy_group_axioms():
    for text in ('QD:16', 'SG16_3', 'D8cZ4', 'HB:3:1', 'GL2:3', 'HA:2'):
        check_group_axioms(build(text))


def test_f20_centralizers():
    g = build('F20')
    assert centralizer_family(g).size_multiset == (5, 4, 4, 4, 4, 4)


def test_f20_presentations_agree():
    """b a b^{-1} = a^2 与 a^3 给出同构群，中心化子族相同"""
    alt = flatten_model(MetacyclicModel(5, 4, 2, 0), FamilySpec(Family.F20), 100)
    assert alt.order == 20
    assert centralizer_family(alt).size_multiset == centralizer_family(build('F20')).size_multiset


def test_hanaki_a_one_is_abelian(caplog):
    with caplog.at_level(logging.WARNING):
        g = build_group(FamilySpec(Family.HANAKI_A, (1,)))
    assert g.order == 4
    assert is_abelian(g)
    assert any('交换群' in r.getMessage() for r in caplog.records)


@pytest.mark.parametrize('spec', [
    FamilySpec(Family.PSL2, (9,)),
    FamilySpec(Family.GL2, (6,)),
    FamilySpec(Family.GL2, (2,)),
    FamilySpec(Family.SEMIDIRECT_PQ, (3, 11)),
    FamilySpec(Family.HANAKI_B, (4, 1)),
    FamilySpec(Family.SYMMETRIC, (6,)),
    FamilySpec(Family.DIHEDRAL, (4,)),
    FamilySpec(Family.QUASIDIHEDRAL, (3,)),
])
def test_invalid_parameters(spec):
    with pytest.raises(ParameterError):
        build_group(spec)


def test_order_cap():
    with pytest.raises(CapExceededError) as excinfo:
        build_group(FamilySpec(Family.CYCLIC, (10,)), max_order=8)
    assert excinfo.value.cap == 8
    assert excinfo.value.requested == 10
    assert excinfo.value.setting == 'COMMUTE_SPECTRA_MAX_ORDER'


def test_field_cap_applies_to_cached_groups(monkeypatch):
    """先按默认配置构造，再调低域的阶上限，缓存不能绕过上限"""
    spec = FamilySpec(Family.GL2, (3,))
    assert build_group(spec).order == 48
    monkeypatch.setattr(TestingConfig, 'MAX_FIELD_ORDER', 2)
    with pytest.raises(CapExceededError) as excinfo:
        build_group(spec)
    assert excinfo.value.setting == 'COMMUTE_SPECTRA_MAX_FIELD'


def test_construction_is_cached():
    spec = FamilySpec(Family.GEN_QUATERNION, (8,))
    assert build_group(spec) is build_group(spec)


@pytest.mark.slow
def test_gl2_5():
    g = build('GL2:5')
    assert g.order == 480
    assert center(g).size == 4


@pytest.mark.slow
def test_psl2_8():
    g = build('PSL2:8')
    assert g.order == 504
    assert center(g).size == 1
