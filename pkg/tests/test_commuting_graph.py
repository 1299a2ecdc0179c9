#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
交换图与团分解测试
"""

import numpy as np
import pytest

from src.core.commuting_graph import (
    assignment_adjacency, build_commuting_graph, clique_decomposition, complement_edge_count,
    export_dot, graph_to_json,
)
from src.core.errors import AbelianGroupError
from src.core.group_kernel import center, centralizer
from tests.conftest import build, graph


@pytest.mark.parametrize('text,vertices,edges,complement', [
    ('D:6', 5, 1, 9),
    ('D:8', 6, 3, 12),
    ('Q:8', 6, 3, 12),
    ('A:4', 11, 7, 48),
])
def test_graph_sizes(text, vertices, edges, complement):
    cg = graph(text)
    assert cg.vertex_count == vertices
    assert cg.edge_count == edges
    assert complement_edge_count(cg) == complement


def test_abelian_group_has_no_graph():
    with pytest.raises(AbelianGroupError):
        build_commuting_graph(build('Z:4 x Z:2'))


def test_degree_is_centralizer_minus_center():
    """deg(x) = |C(x)| − |Z| − 1，且 Σ deg = 2E"""
    g = build('SL2:3')
    cg = build_commuting_graph(g)
    z = center(g).size
    for v in range(cg.vertex_count):
        assert cg.degree(v) == centralizer(g, cg.element_of(v)).size - z - 1
    assert int(cg.degrees().sum()) == 2 * cg.edge_count


def test_adjacency_is_symmetric_without_loops():
    adj = graph('QD:16').adjacency()
    assert np.array_equal(adj, adj.T)
    assert not adj.diagonal().any()


def test_has_edge_matches_group_multiplication():
    g = build('D:8')
    cg = build_commuting_graph(g)
    for u in range(cg.vertex_count):
        for v in range(cg.vertex_count):
            if u != v:
                x, y = cg.element_of(u), cg.element_of(v)
                assert cg.has_edge(u, v) == (g.product(x, y) == g.product(y, x))


@pytest.mark.parametrize('text,sizes', [
    ('D:6', (2, 1, 1, 1)),
    ('Q:8', (2, 2, 2)),
    ('A:4', (3, 2, 2, 2, 2)),
    ('SL2:3', (4, 4, 4, 4, 2, 2, 2)),
    ('F20', (4, 3, 3, 3, 3, 3)),
])
def test_clique_decomposition(text, sizes):
    d = clique_decomposition(graph(text))
    assert d is not None
    assert d.size_multiset() == sizes


def test_s4_has_no_clique_decomposition():
    assert clique_decomposition(graph('S:4')) is None


def test_decomposition_rebuilds_adjacency():
    cg = graph('SL2:3')
    d = clique_decomposition(cg)
    assert np.array_equal(assignment_adjacency(d), cg.adjacency())
    # 团编号按最小顶点位置递增
    firsts = [d.clique_members(c)[0] for c in range(d.clique_count)]
    assert firsts == sorted(firsts)


def test_graph_to_json_for_d6():
    """D6 中只有 a 与 a^2 相邻"""
    data = graph_to_json(graph('D:6'))
    assert data['vertices'] == [1, 2, 3, 4, 5]
    assert data['edges'] == [[1, 3]]


def test_export_dot_is_deterministic():
    cg = graph('Q:8')
    text = export_dot(cg)
    assert text == export_dot(cg)
    assert text.startswith('graph "Q8" {')
    assert text.count(' -- ') == 3
    assert text.count('subgraph cluster_') == 3
    assert text.count('[label=') == 6
    assert text.rstrip().endswith('}')


def test_export_dot_without_clusters():
    text = export_dot(graph('S:4'))
    assert 'subgraph' not in text
    assert text.count(' -- ') == graph('S:4').edge_count


@pytest.mark.slow
def test_psl2_8_decomposition():
    d = clique_decomposition(graph('PSL2:8'))
    assert d.size_multiset() == (8,) * 28 + (7,) * 9 + (6,) * 36
