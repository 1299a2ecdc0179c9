#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
精确谱计算测试：特征多项式、整数谱、团并谱
"""

import numpy as np
import pytest

from src.core import exact_spectrum
from src.core.commuting_graph import (
    CliqueDecomposition, assignment_adjacency, clique_decomposition,
)
from src.core.errors import CapExceededError, ParameterError, ValidationError
from src.core.exact_spectrum import (
    Spectrum, bareiss_determinant, char_poly, char_poly_matrix, clique_union_spectrum,
    coefficient_bound, integer_spectrum, spectrum_from_counts, spectrum_from_json, spectrum_to_json,
)
from src.core.int_polynomial import IntPolynomial, expand_factored
from src.core.verifier import S4_FACTORS
from tests.conftest import graph


def _complete(n: int) -> np.ndarray:
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)


def test_char_poly_of_triangle():
    assert char_poly_matrix(_complete(3)).coeffs == (-2, -3, 0, 1)


def test_char_poly_of_edgeless_graph():
    assert char_poly_matrix(np.zeros((3, 3), dtype=np.int64)).coeffs == (0, 0, 0, 1)


def test_char_poly_of_empty_matrix():
    assert char_poly_matrix(np.zeros((0, 0), dtype=np.int64)).is_one()


def test_s4_char_poly_matches_factored_form():
    """S4：(x−1)^7 (x+1)^10 (x²−5)² (x²−3x−2)"""
    poly = char_poly(graph('S:4'))
    assert poly == expand_factored(S4_FACTORS)
    spectrum = integer_spectrum(poly)
    assert spectrum.integer_eigenvalues == ((1, 7), (-1, 10))
    assert spectrum.residual == expand_factored([((-5, 0, 1), 2), ((-2, -3, 1), 1)])
    assert not spectrum.is_integral
    assert spectrum.vertex_count == 23
    assert spectrum.reassemble() == poly


@pytest.mark.parametrize('text', ['D:6', 'Q:8', 'S:4', 'A:4', 'HB:3:1'])
def test_low_order_coefficients(text):
    """x^{V−1} 的系数为 0（迹），x^{V−2} 的系数为 −E"""
    cg = graph(text)
    poly = char_poly(cg)
    v = cg.vertex_count
    assert poly.degree == v
    assert poly.coefficient(v - 1) == 0
    assert poly.coefficient(v - 2) == -cg.edge_count


def test_complete_graph_spectrum():
    assert integer_spectrum(char_poly_matrix(_complete(6))).integer_eigenvalues == ((5, 1), (-1, 5))


def test_a5_spectrum_both_ways():
    cg = graph('A:5')
    expected = spectrum_from_counts({3: 6, 2: 5, 1: 10, -1: 38})
    assert integer_spectrum(char_poly(cg)) == expected
    assert clique_union_spectrum(clique_decomposition(cg)) == expected


@pytest.mark.parametrize('sizes,expected', [
    ((6, 2, 2, 2, 2), ((5, 1), (1, 4), (-1, 9))),
    ((3, 3), ((2, 2), (-1, 4))),
    ((1, 1, 1), ((0, 3),)),
])
def test_clique_union_spectrum(sizes, expected):
    d = CliqueDecomposition(sizes, tuple(i for i, m in enumerate(sizes) for _ in range(m)))
    assert clique_union_spectrum(d).integer_eigenvalues == expected


def test_empty_decomposition_is_rejected():
    with pytest.raises(ParameterError):
        clique_union_spectrum(CliqueDecomposition((), ()))


def test_random_clique_unions_agree_with_char_poly():
    """随机团并（V ≤ 60，顶点打乱）：两条路径的谱一致"""
    rng = np.random.default_rng(20240601)
    for _ in range(200):
        count = int(rng.integers(1, 8))
        sizes = tuple(int(m) for m in rng.integers(1, 9, size=count))
        assignment = rng.permutation(np.repeat(np.arange(count), sizes))
        d = CliqueDecomposition(sizes, tuple(int(c) for c in assignment))
        poly = char_poly_matrix(assignment_adjacency(d), validate=True)
        assert integer_spectrum(poly) == clique_union_spectrum(d)


def test_bareiss_determinant():
    assert bareiss_determinant([[2, 1], [1, 3]]) == 5
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    assert bareiss_determinant([[1, 2, 3], [4, 5, 6], [7, 8, 10]]) == -3
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([[0, 0], [0, 5]]) == 0


def test_bareiss_rejects_non_square():
    with pytest.raises(ParameterError):
        bareiss_determinant([[1, 2, 3], [4, 5, 6]])


def test_bareiss_matches_char_poly_evaluation():
    adj = graph('Q:12').adjacency().astype(np.int64)
    n = adj.shape[0]
    poly = char_poly_matrix(adj)
    for x0 in (-2, 0, 3, n + 5):
        assert bareiss_determinant(x0 * np.eye(n, dtype=np.int64) - adj) == poly.evaluate(x0)


def test_validation_failure_is_reported(monkeypatch):
    monkeypatch.setattr(exact_spectrum, 'bareiss_determinant', lambda m: 12345)
    with pytest.raises(ValidationError) as excinfo:
        char_poly_matrix(_complete(4), validate=True)
    assert excinfo.value.detail['bareiss'] == 12345


def test_parallel_residues_give_same_result():
    adj = graph('SL2:3').adjacency()
    assert char_poly_matrix(adj, jobs=4) == char_poly_matrix(adj, jobs=1)


def test_spectral_cap():
    with pytest.raises(CapExceededError) as excinfo:
        char_poly(graph('A:4'), spectral_cap=5)
    assert excinfo.value.requested == 11


def test_coefficient_bound():
    assert coefficient_bound(3, 2) == 12
    assert coefficient_bound(4, 0) == 6


def test_integer_spectrum_requires_monic():
    with pytest.raises(ParameterError):
        integer_spectrum(IntPolynomial((1, 2)))


def test_integer_spectrum_with_zero_roots():
    """x^2 (x − 4)(x + 4)(x^2 + 1)"""
    poly = IntPolynomial.from_roots([(0, 2), (4, 1), (-4, 1)]) * IntPolynomial((1, 0, 1))
    spectrum = integer_spectrum(poly)
    assert spectrum.as_dict() == {4: 1, 0: 2, -4: 1}
    assert spectrum.residual == IntPolynomial((1, 0, 1))


def test_spectrum_normalization():
    s = Spectrum(((-1, 2), (3, 1), (-1, 1), (7, 0)))
    assert s.integer_eigenvalues == ((3, 1), (-1, 3))
    assert s.multiplicity(-1) == 3
    assert s.multiplicity(5) == 0
    assert str(s) == '{3^1, -1^3}'
    with pytest.raises(ParameterError):
        Spectrum(((1, -1),))


def test_spectrum_json():
    s = Spectrum(((1, 7), (-1, 10)), expand_factored(S4_FACTORS[2:]))
    data = spectrum_to_json(s)
    assert data['integral'] is False
    assert data['eigenvalues'][0] == {'value': 1, 'multiplicity': 7}
    assert spectrum_from_json(data) == s
    with pytest.raises(ParameterError):
        spectrum_from_json({'values': []})
