#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
精确谱计算

特征多项式：对若干字长素数做模 p 的 Hessenberg 约化（每个素数 O(V³)），
再用中国剩余定理按系数界重构整数系数；可选用 Bareiss 无除法行列式在 x = V+1 处抽查。
整数谱：剥离整数根及其重数，剩余因子作为 residual 报告，不再分解。
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import integer_nthroot, prevprime

from .commuting_graph import CliqueDecomposition, CommutingGraph
from .config import get_config
from .errors import CapExceededError, ParameterError, ValidationError
from .int_polynomial import IntPolynomial

logger = logging.getLogger(__name__)

_PRIME_CEILING = 2 ** 31  # 模运算在 int64 中进行，乘积不得溢出


@dataclass(frozen=True)
class Spectrum:
    """整数特征值（严格降序）+ 无整数根的剩余因子"""
    integer_eigenvalues: Tuple[Tuple[int, int], ...]
    residual: IntPolynomial = IntPolynomial((1,))

    def __post_init__(self):
        merged = Counter()
        for value, multiplicity in self.integer_eigenvalues:
            if multiplicity < 0:
                raise ParameterError(f"特征值 {value} 的重数为负：{multiplicity}")
            merged[int(value)] += int(multiplicity)
        ordered = tuple((v, k) for v, k in sorted(merged.items(), reverse=True) if k > 0)
        object.__setattr__(self, 'integer_eigenvalues', ordered)

    @property
    def is_integral(self) -> bool:
        return self.residual.is_one()

    @property
    def vertex_count(self) -> int:
        return sum(k for _, k in self.integer_eigenvalues) + max(self.residual.degree, 0)

    def multiplicity(self, value: int) -> int:
        return dict(self.integer_eigenvalues).get(value, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.integer_eigenvalues)

    def reassemble(self) -> IntPolynomial:
        """∏ (x − λ)^k · residual"""
        return IntPolynomial.from_roots(self.integer_eigenvalues) * self.residual

    def __str__(self) -> str:
        body = ', '.join(f"{v}^{k}" for v, k in self.integer_eigenvalues)
        if not self.is_integral:
            body += f"; residual {self.residual}"
        return '{' + body + '}'


def spectrum_from_counts(counts: Mapping[int, int]) -> Spectrum:
    """由 {特征值: 重数} 构造残余为 1 的谱"""
    return Spectrum(tuple(counts.items()))


def spectrum_to_json(s: Spectrum) -> Dict[str, Any]:
    return {
        'eigenvalues': [{'value': v, 'multiplicity': k} for v, k in s.integer_eigenvalues],
        'residual': s.residual.to_json(),
        'integral': s.is_integral,
    }


def spectrum_from_json(data: Mapping[str, Any]) -> Spectrum:
    try:
        pairs = tuple((int(e['value']), int(e['multiplicity'])) for e in data['eigenvalues'])
        residual = IntPolynomial(tuple(int(c) for c in data.get('residual', [1])))
    except (KeyError, TypeError, ValueError) as e:
        raise ParameterError(f"谱 JSON 格式错误: {e}") from e
    return Spectrum(pairs, residual)


# ---------------------------------------------------------------------------
# 模 p 特征多项式
# ---------------------------------------------------------------------------

def _hessenberg_mod(a: np.ndarray, p: int) -> np.ndarray:
    """模 p 相似变换为上 Hessenberg 形"""
    h = a.astype(np.int64) % p
    n = h.shape[0]
    for j in range(n - 2):
        nonzero = np.flatnonzero(h[j + 1:, j])
        if nonzero.size == 0:
            continue
        pivot = j + 1 + int(nonzero[0])
        if pivot != j + 1:
            h[[pivot, j + 1], :] = h[[j + 1, pivot], :]
            h[:, [pivot, j + 1]] = h[:, [j + 1, pivot]]
        inv = pow(int(h[j + 1, j]), p - 2, p)
        u = h[j + 2:, j] * inv % p
        if not u.any():
            continue
        h[j + 2:, :] = (h[j + 2:, :] - u[:, None] * h[j + 1, :][None, :] % p) % p
        h[:, j + 1] = (h[:, j + 1] + (h[:, j + 2:] * u[None, :] % p).sum(axis=1)) % p
    return h


def _charpoly_from_hessenberg(h: np.ndarray, p: int) -> np.ndarray:
    """Hessenberg 矩阵特征多项式的递推，返回常数项在前的系数（模 p）"""
    n = h.shape[0]
    polys = np.zeros((n + 1, n + 1), dtype=np.int64)
    polys[0, 0] = 1
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(n + 1, dtype=np.int64)
        cur[1:] = prev[:-1]
        cur = (cur - int(h[m - 1, m - 1]) * prev % p) % p
        if m > 1:
            weights = np.zeros(m - 1, dtype=np.int64)
            prod = 1
            for i in range(m - 1, 0, -1):
                prod = prod * int(h[i, i - 1]) % p
                if prod == 0:
                    break
                weights[i - 1] = int(h[i - 1, m - 1]) * prod % p
            if weights.any():
                correction = (weights[:, None] * polys[:m - 1] % p).sum(axis=0) % p
                cur = (cur - correction) % p
        polys[m] = cur
    return polys[n]


def _charpoly_mod(a: np.ndarray, p: int) -> np.ndarray:
    result = _charpoly_from_hessenberg(_hessenberg_mod(a, p), p)
    logger.debug(f"模 {p} 特征多项式完成")
    return result


def coefficient_bound(vertex_count: int, max_degree: int) -> int:
    """
    |c_k| ≤ C(V,k)·Δ^k

    邻接矩阵每个特征值的绝对值不超过最大度 Δ（Δ ≤ V−1）。
    """
    delta = max(max_degree, 1)
    return max(comb(vertex_count, k) * delta ** k for k in range(vertex_count + 1))


def _primes_for(bound: int) -> List[int]:
    primes = []
    modulus = 1
    p = _PRIME_CEILING
    while modulus <= 2 * bound:
        p = prevprime(p)
        primes.append(p)
        modulus *= p
    return primes


def _crt_merge(residues: Sequence[np.ndarray], primes: Sequence[int]) -> List[int]:
    """增量 CRT，结果取对称剩余"""
    values = [int(r) for r in residues[0]]
    modulus = primes[0]
    for res, p in zip(residues[1:], primes[1:]):
        inv = pow(modulus % p, -1, p)
        for i, r in enumerate(res):
            delta = (int(r) - values[i]) % p * inv % p
            values[i] += modulus * delta
        modulus *= p
    half = modulus // 2
    return [v - modulus if v > half else v for v in values]


def char_poly_matrix(adjacency: np.ndarray, validate: Optional[bool] = None,
                     jobs: Optional[int] = None) -> IntPolynomial:
    """
    对称 0/1 邻接矩阵的精确特征多项式 det(xI − A)

    Raises:
        ValidationError: Bareiss 抽查与重构结果不一致
    """
    config = get_config()
    validate = config.CHARPOLY_VALIDATE if validate is None else validate
    jobs = config.CHARPOLY_JOBS if jobs is None else jobs

    a = np.asarray(adjacency, dtype=np.int64)
    n = a.shape[0]
    if n == 0:
        return IntPolynomial.constant(1)
    max_degree = int(np.abs(a).sum(axis=1).max())
    bound = coefficient_bound(n, max_degree)
    primes = _primes_for(bound)
    logger.debug(f"V={n}，Δ={max_degree}，系数界 {bound.bit_length()} 位，使用 {len(primes)} 个素数")

    if jobs > 1 and len(primes) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            residues = list(executor.map(lambda p: _charpoly_mod(a, p), primes))
    else:
        residues = [_charpoly_mod(a, p) for p in primes]

    poly = IntPolynomial(_crt_merge(residues, primes))
    if not poly.is_monic() or poly.degree != n:
        raise ValidationError("重构的特征多项式不是 V 次首一多项式",
                              {'degree': poly.degree, 'leading': poly.leading})

    if validate:
        x0 = n + 1
        direct = bareiss_determinant(x0 * np.eye(n, dtype=np.int64) - a)
        evaluated = poly.evaluate(x0)
        if direct != evaluated:
            raise ValidationError(f"特征多项式在 x={x0} 处与 Bareiss 行列式不一致",
                                  {'bareiss': direct, 'charpoly': evaluated})
    return poly


def char_poly(cg: CommutingGraph, spectral_cap: Optional[int] = None,
              validate: Optional[bool] = None, jobs: Optional[int] = None) -> IntPolynomial:
    """
    交换图邻接矩阵的精确特征多项式

    Raises:
        CapExceededError: 顶点数超过谱计算上限
    """
    cap = get_config().SPECTRAL_CAP if spectral_cap is None else spectral_cap
    if cg.vertex_count > cap:
        raise CapExceededError('特征多项式顶点数', cg.vertex_count, cap, 'COMMUTE_SPECTRA_SPECTRAL_CAP')
    logger.info(f"计算 Γ({cg.parent.name}) 的特征多项式，V={cg.vertex_count}")
    return char_poly_matrix(cg.adjacency(), validate=validate, jobs=jobs)


def bareiss_determinant(matrix: Iterable[Iterable[int]]) -> int:
    """Bareiss 无除法消元求整数行列式（任意精度）"""
    m = np.array([[int(x) for x in row] for row in matrix], dtype=object)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ParameterError(f"行列式需要方阵，得到形状 {m.shape}")
    n = m.shape[0]
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i, k] != 0), None)
            if swap is None:
                return 0
            m[[k, swap], :] = m[[swap, k], :]
            sign = -sign
        m[k + 1:, k + 1:] = (m[k + 1:, k + 1:] * m[k, k] - m[k + 1:, k:k + 1] * m[k:k + 1, k + 1:]) // prev
        m[k + 1:, k] = 0
        prev = m[k, k]
    return sign * int(m[n - 1, n - 1])


# ---------------------------------------------------------------------------
# 整数谱
# ---------------------------------------------------------------------------

def _root_bound(p: IntPolynomial) -> int:
    """首一多项式根模的 Fujiwara 上界（向上取整）"""
    n = p.degree
    best = 0
    for k in range(1, n + 1):
        c = abs(p.coefficient(n - k))
        if c == 0:
            continue
        if k == n:
            c = (c + 1) // 2
        root, exact = integer_nthroot(c, k)
        best = max(best, root if exact else root + 1)
    return 2 * best


def integer_spectrum(p: IntPolynomial) -> Spectrum:
    """
    剥离整数根

    先去掉 x^k 因子，再在 Fujiwara 界内枚举整除常数项的候选 ±d，反复综合除法直到不整除。

    Raises:
        ParameterError: 非首一多项式
    """
    if not p.is_monic():
        raise ParameterError(f"整数谱要求首一多项式，首项系数为 {p.leading}")
    counts: Dict[int, int] = {}
    zeros = p.trailing_zeros()
    if zeros:
        counts[0] = zeros
        p = p.shift_down(zeros)

    d = 1
    bound = _root_bound(p) if p.degree > 0 else 0
    while d <= bound and p.degree > 0:
        for candidate in (d, -d):
            while p.degree > 0 and p.coeffs[0] % candidate == 0:
                quotient, remainder = p.divide_by_linear(candidate)
                if remainder != 0:
                    break
                counts[candidate] = counts.get(candidate, 0) + 1
                p = quotient
        d += 1
    return Spectrum(tuple(counts.items()), p)


def clique_union_spectrum(d: CliqueDecomposition) -> Spectrum:
    """
    不交完全图并的谱：每个 K_m 贡献 (m−1)¹ 与 (−1)^{m−1}

    Raises:
        ParameterError: 空分解
    """
    if not d.clique_sizes:
        raise ParameterError("团分解为空")
    counts = Counter(m - 1 for m in d.clique_sizes)
    counts[-1] += sum(d.clique_sizes) - len(d.clique_sizes)
    return spectrum_from_counts(counts)
