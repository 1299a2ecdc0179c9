#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
闭式谱公式

每个公式是族参数的纯函数，构造时校验重数之和等于目标群的 |G| − |Z(G)|。
相邻项的相同特征值合并为一个条目。

勘误（errata_flag = True）：
  - 阶 pq 非交换群：展示式 (−1)^{pq−q−1} 的重数合计为 pq，而顶点数为 pq−1；
    团结构 K_{q−1} ⊔ qK_{p−1} 给出 (−1)^{pq−q−2}。
  - AC 群 × 交换群 A：展示式 (−1)^{Σ|A|(|X_i|−n|Z(G)|)−n}；
    对 G×A 直接套用 AC 谱公式得到 |A|·Σ|X_i| − n·|A|·|Z(G)| − n。
  - A(n,ϑ) 的中心阶文中写作 2^n − 1，但 Z = {U(0,b) : b ∈ F} 的阶为 2^n，
    谱公式只与后者一致；这里只影响文档，中心直接由乘法表计算。
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, Optional, Tuple

from sympy import factorint, isprime

from .errors import FormulaError, ParameterError
from .exact_spectrum import Spectrum, spectrum_from_counts, spectrum_to_json
from .group_families import expected_order
from .group_kernel import Family, FamilySpec
from .int_polynomial import IntPolynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PredictedSpectrum:
    """闭式公式预测的谱（残余恒为 1）"""
    spectrum: Spectrum
    provenance: str
    vertex_count: int
    errata_flag: bool = False

    def __post_init__(self):
        total = sum(k for _, k in self.spectrum.integer_eigenvalues)
        if total != self.vertex_count:
            raise FormulaError(
                f"{self.provenance}: 重数之和 {total} 与顶点数 {self.vertex_count} 不符")

    @property
    def integer_eigenvalues(self) -> Tuple[Tuple[int, int], ...]:
        return self.spectrum.integer_eigenvalues

    @property
    def residual(self) -> IntPolynomial:
        return self.spectrum.residual

    @property
    def is_integral(self) -> bool:
        return True

    def to_json(self) -> Dict[str, Any]:
        data = spectrum_to_json(self.spectrum)
        data['provenance'] = self.provenance
        data['errata_flag'] = self.errata_flag
        return data


@dataclass(frozen=True)
class LiteralDisplay:
    """按原文展示式逐字计算的多重集（重数可能为负，不做校验）"""
    provenance: str
    eigenvalues: Tuple[Tuple[int, int], ...]
    vertex_count: int

    @property
    def literal_total(self) -> int:
        return sum(k for _, k in self.eigenvalues)

    @property
    def fails_vertex_count(self) -> bool:
        return self.literal_total != self.vertex_count

    def to_json(self) -> Dict[str, Any]:
        return {
            'provenance': self.provenance,
            'literal_total': self.literal_total,
            'vertex_count': self.vertex_count,
            'literal_fails': self.fails_vertex_count,
        }


def _predicted(terms: Iterable[Tuple[int, int]], provenance: str, vertex_count: int,
               errata: bool = False) -> PredictedSpectrum:
    counts = Counter()
    for value, multiplicity in terms:
        counts[value] += multiplicity
    return PredictedSpectrum(spectrum_from_counts(counts), provenance, vertex_count, errata)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FormulaError(message)


def _is_prime_power(q: int) -> bool:
    return q > 1 and len(factorint(q)) == 1


# ---------------------------------------------------------------------------
# AC 群通式
# ---------------------------------------------------------------------------

def spec_ac(centralizer_orders: Iterable[int], z: int) -> PredictedSpectrum:
    """
    AC 群：每个中心化子 X_i 贡献 (|X_i| − z − 1)¹，−1 的重数为 Σ|X_i| − n(z+1)
    """
    orders = sorted(int(x) for x in centralizer_orders)
    _require(z >= 1, f"中心阶必须 ≥ 1，得到 {z}")
    _require(len(orders) > 0, "中心化子族为空")
    _require(all(x > z for x in orders), f"中心化子阶必须大于中心阶 {z}：{orders}")
    n = len(orders)
    terms = [(x - z - 1, 1) for x in orders]
    terms.append((-1, sum(orders) - n * (z + 1)))
    return _predicted(terms, 'ac', sum(x - z for x in orders))


def spec_ac_times_abelian(centralizer_orders: Iterable[int], z: int, a: int) -> PredictedSpectrum:
    """AC 群与 a 阶交换群的直积：等价于对阶 a·|X_i|、中心 a·z 套用 spec_ac"""
    _require(a >= 1, f"交换因子的阶必须 ≥ 1，得到 {a}")
    orders = [int(x) for x in centralizer_orders]
    base = spec_ac([a * x for x in orders], a * z)
    return PredictedSpectrum(base.spectrum, 'ac_times_abelian', base.vertex_count, errata_flag=True)


def literal_ac_times_abelian_display(centralizer_orders: Iterable[int], z: int, a: int) -> LiteralDisplay:
    """原文展示式：−1 的重数为 Σ a(|X_i| − n·z) − n"""
    orders = [int(x) for x in centralizer_orders]
    n = len(orders)
    terms = [(a * (x - z) - 1, 1) for x in orders]
    terms.append((-1, sum(a * (x - n * z) for x in orders) - n))
    return LiteralDisplay('ac_times_abelian (literal)', tuple(terms), sum(a * (x - z) for x in orders))


# ---------------------------------------------------------------------------
# 各群族
# ---------------------------------------------------------------------------

def spec_quasidihedral(n: int) -> PredictedSpectrum:
    _require(n >= 4, f"QD_{{2^n}} 需要 n ≥ 4，得到 {n}")
    return _predicted([(-1, 2 ** n - 2 ** (n - 2) - 3), (1, 2 ** (n - 2)), (2 ** (n - 1) - 3, 1)],
                      'quasidihedral', 2 ** n - 2)


def spec_psl2(k: int) -> PredictedSpectrum:
    """PSL(2, 2^k)"""
    _require(k >= 2, f"PSL(2,2^k) 需要 k ≥ 2，得到 {k}")
    q = 2 ** k
    terms = [
        (-1, 2 ** (3 * k) - 2 ** (2 * k) - 2 ** (k + 1) - 2),
        (q - 1, q * (q - 1) // 2),
        (q - 2, q + 1),
        (q - 3, q * (q + 1) // 2),
    ]
    return _predicted(terms, 'psl2', q * (q * q - 1) - 1)


def spec_gl2(q: int) -> PredictedSpectrum:
    _require(q > 2 and _is_prime_power(q), f"GL(2,q) 需要素数幂 q > 2，得到 {q}")
    terms = [
        (-1, q ** 4 - q ** 3 - 2 * q ** 2 - q),
        (q * q - 3 * q + 1, q * (q + 1) // 2),
        (q * q - q - 1, q * (q - 1) // 2),
        (q * q - 2 * q, q + 1),
    ]
    return _predicted(terms, 'gl2', (q * q - 1) * (q * q - q) - (q - 1))


def spec_sz2_quotient(z: int) -> PredictedSpectrum:
    """G/Z(G) ≅ Sz(2) 的群"""
    _require(z >= 1, f"中心阶必须 ≥ 1，得到 {z}")
    return _predicted([(-1, 19 * z - 6), (4 * z - 1, 1), (3 * z - 1, 5)], 'sz2_quotient', 19 * z)


def spec_hanaki_a(n: int) -> PredictedSpectrum:
    _require(n >= 2, f"A(n,ϑ) 需要 n ≥ 2，得到 {n}")
    q = 2 ** n
    return _predicted([(-1, (q - 1) ** 2), (q - 1, q - 1)], 'hanaki_a', q * q - q)


def spec_hanaki_b(p: int, n: int) -> PredictedSpectrum:
    _require(isprime(p), f"A(n,p) 需要素数 p，得到 {p}")
    _require(n >= 1, f"A(n,p) 需要 n ≥ 1，得到 {n}")
    q = p ** n
    return _predicted([(-1, q ** 3 - 2 * q - 1), (q * q - q - 1, q + 1)], 'hanaki_b', q ** 3 - q)


def spec_central_quotient_pp(p: int, z: int) -> PredictedSpectrum:
    """G/Z(G) ≅ Z_p × Z_p 的群"""
    _require(isprime(p), f"需要素数 p，得到 {p}")
    _require(z >= 1, f"中心阶必须 ≥ 1，得到 {z}")
    return _predicted([(-1, (p * p - 1) * z - p - 1), ((p - 1) * z - 1, p + 1)],
                      'central_quotient_pp', (p * p - 1) * z)


def spec_dihedral(m: int) -> PredictedSpectrum:
    """D_{2m}（参数为 m，不是群的阶）"""
    _require(m > 2, f"D_2m 需要 m > 2，得到 {m}")
    if m % 2:
        return _predicted([(-1, m - 2), (0, m), (m - 2, 1)], 'dihedral', 2 * m - 1)
    return _predicted([(-1, 3 * m // 2 - 3), (1, m // 2), (m - 3, 1)], 'dihedral', 2 * m - 2)


def spec_quaternion(n: int) -> PredictedSpectrum:
    """Q_{4n}"""
    _require(n >= 2, f"Q_4n 需要 n ≥ 2，得到 {n}")
    return _predicted([(-1, 3 * n - 3), (1, n), (2 * n - 3, 1)], 'quaternion', 4 * n - 2)


def _check_pq(p: int, q: int) -> None:
    _require(isprime(p) and isprime(q), f"p, q 必须为素数，得到 ({p}, {q})")
    _require(p < q and (q - 1) % p == 0, f"需要 p < q 且 p | q−1，得到 ({p}, {q})")


def spec_pq(p: int, q: int) -> PredictedSpectrum:
    """阶 pq 的非交换群，Γ = K_{q−1} ⊔ qK_{p−1}"""
    _check_pq(p, q)
    return _predicted([(q - 2, 1), (p - 2, q), (-1, p * q - q - 2)], 'pq', p * q - 1, errata=True)


def literal_pq_display(p: int, q: int) -> LiteralDisplay:
    """原文展示式 {(−1)^{pq−q−1}, (p−2)^q, (q−2)¹}"""
    _check_pq(p, q)
    return LiteralDisplay('pq (literal)', ((q - 2, 1), (p - 2, q), (-1, p * q - q - 1)), p * q - 1)


def spec_clique_union_family(l: int, m: int) -> PredictedSpectrum:
    """lK_m：{(m−1)^l, (−1)^{l(m−1)}}"""
    _require(l >= 1 and m >= 1, f"lK_m 需要 l, m ≥ 1，得到 ({l}, {m})")
    return _predicted([(m - 1, l), (-1, l * (m - 1))], 'clique_union_family', l * m)


_FIXED = {
    'A4': ([(-1, 6), (2, 1), (1, 4)], 11),
    'SL23': ([(-1, 15), (1, 3), (3, 4)], 22),
}


def fixed_spectrum(name: str) -> PredictedSpectrum:
    """固定小群：A4、SL23"""
    key = name.replace('(', '').replace(')', '').replace(',', '').upper()
    if key not in _FIXED:
        raise FormulaError(f"没有固定谱：{name}")
    terms, vertex_count = _FIXED[key]
    return _predicted(terms, f'fixed:{key}', vertex_count)


def spec_a4() -> PredictedSpectrum:
    return fixed_spectrum('A4')


def spec_sl23() -> PredictedSpectrum:
    return fixed_spectrum('SL23')


FORMULAS: Dict[str, Callable[..., PredictedSpectrum]] = {
    'ac': spec_ac,
    'ac_times_abelian': spec_ac_times_abelian,
    'quasidihedral': spec_quasidihedral,
    'psl2': spec_psl2,
    'gl2': spec_gl2,
    'sz2_quotient': spec_sz2_quotient,
    'hanaki_a': spec_hanaki_a,
    'hanaki_b': spec_hanaki_b,
    'central_quotient_pp': spec_central_quotient_pp,
    'dihedral': spec_dihedral,
    'quaternion': spec_quaternion,
    'pq': spec_pq,
    'clique_union_family': spec_clique_union_family,
    'fixed': fixed_spectrum,
}


def evaluate_formula(formula_id: str, params: Tuple[Any, ...]) -> PredictedSpectrum:
    if formula_id not in FORMULAS:
        raise FormulaError(f"未知公式：{formula_id}")
    return FORMULAS[formula_id](*params)


# ---------------------------------------------------------------------------
# FamilySpec → 闭式公式
# ---------------------------------------------------------------------------

def _abelian_order(spec: FamilySpec) -> Optional[int]:
    """循环群及其直积返回阶，否则 None"""
    if spec.family is Family.CYCLIC:
        return spec.param()
    if spec.family is Family.PRODUCT:
        left, right = (_abelian_order(f) for f in spec.factors)
        if left is not None and right is not None:
            return left * right
    return None


def _times_abelian(base: PredictedSpectrum, a: int) -> PredictedSpectrum:
    """由 AC 因子的团大小 m_i 推出 G×A 的谱；团大小只依赖 |X_i| − |Z|，取 z = 1 即可"""
    sizes = []
    for value, multiplicity in base.integer_eigenvalues:
        if value >= 0:
            sizes.extend([value + 1] * multiplicity)
    return spec_ac_times_abelian([m + 1 for m in sizes], 1, a)


def formula_for_spec(spec: FamilySpec) -> Optional[PredictedSpectrum]:
    """
    返回覆盖该群族的闭式谱；没有闭式公式（或群为交换群）时返回 None
    """
    f = spec.family
    try:
        expected_order(spec)  # 与 build_group 相同的参数范围
        if f is Family.DIHEDRAL:
            return spec_dihedral(spec.param() // 2)
        if f is Family.GEN_QUATERNION:
            return spec_quaternion(spec.param() // 4)
        if f is Family.QUASIDIHEDRAL:
            return spec_quasidihedral(spec.param())
        if f in (Family.M16, Family.Z4_RTIMES_Z4, Family.D8_CENTRAL_Z4, Family.SG16_3):
            return spec_central_quotient_pp(2, 4)
        if f is Family.ALTERNATING:
            return {4: spec_a4, 5: lambda: spec_psl2(2)}.get(spec.param(), lambda: None)()
        if f is Family.SYMMETRIC:
            return spec_dihedral(3) if spec.param() == 3 else None
        if f in (Family.SL2, Family.PSL2):
            q = spec.param()
            if f is Family.SL2 and q == 3:
                return spec_sl23()
            if f is Family.SL2 and q == 2:
                return spec_dihedral(3)
            if q & (q - 1) == 0:
                return spec_psl2(q.bit_length() - 1)
            return None
        if f is Family.GL2:
            return spec_gl2(spec.param())
        if f is Family.F20:
            return spec_sz2_quotient(1)
        if f is Family.HANAKI_A:
            return spec_hanaki_a(spec.param()) if spec.param() >= 2 else None
        if f is Family.HANAKI_B:
            return spec_hanaki_b(spec.param(0), spec.param(1))
        if f is Family.SEMIDIRECT_PQ:
            return spec_pq(spec.param(0), spec.param(1))
        if f is Family.PRODUCT:
            left, right = spec.factors
            for group_part, abelian_part in ((left, right), (right, left)):
                a = _abelian_order(abelian_part)
                if a is None:
                    continue
                base = formula_for_spec(group_part)
                if base is not None:
                    return _times_abelian(base, a)
            return None
    except (ParameterError, FormulaError) as e:
        logger.debug(f"{spec.display_name()} 没有可用的闭式公式: {e}")
        return None
    return None
