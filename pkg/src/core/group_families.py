#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群族构造

每个群族先实现为具体模型（亚循环字、置换、有限域上的矩阵、Hanaki 三角矩阵），
元素以整数编码；再从该族的规范生成元列表做广度优先闭包确定元素顺序，最后展平为 Cayley 表。
不做陪集枚举，也不解析一般表现。
"""

import logging
import math
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint, isprime

from .config import get_config
from .errors import CapExceededError, GroupAxiomError, ParameterError
from .finite_field import FieldTables, construct_field, field_tables
from .group_kernel import (
    ElementSet, Family, FamilySpec, GroupTable, center, check_group_axioms,
    direct_product, make_table, quotient_by_central,
)

logger = logging.getLogger(__name__)

_ROW_BLOCK = 256  # 展平乘法表时每批处理的行数


# ===== 具体模型 =====

class GroupModel:
    """整数编码的具体群模型"""

    code_space: int = 0
    identity: int = 0

    def compose(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """逐元素乘积 x·y，支持广播"""
        raise NotImplementedError

    def label(self, code: int) -> str:
        raise NotImplementedError

    def generators(self) -> List[int]:
        """规范生成元列表；默认按编码顺序贪心选取"""
        return greedy_generators(self, self.all_codes())

    def all_codes(self) -> np.ndarray:
        raise NotImplementedError


def _power_word(name: str, k: int) -> str:
    if k == 0:
        return ''
    return name if k == 1 else f"{name}^{k}"


def _word(*parts: Tuple[str, int]) -> str:
    return ''.join(_power_word(name, k) for name, k in parts) or '1'


class CyclicModel(GroupModel):
    """Z_n = ⟨c⟩"""

    def __init__(self, n: int):
        self.n = n
        self.code_space = n

    def compose(self, x, y):
        return (x + y) % self.n

    def label(self, code):
        return _word(('c', code))

    def generators(self):
        return [1] if self.n > 1 else []


class MetacyclicModel(GroupModel):
    """
    ⟨a, b : a^M = 1, b^N = a^t, b a b^{-1} = a^r⟩，元素 a^i b^j 编码为 i + M·j

    a^i b^j · a^k b^l = a^{i + k r^j} b^{j+l}，j + l ≥ N 时再乘 a^t。
    """

    def __init__(self, m: int, n: int, r: int, t: int = 0):
        if pow(r, n, m) != 1 % m or (t * r - t) % m:
            raise ParameterError(f"亚循环参数不相容: M={m}, N={n}, r={r}, t={t}")
        self.m, self.n, self.r, self.t = m, n, r % m, t % m
        self.code_space = m * n
        self.rpow = np.array([pow(r, j, m) for j in range(n)], dtype=np.int64)

    def compose(self, x, y):
        m, n = self.m, self.n
        i1, j1 = x % m, x // m
        i2, j2 = y % m, y // m
        js = j1 + j2
        wrap = js >= n
        i = (i1 + i2 * self.rpow[j1] + wrap * self.t) % m
        return i + m * (js % n)

    def label(self, code):
        return _word(('a', code % self.m), ('b', code // self.m))

    def generators(self):
        return [1, self.m]


class SG16Model(GroupModel):
    """SmallGroup(16,3) = (Z4 × Z2) ⋊ Z2，c: a ↦ ab, b ↦ b；元素 a^i b^j c^k 编码为 i + 4j + 8k"""

    code_space = 16

    def compose(self, x, y):
        i1, j1, k1 = x % 4, (x // 4) % 2, x // 8
        i2, j2, k2 = y % 4, (y // 4) % 2, y // 8
        return (i1 + i2) % 4 + 4 * ((j1 + j2 + k1 * i2) % 2) + 8 * ((k1 + k2) % 2)

    def label(self, code):
        return _word(('a', code % 4), ('b', (code // 4) % 2), ('c', code // 8))

    def generators(self):
        return [1, 4, 8]


class PermutationModel(GroupModel):
    """
    d 次置换，编码 Σ π(k)·d^k；乘积 (xy)(k) = x(y(k))
    """

    def __init__(self, degree: int, generators: Sequence[Sequence[int]]):
        self.d = degree
        self.code_space = degree ** degree
        self.weights = degree ** np.arange(degree, dtype=np.int64)
        self.identity = self.encode(range(degree))
        self._generators = [self.encode(p) for p in generators]

    def encode(self, perm: Sequence[int]) -> int:
        return int(sum(int(v) * self.d ** k for k, v in enumerate(perm)))

    def decode(self, codes: np.ndarray) -> np.ndarray:
        return (np.asarray(codes)[..., None] // self.weights) % self.d

    def compose(self, x, y):
        px, py = np.broadcast_arrays(self.decode(x), self.decode(y))
        return (np.take_along_axis(px, py, axis=-1) * self.weights).sum(axis=-1)

    def label(self, code):
        perm = [int(v) for v in self.decode(np.array(code))]
        seen, cycles = set(), []
        for start in range(self.d):
            if start in seen or perm[start] == start:
                continue
            cycle, k = [], start
            while k not in seen:
                seen.add(k)
                cycle.append(str(k + 1))
                k = perm[k]
            cycles.append('(' + ' '.join(cycle) + ')')
        return ''.join(cycles) or '()'

    def generators(self):
        return list(self._generators)


def _cycle_perm(degree: int, cycle: Sequence[int]) -> List[int]:
    perm = list(range(degree))
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        perm[a] = b
    return perm


class MatrixModel(GroupModel):
    """GF(q) 上的 2×2 矩阵，[[e00,e01],[e10,e11]] 编码为 e00 + q·e01 + q²·e10 + q³·e11"""

    def __init__(self, tables: FieldTables, q: int, det_one: bool):
        self.tb, self.q, self.det_one = tables, q, det_one
        self.code_space = q ** 4
        self.identity = 1 + q ** 3

    def entries(self, codes):
        q = self.q
        codes = np.asarray(codes)
        return codes % q, (codes // q) % q, (codes // q ** 2) % q, codes // q ** 3

    def compose(self, x, y):
        add, mul, q = self.tb.add, self.tb.mul, self.q
        a, b, c, d = self.entries(x)
        e, f, g, h = self.entries(y)
        c00 = add[mul[a, e], mul[b, g]]
        c01 = add[mul[a, f], mul[b, h]]
        c10 = add[mul[c, e], mul[d, g]]
        c11 = add[mul[c, f], mul[d, h]]
        return c00 + q * c01 + q ** 2 * c10 + q ** 3 * c11

    def all_codes(self):
        codes = np.arange(self.code_space, dtype=np.int64)
        a, b, c, d = self.entries(codes)
        det = self.tb.add[self.tb.mul[a, d], self.tb.neg[self.tb.mul[b, c]]]
        keep = det == 1 if self.det_one else det != 0
        return codes[keep]

    def label(self, code):
        lab = self.tb.labels
        a, b, c, d = (int(v) for v in self.entries(code))
        return f"[[{lab[a]},{lab[b]}],[{lab[c]},{lab[d]}]]"


class HanakiAModel(GroupModel):
    """A(n,ϑ)：U(a,b)U(a',b') = U(a+a', b+b'+a'ϑ(a))，编码 a + q·b"""

    def __init__(self, tables: FieldTables, q: int):
        self.tb, self.q = tables, q
        self.code_space = q * q

    def compose(self, x, y):
        add, mul, q = self.tb.add, self.tb.mul, self.q
        a1, b1 = x % q, x // q
        a2, b2 = y % q, y // q
        return add[a1, a2] + q * add[add[b1, b2], mul[a2, self.tb.frob[a1]]]

    def all_codes(self):
        return np.arange(self.code_space, dtype=np.int64)

    def label(self, code):
        lab = self.tb.labels
        return f"U({lab[code % self.q]},{lab[code // self.q]})"


class HanakiBModel(GroupModel):
    """A(n,p)：V(a,b,c)V(a',b',c') = V(a+a', b+b'+ca', c+c')，编码 a + q·b + q²·c"""

    def __init__(self, tables: FieldTables, q: int):
        self.tb, self.q = tables, q
        self.code_space = q ** 3

    def compose(self, x, y):
        add, mul, q = self.tb.add, self.tb.mul, self.q
        a1, b1, c1 = x % q, (x // q) % q, x // (q * q)
        a2, b2, c2 = y % q, (y // q) % q, y // (q * q)
        return add[a1, a2] + q * add[add[b1, b2], mul[c1, a2]] + q * q * add[c1, c2]

    def all_codes(self):
        return np.arange(self.code_space, dtype=np.int64)

    def label(self, code):
        lab, q = self.tb.labels, self.q
        return f"V({lab[code % q]},{lab[(code // q) % q]},{lab[code // (q * q)]})"


# ===== 闭包与展平 =====

def _closure(model: GroupModel, generators: Sequence[int], limit: Optional[int] = None) -> np.ndarray:
    """
    从单位元出发按生成元顺序广度优先闭包，返回按发现顺序排列的编码

    逐层批量计算与逐个出队的经典 BFS 得到相同顺序。
    """
    seen = np.zeros(model.code_space, dtype=bool)
    seen[model.identity] = True
    found = [np.array([model.identity], dtype=np.int64)]
    total = 1
    gens = np.asarray(list(generators), dtype=np.int64)
    frontier = found[0]
    while frontier.size and gens.size:
        products = np.asarray(model.compose(frontier[:, None], gens[None, :]), dtype=np.int64).ravel()
        _, first = np.unique(products, return_index=True)
        fresh = products[np.sort(first)]
        fresh = fresh[~seen[fresh]]
        seen[fresh] = True
        total += fresh.size
        if limit is not None and total > limit:
            raise CapExceededError('群的阶', total, limit, 'COMMUTE_SPECTRA_MAX_ORDER')
        found.append(fresh)
        frontier = fresh
    return np.concatenate(found)


def greedy_generators(model: GroupModel, codes: np.ndarray) -> List[int]:
    """按编码顺序扫描，不在当前生成子群内的元素即加入生成元"""
    generators: List[int] = []
    covered = np.zeros(model.code_space, dtype=bool)
    covered[model.identity] = True
    for code in codes:
        if covered[code]:
            continue
        generators.append(int(code))
        covered[_closure(model, generators)] = True
        if np.count_nonzero(covered) == len(codes):
            break
    return generators


def flatten_model(model: GroupModel, family_tag: FamilySpec, max_order: int) -> GroupTable:
    """模型 → Cayley 表，元素 0 为单位元"""
    codes = _closure(model, model.generators(), limit=max_order)
    index_of = np.full(model.code_space, -1, dtype=np.int64)
    index_of[codes] = np.arange(codes.size)
    order = codes.size
    mul = np.empty((order, order), dtype=np.int32)
    for start in range(0, order, _ROW_BLOCK):
        block = codes[start:start + _ROW_BLOCK]
        products = np.asarray(model.compose(block[:, None], codes[None, :]), dtype=np.int64)
        rows = index_of[products]
        if rows.min() < 0:
            raise GroupAxiomError(f"{family_tag.display_name()}: 生成元闭包对乘法不封闭")
        mul[start:start + block.size] = rows
    labels = [model.label(int(c)) for c in codes]
    return make_table(mul, labels, family_tag)


# ===== 参数校验与阶 =====

def _prime_power(q: int) -> Tuple[int, int]:
    if not isinstance(q, int) or q < 2:
        raise ParameterError(f"q = {q} 不是素数幂")
    factors = factorint(q)
    if len(factors) != 1:
        raise ParameterError(f"q = {q} 不是素数幂")
    (p, n), = factors.items()
    return int(p), int(n)


def _require_prime(value: int, what: str) -> None:
    if not isinstance(value, int) or not isprime(value):
        raise ParameterError(f"{what} = {value} 不是素数")


def _count_params(spec: FamilySpec, k: int) -> None:
    if len(spec.params) != k:
        raise ParameterError(f"{spec.family.value} 需要 {k} 个参数，得到 {len(spec.params)}")


def expected_order(spec: FamilySpec) -> int:
    """
    按族参数计算群的阶，同时校验参数范围

    Raises:
        ParameterError: 参数不合法
    """
    f = spec.family
    if f is Family.PRODUCT:
        if not spec.factors or len(spec.factors) != 2:
            raise ParameterError("Product 需要两个因子")
        return expected_order(spec.factors[0]) * expected_order(spec.factors[1])
    if f in (Family.M16, Family.Z4_RTIMES_Z4, Family.D8_CENTRAL_Z4, Family.SG16_3, Family.F20):
        _count_params(spec, 0)
        return 20 if f is Family.F20 else 16
    if f is Family.HANAKI_B or f is Family.SEMIDIRECT_PQ:
        _count_params(spec, 2)
    else:
        _count_params(spec, 1)
    x = spec.param()
    if f is Family.CYCLIC:
        if x < 1:
            raise ParameterError(f"循环群的阶必须为正，得到 {x}")
        return x
    if f is Family.DIHEDRAL:
        if x % 2 or x < 6:
            raise ParameterError(f"二面体群 D:<阶> 要求阶为 ≥ 6 的偶数（D_2m, m > 2），得到 {x}")
        return x
    if f is Family.GEN_QUATERNION:
        if x % 4 or x < 8:
            raise ParameterError(f"广义四元数群 Q:<阶> 要求阶为 ≥ 8 的 4 的倍数，得到 {x}")
        return x
    if f is Family.QUASIDIHEDRAL:
        if x < 4:
            raise ParameterError(f"拟二面体群 QD_2^n 要求 n ≥ 4，得到 n = {x}")
        return 2 ** x
    if f is Family.ALTERNATING:
        if not 3 <= x <= 6:
            raise ParameterError(f"交错群次数须在 3..6，得到 {x}")
        return math.factorial(x) // 2
    if f is Family.SYMMETRIC:
        if not 2 <= x <= 5:
            raise ParameterError(f"对称群次数须在 2..5，得到 {x}")
        return math.factorial(x)
    if f in (Family.SL2, Family.GL2, Family.PSL2):
        p, _ = _prime_power(x)
        if f is Family.GL2:
            if x <= 2:
                raise ParameterError(f"GL(2,q) 要求 q > 2，得到 {x}")
            return (x * x - 1) * (x * x - x)
        if f is Family.PSL2 and (p != 2 or x < 4):
            raise ParameterError(f"PSL(2,q) 只支持 q = 2^k, k ≥ 2，得到 {x}")
        return x * (x * x - 1)
    if f is Family.HANAKI_A:
        if x < 1:
            raise ParameterError(f"A(n,ϑ) 要求 n ≥ 1，得到 {x}")
        return 4 ** x
    if f is Family.HANAKI_B:
        p, n = spec.params
        _require_prime(p, 'p')
        if n < 1:
            raise ParameterError(f"A(n,p) 要求 n ≥ 1，得到 {n}")
        return p ** (3 * n)
    if f is Family.SEMIDIRECT_PQ:
        p, q = spec.params
        _require_prime(p, 'p')
        _require_prime(q, 'q')
        if (q - 1) % p:
            raise ParameterError(f"要求 p | q-1，但 {p} ∤ {q - 1}")
        return p * q
    raise ParameterError(f"未知群族: {f}")


# ===== 各族构造 =====

def _metacyclic_params(spec: FamilySpec) -> Tuple[int, int, int, int]:
    f = spec.family
    if f is Family.DIHEDRAL:
        m = spec.param() // 2
        return m, 2, m - 1, 0
    if f is Family.GEN_QUATERNION:
        n = spec.param() // 4
        return 2 * n, 2, 2 * n - 1, n
    if f is Family.QUASIDIHEDRAL:
        n = spec.param()
        return 2 ** (n - 1), 2, 2 ** (n - 2) - 1, 0
    if f is Family.M16:
        return 8, 2, 5, 0
    if f is Family.Z4_RTIMES_Z4:
        return 4, 4, 3, 0
    if f is Family.F20:
        # b^{-1} a b = a^2 ⇔ b a b^{-1} = a^3
        return 5, 4, 3, 0
    p, q = spec.params
    r = next(r for r in range(2, q) if pow(r, p, q) == 1)
    return q, p, r, 0


def _model_for(spec: FamilySpec, max_field_order: Optional[int]) -> GroupModel:
    f = spec.family
    if f is Family.CYCLIC:
        return CyclicModel(spec.param())
    if f in (Family.DIHEDRAL, Family.GEN_QUATERNION, Family.QUASIDIHEDRAL, Family.M16,
             Family.Z4_RTIMES_Z4, Family.F20, Family.SEMIDIRECT_PQ):
        return MetacyclicModel(*_metacyclic_params(spec))
    if f is Family.SG16_3:
        return SG16Model()
    if f is Family.SYMMETRIC:
        n = spec.param()
        return PermutationModel(n, [_cycle_perm(n, [0, 1]), _cycle_perm(n, list(range(n)))])
    if f is Family.ALTERNATING:
        n = spec.param()
        return PermutationModel(n, [_cycle_perm(n, [k, k + 1, k + 2]) for k in range(n - 2)])
    if f in (Family.SL2, Family.GL2, Family.PSL2):
        q = spec.param()
        p, n = _prime_power(q)
        fld = construct_field(p, n, max_order=max_field_order)
        # 特征 2 时 SL(2,q) 中心平凡，PSL(2,q) = SL(2,q)
        return MatrixModel(field_tables(fld), q, det_one=f is not Family.GL2)
    if f is Family.HANAKI_A:
        n = spec.param()
        if n == 1:
            logger.warning("A(1,ϑ) 是交换群（Z4），其交换图没有定义")
        fld = construct_field(2, n, max_order=max_field_order)
        return HanakiAModel(field_tables(fld), fld.order)
    if f is Family.HANAKI_B:
        p, n = spec.params
        fld = construct_field(p, n, max_order=max_field_order)
        return HanakiBModel(field_tables(fld), fld.order)
    raise ParameterError(f"{f.value} 没有具体模型")


def _build_central_product(max_order: int, validate: bool) -> GroupTable:
    """D8 ∗ Z4 = (D8 × Z4)/N，N 把 a² 与 Z4 生成元的平方等同"""
    d8 = build_group(FamilySpec(Family.DIHEDRAL, (8,)), max_order=max_order, validate=validate)
    z4 = build_group(FamilySpec(Family.CYCLIC, (4,)), max_order=max_order, validate=validate)
    prod = direct_product(d8, z4, max_order=max_order)
    a_squared = next(x for x in center(d8).members() if x != d8.identity)
    c_squared = z4.product(1, 1)
    n = ElementSet.from_members(prod.order, [0, a_squared * z4.order + c_squared])
    return quotient_by_central(prod, n, family_tag=FamilySpec(Family.D8_CENTRAL_Z4))


@lru_cache(maxsize=64)
def _build_cached(spec: FamilySpec, max_order: int, max_field_order: Optional[int],
                  validate: bool) -> GroupTable:
    order = expected_order(spec)
    if order > max_order:
        raise CapExceededError('群的阶', order, max_order, 'COMMUTE_SPECTRA_MAX_ORDER')
    if spec.family is Family.PRODUCT:
        left, right = (_build_cached(part, max_order, max_field_order, validate) for part in spec.factors)
        table = direct_product(left, right, max_order=max_order, family_tag=spec)
    elif spec.family is Family.D8_CENTRAL_Z4:
        table = _build_central_product(max_order, validate)
    else:
        table = flatten_model(_model_for(spec, max_field_order), spec, max_order)
    if table.order != order:
        raise GroupAxiomError(f"{spec.display_name()}: 构造得到阶 {table.order}，应为 {order}")
    if validate:
        check_group_axioms(table)
    logger.info(f"构造 {spec.display_name()}：阶 {table.order}")
    return table


def build_group(spec: FamilySpec, max_order: Optional[int] = None,
                max_field_order: Optional[int] = None, validate: Optional[bool] = None) -> GroupTable:
    """
    按族描述构造群表

    Args:
        spec: 群族描述
        max_order: 群的阶上限，默认取配置 MAX_GROUP_ORDER
        max_field_order: 域的阶上限，默认取配置 MAX_FIELD_ORDER
        validate: 是否执行群公理校验，默认取配置 VALIDATE_TABLES

    Raises:
        ParameterError: 参数超出范围
        CapExceededError: 阶超过上限
    """
    config = get_config()
    cap = config.MAX_GROUP_ORDER if max_order is None else max_order
    field_cap = config.MAX_FIELD_ORDER if max_field_order is None else max_field_order
    validate = config.VALIDATE_TABLES if validate is None else validate
    return _build_cached(spec, cap, field_cap, validate)
