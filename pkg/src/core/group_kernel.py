#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群内核 - 以显式 Cayley 表表示的有限群

提供中心、中心化子、中心化子族、AC 判定、直积、中心商以及群公理校验。
所有表构造后只读，查询可并发执行。
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .errors import AbelianGroupError, CapExceededError, GroupAxiomError, ParameterError

logger = logging.getLogger(__name__)


class Family(Enum):
    """群族枚举"""
    CYCLIC = 'Cyclic'
    DIHEDRAL = 'Dihedral'
    GEN_QUATERNION = 'GenQuaternion'
    QUASIDIHEDRAL = 'Quasidihedral'
    M16 = 'M16'
    Z4_RTIMES_Z4 = 'Z4rtimesZ4'
    D8_CENTRAL_Z4 = 'D8centralZ4'
    SG16_3 = 'SG16_3'
    ALTERNATING = 'Alternating'
    SYMMETRIC = 'Symmetric'
    SL2 = 'SL2'
    GL2 = 'GL2'
    PSL2 = 'PSL2'
    F20 = 'F20'
    HANAKI_A = 'HanakiA'
    HANAKI_B = 'HanakiB'
    SEMIDIRECT_PQ = 'SemidirectPQ'
    PRODUCT = 'Product'


@dataclass(frozen=True)
class FamilySpec:
    """
    群族描述

    参数约定：Dihedral/GenQuaternion 为群的阶；Quasidihedral 为指数 n（阶 2^n）；
    HanakiB 为 (p, n)；SemidirectPQ 为 (p, q)；Product 使用 factors。
    """
    family: Family
    params: Tuple[int, ...] = ()
    factors: Optional[Tuple['FamilySpec', 'FamilySpec']] = None

    def param(self, i: int = 0) -> int:
        if i >= len(self.params):
            raise ParameterError(f"{self.family.value} 缺少第 {i + 1} 个参数")
        return self.params[i]

    def to_spec_string(self) -> str:
        """还原为 CLI 语法字符串"""
        f = self.family
        if f is Family.PRODUCT:
            left, right = self.factors
            right_text = right.to_spec_string()
            if right.family is Family.PRODUCT:
                right_text = f"({right_text})"
            return f"{left.to_spec_string()} x {right_text}"
        simple = {
            Family.M16: 'M16', Family.Z4_RTIMES_Z4: 'Z4sZ4', Family.D8_CENTRAL_Z4: 'D8cZ4',
            Family.SG16_3: 'SG16_3', Family.F20: 'F20',
        }
        if f in simple:
            return simple[f]
        prefix = {
            Family.CYCLIC: 'Z', Family.DIHEDRAL: 'D', Family.GEN_QUATERNION: 'Q',
            Family.ALTERNATING: 'A', Family.SYMMETRIC: 'S', Family.SL2: 'SL2', Family.GL2: 'GL2',
            Family.PSL2: 'PSL2', Family.HANAKI_A: 'HA', Family.HANAKI_B: 'HB',
            Family.SEMIDIRECT_PQ: 'PQ',
        }
        if f is Family.QUASIDIHEDRAL:
            return f"QD:{2 ** self.param()}"
        return ':'.join([prefix[f]] + [str(x) for x in self.params])

    def display_name(self) -> str:
        """文献中的记号，如 D6、QD16、PSL(2,4)"""
        f = self.family
        if f is Family.PRODUCT:
            return ' x '.join(part.display_name() for part in self.factors)
        if f is Family.CYCLIC:
            return f"Z{self.param()}"
        if f is Family.DIHEDRAL:
            return f"D{self.param()}"
        if f is Family.GEN_QUATERNION:
            return f"Q{self.param()}"
        if f is Family.QUASIDIHEDRAL:
            return f"QD{2 ** self.param()}"
        if f in (Family.ALTERNATING, Family.SYMMETRIC):
            return f"{f.value[0]}{self.param()}"
        if f in (Family.SL2, Family.GL2, Family.PSL2):
            return f"{f.value[:-1]}(2,{self.param()})"
        if f is Family.HANAKI_A:
            return f"A({self.param()},theta)"
        if f is Family.HANAKI_B:
            return f"A({self.param(1)},{self.param(0)})"
        if f is Family.SEMIDIRECT_PQ:
            return f"Z{self.param(1)}:Z{self.param(0)}"
        return {
            Family.M16: 'M16', Family.Z4_RTIMES_Z4: 'Z4:Z4', Family.D8_CENTRAL_Z4: 'D8*Z4',
            Family.SG16_3: 'SG(16,3)', Family.F20: 'Sz(2)',
        }[f]


def product_spec(left: FamilySpec, right: FamilySpec) -> FamilySpec:
    return FamilySpec(Family.PRODUCT, (), (left, right))


@dataclass(frozen=True, eq=False)
class GroupTable:
    """有限群的显式乘法表，元素 0 为单位元"""
    order: int
    mul: np.ndarray
    inv: np.ndarray
    labels: Tuple[str, ...]
    family_tag: FamilySpec
    identity: int = 0

    @property
    def name(self) -> str:
        return self.family_tag.display_name()

    @cached_property
    def commutes(self) -> np.ndarray:
        """commutes[x, y] ⇔ xy = yx"""
        table = self.mul == self.mul.T
        table.setflags(write=False)
        return table

    def product(self, x: int, y: int) -> int:
        return int(self.mul[x, y])

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ParameterError(f"{self.name} 中没有标签为 {label!r} 的元素")


@dataclass(frozen=True, eq=False)
class ElementSet:
    """父群元素上的成员标记"""
    flags: np.ndarray

    def __post_init__(self):
        self.flags.setflags(write=False)

    @property
    def size(self) -> int:
        return int(np.count_nonzero(self.flags))

    def __len__(self) -> int:
        return self.size

    def __contains__(self, x: int) -> bool:
        return bool(self.flags[x])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ElementSet) and np.array_equal(self.flags, other.flags)

    def __hash__(self) -> int:
        return hash(self.flags.tobytes())

    def members(self) -> Tuple[int, ...]:
        return tuple(int(x) for x in np.flatnonzero(self.flags))

    def issubset(self, other: 'ElementSet') -> bool:
        return bool(np.all(other.flags[self.flags]))

    def __and__(self, other: 'ElementSet') -> 'ElementSet':
        return ElementSet(self.flags & other.flags)

    @classmethod
    def from_members(cls, order: int, members: Iterable[int]) -> 'ElementSet':
        flags = np.zeros(order, dtype=bool)
        flags[list(members)] = True
        return cls(flags)


@dataclass(frozen=True)
class CentralizerFamily:
    """非中心元素的全部不同中心化子"""
    parent: GroupTable = field(repr=False)
    members: Tuple[ElementSet, ...]
    witnesses: Tuple[int, ...]  # 每个成员的最小非中心代表元

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(m.size for m in self.members)

    @property
    def size_multiset(self) -> Tuple[int, ...]:
        return tuple(sorted(self.sizes, reverse=True))


# ===== 查询 =====

def _check_element(g: GroupTable, x: int) -> int:
    if not 0 <= x < g.order:
        raise ParameterError(f"元素下标 {x} 不在 [0, {g.order}) 内")
    return int(x)


def is_abelian(g: GroupTable) -> bool:
    return bool(g.commutes.all())


def center(g: GroupTable) -> ElementSet:
    """Z(G) = {x : 对所有 y 有 xy = yx}，全表扫描"""
    return ElementSet(g.commutes.all(axis=1))


def centralizer(g: GroupTable, x: int) -> ElementSet:
    """C_G(x) = {y : xy = yx}"""
    x = _check_element(g, x)
    return ElementSet(g.commutes[x].copy())


def _require_non_abelian(g: GroupTable, what: str) -> None:
    if is_abelian(g):
        raise AbelianGroupError(f"{g.name} 是交换群，{what} 只对非交换群定义")


def centralizer_family(g: GroupTable) -> CentralizerFamily:
    """
    去重后的非中心元中心化子族

    顺序按最小非中心代表元下标确定。
    """
    _require_non_abelian(g, '中心化子族')
    z = center(g).flags
    seen: Dict[bytes, int] = {}
    members: List[ElementSet] = []
    witnesses: List[int] = []
    for x in np.flatnonzero(~z):
        row = g.commutes[x]
        key = row.tobytes()
        if key not in seen:
            seen[key] = len(members)
            members.append(ElementSet(row.copy()))
            witnesses.append(int(x))
    return CentralizerFamily(parent=g, members=tuple(members), witnesses=tuple(witnesses))


def is_ac_group(g: GroupTable, family: Optional[CentralizerFamily] = None) -> bool:
    """每个非中心元素的中心化子都交换时为 AC 群"""
    family = family or centralizer_family(g)
    for member in family.members:
        idx = np.flatnonzero(member.flags)
        if not g.commutes[np.ix_(idx, idx)].all():
            return False
    return True


def element_order(g: GroupTable, x: int) -> int:
    x = _check_element(g, x)
    k, y = 1, x
    while y != g.identity:
        y = int(g.mul[y, x])
        k += 1
    return k


def subgroup_generated(g: GroupTable, generators: Sequence[int]) -> ElementSet:
    flags = np.zeros(g.order, dtype=bool)
    flags[g.identity] = True
    frontier = np.array([g.identity])
    gens = np.array([_check_element(g, x) for x in generators], dtype=np.int64)
    while frontier.size and gens.size:
        products = np.unique(g.mul[np.ix_(frontier, gens)])
        frontier = products[~flags[products]]
        flags[frontier] = True
    return ElementSet(flags)


# ===== 构造 =====

def _order_cap(max_order: Optional[int]) -> int:
    return max_order if max_order is not None else get_config().MAX_GROUP_ORDER


def make_table(mul: np.ndarray, labels: Sequence[str], family_tag: FamilySpec) -> GroupTable:
    """由乘法表（单位元在 0）生成 GroupTable，逆元表由乘法表推出"""
    mul = np.ascontiguousarray(mul, dtype=np.int32)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1]:
        raise GroupAxiomError(f"乘法表形状不合法: {mul.shape}")
    is_identity = mul == 0
    if not np.all(is_identity.any(axis=1)):
        raise GroupAxiomError("存在没有逆元的元素")
    inv = np.argmax(is_identity, axis=1).astype(np.int32)
    mul.setflags(write=False)
    inv.setflags(write=False)
    return GroupTable(order=int(mul.shape[0]), mul=mul, inv=inv,
                      labels=tuple(labels), family_tag=family_tag)


def direct_product(g: GroupTable, h: GroupTable, max_order: Optional[int] = None,
                   family_tag: Optional[FamilySpec] = None) -> GroupTable:
    """
    直积 G × H，元素 (x, y) 编码为 x·|H| + y
    """
    cap = _order_cap(max_order)
    order = g.order * h.order
    if order > cap:
        raise CapExceededError('群的阶', order, cap, 'COMMUTE_SPECTRA_MAX_ORDER')
    m = h.order
    left = g.mul.astype(np.int64)
    right = h.mul.astype(np.int64)
    mul = (left[:, None, :, None] * m + right[None, :, None, :]).reshape(order, order)
    labels = [f"({lg},{lh})" for lg in g.labels for lh in h.labels]
    tag = family_tag or product_spec(g.family_tag, h.family_tag)
    return make_table(mul, labels, tag)


def quotient_by_central(g: GroupTable, n: ElementSet,
                        family_tag: Optional[FamilySpec] = None) -> GroupTable:
    """
    对中心子群 N 取商 G/N

    陪集按最小成员下标排序，单位元陪集为 0。

    Raises:
        ParameterError: N 不是子群或不含于中心
    """
    members = np.flatnonzero(n.flags)
    if g.identity not in n:
        raise ParameterError("N 不含单位元，不是子群")
    if not np.all(n.flags[g.mul[np.ix_(members, members)]]):
        raise ParameterError("N 对乘法不封闭，不是子群")
    if not n.issubset(center(g)):
        raise ParameterError("N 不含于中心")

    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps: List[int] = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.mul[x, members]] = len(reps)
            reps.append(x)
    rep_idx = np.array(reps)
    mul = coset_of[g.mul[np.ix_(rep_idx, rep_idx)]]
    labels = [g.labels[r] for r in reps]
    return make_table(mul, labels, family_tag or g.family_tag)


# ===== 校验 =====

def check_group_axioms(g: GroupTable, exhaustive_limit: Optional[int] = None,
                       samples: Optional[int] = None, seed: Optional[int] = None) -> None:
    """
    校验拉丁方、双边单位元、逆元表与结合律

    结合律在阶 ≤ exhaustive_limit 时穷举，否则用固定种子抽样三元组。

    Raises:
        GroupAxiomError: 任一公理不成立
    """
    config = get_config()
    exhaustive_limit = config.ASSOCIATIVITY_EXHAUSTIVE_LIMIT if exhaustive_limit is None else exhaustive_limit
    samples = config.ASSOCIATIVITY_SAMPLES if samples is None else samples
    seed = config.ASSOCIATIVITY_SEED if seed is None else seed

    mul, n, e = g.mul, g.order, g.identity
    ar = np.arange(n)
    if mul.shape != (n, n) or mul.min() < 0 or mul.max() >= n:
        raise GroupAxiomError(f"{g.name}: 乘法表取值越界")
    if not (np.array_equal(np.sort(mul, axis=1), np.broadcast_to(ar, (n, n)))
            and np.array_equal(np.sort(mul, axis=0), np.broadcast_to(ar[:, None], (n, n)))):
        raise GroupAxiomError(f"{g.name}: 乘法表不是拉丁方")
    if not (np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)):
        raise GroupAxiomError(f"{g.name}: 元素 {e} 不是双边单位元")
    if not (np.all(mul[ar, g.inv] == e) and np.all(mul[g.inv, ar] == e)):
        raise GroupAxiomError(f"{g.name}: 逆元表错误")

    if n <= exhaustive_limit:
        for a in range(n):
            if not np.array_equal(mul[mul[a]], mul[a][mul]):
                raise GroupAxiomError(f"{g.name}: 结合律在 a={a} 处不成立")
    else:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        bad = np.flatnonzero(mul[mul[a, b], c] != mul[a, mul[b, c]])
        if bad.size:
            k = bad[0]
            raise GroupAxiomError(f"{g.name}: 结合律在 ({a[k]},{b[k]},{c[k]}) 处不成立")
    logger.debug(f"{g.name} (阶 {n}) 通过群公理校验")


def group_to_json(g: GroupTable) -> Dict[str, Any]:
    """导出 {order, mul, identity, inv, labels, family}"""
    return {
        'order': g.order,
        'mul': g.mul.tolist(),
        'identity': g.identity,
        'inv': g.inv.tolist(),
        'labels': list(g.labels),
        'family': g.family_tag.to_spec_string(),
    }
