#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
有限域 GF(p^n) 精确运算

元素用系数列表（常数项在前）表示的剩余多项式；模多项式取字典序最小的首一不可约多项式，
保证跨运行的元素编码一致。矩阵群构造使用 field_tables() 提供的整数编码运算表。
"""

import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from .config import get_config
from .errors import CapExceededError, FieldError, ParameterError

logger = logging.getLogger(__name__)

Poly = List[int]


# ===== GF(p)[x] 上的多项式工具（常数项在前） =====

def _trim(a: Poly) -> Poly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], m: Sequence[int], p: int) -> Poly:
    """a mod m，m 首一"""
    r = [c % p for c in a]
    dm = len(m) - 1
    for k in range(len(r) - 1, dm - 1, -1):
        c = r[k]
        if c:
            shift = k - dm
            for i, mc in enumerate(m):
                r[shift + i] = (r[shift + i] - c * mc) % p
    return _trim(r[:dm] if len(r) > dm else r)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> Tuple[Poly, Poly]:
    """一般除法（b 非零，首项可逆）"""
    r = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    db = len(b) - 1
    lead_inv = pow(b[-1], p - 2, p)
    if len(r) - 1 < db:
        return [], r
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] * lead_inv % p
        if c:
            q[k - db] = c
            for i, bc in enumerate(b):
                r[k - db + i] = (r[k - db + i] - c * bc) % p
    return _trim(q), _trim(r[:db])


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """对所有次数 1..n/2 的首一多项式做试除"""
    n = len(f) - 1
    if n <= 1:
        return True
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = list(low) + [1]
            _, r = _poly_divmod(f, divisor, p)
            if not r:
                return False
    return True


@lru_cache(maxsize=None)
def _smallest_irreducible(p: int, n: int) -> Tuple[int, ...]:
    # itertools.product 的顺序即常数项优先的字典序
    for low in itertools.product(range(p), repeat=n):
        candidate = list(low) + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise FieldError(f"GF({p})[x] 中找不到 {n} 次不可约多项式")  # 不会发生


# ===== 域与元素 =====

@dataclass(frozen=True)
class FiniteField:
    """有限域 GF(p^n)"""
    p: int
    n: int
    modulus: Tuple[int, ...]  # 首一 n 次，常数项在前

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def zero(self) -> 'FieldElement':
        return FieldElement((0,) * self.n, self)

    @property
    def one(self) -> 'FieldElement':
        return FieldElement((1,) + (0,) * (self.n - 1), self)

    @property
    def generator_x(self) -> 'FieldElement':
        """剩余类 x（n = 1 时即模多项式的根）"""
        if self.n == 1:
            return self.from_int((-self.modulus[0]) % self.p)
        return FieldElement((0, 1) + (0,) * (self.n - 2), self)

    def element(self, coeffs: Sequence[int]) -> 'FieldElement':
        """由系数构造元素，系数自动约化"""
        reduced = _poly_mod(list(coeffs), self.modulus, self.p)
        return FieldElement(tuple(reduced) + (0,) * (self.n - len(reduced)), self)

    def from_int(self, code: int) -> 'FieldElement':
        """整数编码 Σ c_i p^i → 元素"""
        if not 0 <= code < self.order:
            raise FieldError(f"编码 {code} 不在 [0, {self.order}) 内")
        coeffs = []
        for _ in range(self.n):
            code, c = divmod(code, self.p)
            coeffs.append(c)
        return FieldElement(tuple(coeffs), self)

    def elements(self) -> Iterator['FieldElement']:
        for code in range(self.order):
            yield self.from_int(code)

    def describe_modulus(self) -> str:
        return format_poly(self.modulus)

    def __str__(self) -> str:
        return f"GF({self.p}^{self.n})" if self.n > 1 else f"GF({self.p})"


@dataclass(frozen=True)
class FieldElement:
    """GF(p^n) 的元素，不可变，值语义"""
    coeffs: Tuple[int, ...]
    field: FiniteField

    def __post_init__(self):
        if len(self.coeffs) != self.field.n:
            raise FieldError(f"系数长度 {len(self.coeffs)} 与扩张次数 {self.field.n} 不符")
        if any(not 0 <= c < self.field.p for c in self.coeffs):
            raise FieldError(f"系数 {self.coeffs} 不在 [0, {self.field.p}) 内")

    def to_int(self) -> int:
        code = 0
        for c in reversed(self.coeffs):
            code = code * self.field.p + c
        return code

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: 'FieldElement') -> 'FieldElement':
        return field_arith(self.field, 'add', self, other)

    def __sub__(self, other: 'FieldElement') -> 'FieldElement':
        return field_arith(self.field, 'sub', self, other)

    def __mul__(self, other: 'FieldElement') -> 'FieldElement':
        return field_arith(self.field, 'mul', self, other)

    def __neg__(self) -> 'FieldElement':
        return field_arith(self.field, 'neg', self)

    def inverse(self) -> 'FieldElement':
        return field_arith(self.field, 'inv', self)

    def __str__(self) -> str:
        return format_element(self)


def format_poly(coeffs: Sequence[int], var: str = 'x') -> str:
    """常数项在前的系数 → 'x^2 + x + 1' 形式"""
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return ' + '.join(terms) if terms else '0'


def format_element(x: FieldElement) -> str:
    if x.field.n == 1:
        return str(x.coeffs[0])
    return format_poly(x.coeffs).replace(' ', '')


def construct_field(p: int, n: int, max_order: Optional[int] = None) -> FiniteField:
    """
    构造 GF(p^n)

    Args:
        p: 特征（素数）
        n: 扩张次数 (≥1)
        max_order: 域的阶上限，默认取配置 MAX_FIELD_ORDER
    """
    if not isinstance(p, int) or not isprime(p):
        raise ParameterError(f"特征 {p} 不是素数")
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f"扩张次数必须为正整数，得到 {n}")
    cap = max_order if max_order is not None else get_config().MAX_FIELD_ORDER
    if p ** n > cap:
        raise CapExceededError('域的阶', p ** n, cap, 'COMMUTE_SPECTRA_MAX_FIELD')
    modulus = _smallest_irreducible(p, n)
    fld = FiniteField(p=p, n=n, modulus=modulus)
    logger.debug(f"构造 {fld}，模多项式 {fld.describe_modulus()}")
    return fld


def _check_operand(fld: FiniteField, x: Optional[FieldElement], name: str) -> FieldElement:
    if x is None:
        raise FieldError(f"运算缺少操作数 {name}")
    if x.field != fld:
        raise FieldError(f"操作数 {name} 属于 {x.field}，与 {fld} 混用")
    return x


def _inverse_coeffs(fld: FiniteField, x: FieldElement) -> List[int]:
    p = fld.p
    if fld.n == 1:
        return [pow(x.coeffs[0], p - 2, p)]
    # 多项式扩展欧几里得：s·x + t·m = g
    r0, r1 = list(fld.modulus), _trim(list(x.coeffs))
    s0, s1 = [], [1]
    while r1:
        q, r = _poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, p), p)
    # r0 为非零常数
    c_inv = pow(r0[0], p - 2, p)
    return [c * c_inv % p for c in s0]


def field_arith(fld: FiniteField, op: str, x: FieldElement, y: Optional[FieldElement] = None) -> FieldElement:
    """
    域运算 op ∈ {add, sub, mul, inv, neg}

    Raises:
        FieldError: 零元求逆、混用不同域的操作数、未知运算
    """
    x = _check_operand(fld, x, 'x')
    p = fld.p
    if op == 'neg':
        return FieldElement(tuple((-c) % p for c in x.coeffs), fld)
    if op == 'inv':
        if x.is_zero():
            raise FieldError("零元不可逆")
        return fld.element(_inverse_coeffs(fld, x))
    if op not in ('add', 'sub', 'mul'):
        raise FieldError(f"未知运算: {op}")
    y = _check_operand(fld, y, 'y')
    if op == 'add':
        return FieldElement(tuple((a + b) % p for a, b in zip(x.coeffs, y.coeffs)), fld)
    if op == 'sub':
        return FieldElement(tuple((a - b) % p for a, b in zip(x.coeffs, y.coeffs)), fld)
    return fld.element(_poly_mul(x.coeffs, y.coeffs, p))


def power(fld: FiniteField, x: FieldElement, e: int) -> FieldElement:
    result, base = fld.one, x
    while e:
        if e & 1:
            result = field_arith(fld, 'mul', result, base)
        base = field_arith(fld, 'mul', base, base)
        e >>= 1
    return result


def frobenius(fld: FiniteField, x: FieldElement) -> FieldElement:
    """Frobenius 自同构 x ↦ x^p（特征 2 时即 x ↦ x²）"""
    _check_operand(fld, x, 'x')
    return power(fld, x, fld.p)


# ===== 整数编码运算表（供矩阵群批量构造） =====

@dataclass(frozen=True)
class FieldTables:
    """元素按 to_int() 编码后的运算表"""
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray   # inv[0] 记为 0，不应被使用
    frob: np.ndarray
    labels: Tuple[str, ...]


@lru_cache(maxsize=32)
def field_tables(fld: FiniteField) -> FieldTables:
    q = fld.order
    if q > 4096:
        raise CapExceededError('运算表的域阶', q, 4096)
    elems = list(fld.elements())
    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for i, x in enumerate(elems):
        for j in range(i, q):
            y = elems[j]
            add[i, j] = add[j, i] = field_arith(fld, 'add', x, y).to_int()
            mul[i, j] = mul[j, i] = field_arith(fld, 'mul', x, y).to_int()
    neg = np.array([field_arith(fld, 'neg', x).to_int() for x in elems], dtype=np.int64)
    inv = np.array([0] + [field_arith(fld, 'inv', x).to_int() for x in elems[1:]], dtype=np.int64)
    frob = np.array([frobenius(fld, x).to_int() for x in elems], dtype=np.int64)
    for arr in (add, mul, neg, inv, frob):
        arr.setflags(write=False)
    return FieldTables(add=add, mul=mul, neg=neg, inv=inv, frob=frob,
                       labels=tuple(format_element(x) for x in elems))
