#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
整系数多项式

系数为 Python 任意精度整数，按常数项在前存储，末尾零系数被去除。
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .errors import ParameterError


def _normalize(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


@dataclass(frozen=True)
class IntPolynomial:
    """整系数多项式（不可变）"""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', _normalize(self.coeffs))

    @classmethod
    def constant(cls, c: int) -> 'IntPolynomial':
        return cls((c,))

    @classmethod
    def x(cls) -> 'IntPolynomial':
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Tuple[int, int]]) -> 'IntPolynomial':
        """由 (根, 重数) 构造 ∏ (x − λ)^k"""
        result = cls.constant(1)
        for value, multiplicity in roots:
            result = result * cls((-value, 1)).pow(multiplicity)
        return result

    @property
    def degree(self) -> int:
        """零多项式的次数记为 -1"""
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        """Horner 求值"""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(n))

    def __sub__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) - other.coefficient(i) for i in range(n))

    def __mul__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def pow(self, e: int) -> 'IntPolynomial':
        if e < 0:
            raise ParameterError("多项式幂次不能为负")
        result = IntPolynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divide_by_linear(self, root: int) -> Tuple['IntPolynomial', int]:
        """
        综合除法：self = (x − root)·商 + 余数

        Returns:
            (商, 余数)
        """
        if self.degree < 1:
            return IntPolynomial.constant(0), self.coeffs[0]
        high_first = list(reversed(self.coeffs))
        quotient = [high_first[0]]
        for c in high_first[1:]:
            quotient.append(c + root * quotient[-1])
        remainder = quotient.pop()
        return IntPolynomial(reversed(quotient)), remainder

    def trailing_zeros(self) -> int:
        """x 的最高整除幂次"""
        k = 0
        while k < len(self.coeffs) - 1 and self.coeffs[k] == 0:
            k += 1
        return k

    def shift_down(self, k: int) -> 'IntPolynomial':
        """除以 x^k（调用方保证整除）"""
        return IntPolynomial(self.coeffs[k:])

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0 and len(self.coeffs) > 1:
                continue
            sign = '-' if c < 0 else '+'
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = 'x' if k == 1 else f'x^{k}'
                body = power if mag == 1 else f'{mag}*{power}'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def expand_factored(factors: Sequence[Tuple[Sequence[int], int]]) -> IntPolynomial:
    """
    展开形如 ∏ f_i^{e_i} 的乘积

    Args:
        factors: (常数项在前的系数列表, 指数) 序列，例如 S4 的 (x²−5)² 写作 ([-5, 0, 1], 2)
    """
    result = IntPolynomial.constant(1)
    for coeffs, exponent in factors:
        result = result * IntPolynomial(tuple(coeffs)).pow(exponent)
    return result
