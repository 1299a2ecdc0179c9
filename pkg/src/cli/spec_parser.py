#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
群描述字符串解析

语法：
    spec := term ('x' term)*          直积，左结合
    term := NAME (':' INT)* | '(' spec ')'

例：QD:16、D:6 x Z:3、PQ:3:7、HB:2:2。
D / Q / QD 的参数是群的阶（D:12 即 12 阶二面体群 D_{2·6}）。
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..core.errors import ParameterError, SpecSyntaxError
from ..core.group_kernel import Family, FamilySpec, product_spec

_TOKEN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<op>x)|(?P<name>[A-Za-wyz][A-Za-wyz0-9_]*)|(?P<punct>[:()]))')

# 名称 → (族, 参数个数)
_NAMES = {
    'Z': (Family.CYCLIC, 1),
    'D': (Family.DIHEDRAL, 1),
    'Q': (Family.GEN_QUATERNION, 1),
    'QD': (Family.QUASIDIHEDRAL, 1),
    'M16': (Family.M16, 0),
    'Z4sZ4': (Family.Z4_RTIMES_Z4, 0),
    'D8cZ4': (Family.D8_CENTRAL_Z4, 0),
    'SG16_3': (Family.SG16_3, 0),
    'A': (Family.ALTERNATING, 1),
    'S': (Family.SYMMETRIC, 1),
    'SL2': (Family.SL2, 1),
    'GL2': (Family.GL2, 1),
    'PSL2': (Family.PSL2, 1),
    'F20': (Family.F20, 0),
    'HA': (Family.HANAKI_A, 1),
    'HB': (Family.HANAKI_B, 2),
    'PQ': (Family.SEMIDIRECT_PQ, 2),
}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    offset: int  # 字节偏移


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode('utf-8'))


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise SpecSyntaxError(f"无法识别的字符 {text[start]!r}", text, _byte_offset(text, start))
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), _byte_offset(text, m.start(kind))))
        pos = m.end()
    tokens.append(_Token('end', '', _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: Optional[_Token] = None) -> SpecSyntaxError:
        tok = tok or self.peek()
        return SpecSyntaxError(message, self.text, tok.offset)

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            wanted = text or kind
            found = tok.text or '输入结束'
            raise self.error(f"期望 {wanted}，得到 {found}")
        return self.take()

    def parse(self) -> FamilySpec:
        spec = self.product()
        if self.peek().kind != 'end':
            raise self.error(f"多余的输入 {self.peek().text!r}")
        return spec

    def product(self) -> FamilySpec:
        spec = self.term()
        while self.peek().kind == 'op':
            self.take()
            spec = product_spec(spec, self.term())
        return spec

    def term(self) -> FamilySpec:
        tok = self.peek()
        if tok.kind == 'punct' and tok.text == '(':
            self.take()
            spec = self.product()
            self.expect('punct', ')')
            return spec
        name = self.expect('name')
        if name.text not in _NAMES:
            raise self.error(f"未知的群族 {name.text!r}", name)
        family, arity = _NAMES[name.text]
        params: List[Tuple[int, _Token]] = []
        while self.peek().kind == 'punct' and self.peek().text == ':':
            self.take()
            num = self.expect('int')
            params.append((int(num.text), num))
        if len(params) != arity:
            raise self.error(f"{name.text} 需要 {arity} 个参数，得到 {len(params)} 个", name)
        return _to_spec(family, [v for v, _ in params])


def _to_spec(family: Family, values: List[int]) -> FamilySpec:
    if family is Family.DIHEDRAL:
        order = values[0]
        if order < 6 or order % 2:
            raise ParameterError(f"D:<阶> 需要偶数阶 ≥ 6（D:12 即 D_{{2m}}, m = 6），得到 {order}")
    elif family is Family.GEN_QUATERNION:
        order = values[0]
        if order < 8 or order % 4:
            raise ParameterError(f"Q:<阶> 需要 4 的倍数且 ≥ 8，得到 {order}")
    elif family is Family.QUASIDIHEDRAL:
        order = values[0]
        if order < 16 or order & (order - 1):
            raise ParameterError(f"QD:<阶> 需要 2 的幂且 ≥ 16，得到 {order}")
        values = [order.bit_length() - 1]
    return FamilySpec(family, tuple(values))


def parse_group_spec(text: str) -> FamilySpec:
    """
    解析群描述字符串

    Raises:
        SpecSyntaxError: 语法错误（带字节偏移）
        ParameterError: D / Q / QD 的阶不合法
    """
    return _Parser(text).parse()
