#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
查询层 - CLI 与 HTTP 服务共用的群信息与谱计算入口
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from .closed_forms import PredictedSpectrum, formula_for_spec
from .commuting_graph import build_commuting_graph, clique_decomposition
from .errors import ParameterError
from .exact_spectrum import (
    Spectrum, char_poly, clique_union_spectrum, integer_spectrum, spectrum_to_json,
)
from .group_families import build_group
from .group_kernel import FamilySpec, center, centralizer_family, is_abelian, is_ac_group
from .int_polynomial import IntPolynomial

logger = logging.getLogger(__name__)


class SpectrumMethod(Enum):
    """谱计算方式"""
    AUTO = 'auto'
    CHARPOLY = 'charpoly'
    CLIQUE = 'clique'
    FORMULA = 'formula'
    BOTH = 'both'


def parse_method(text: str) -> SpectrumMethod:
    try:
        return SpectrumMethod(text)
    except ValueError:
        choices = ', '.join(m.value for m in SpectrumMethod)
        raise ParameterError(f"未知的计算方式 {text!r}，可选: {choices}")


def group_info(spec: FamilySpec) -> Dict[str, Any]:
    """阶、中心阶、AC 标志、中心化子族大小；交换群没有交换图，相关字段为 None"""
    g = build_group(spec)
    info: Dict[str, Any] = {
        'group': spec.display_name(),
        'spec': spec.to_spec_string(),
        'order': g.order,
        'center_order': center(g).size,
        'abelian': is_abelian(g),
        'ac_flag': None,
        'centralizer_sizes': None,
        'vertex_count': None,
        'edge_count': None,
        'clique_sizes': None,
    }
    if info['abelian']:
        return info
    family = centralizer_family(g)
    cg = build_commuting_graph(g)
    decomposition = clique_decomposition(cg)
    info.update({
        'ac_flag': is_ac_group(g, family),
        'centralizer_sizes': list(family.size_multiset),
        'vertex_count': cg.vertex_count,
        'edge_count': cg.edge_count,
        'clique_sizes': list(decomposition.size_multiset()) if decomposition else None,
    })
    return info


@dataclass
class SpectrumResult:
    """一次谱查询的结果；BOTH 时 spectra 同时含 clique 与 charpoly"""
    group: str
    method: SpectrumMethod
    spectra: Dict[str, Spectrum] = field(default_factory=dict)
    charpoly: Optional[IntPolynomial] = None
    predicted: Optional[PredictedSpectrum] = None

    @property
    def agreement(self) -> Optional[bool]:
        if len(self.spectra) < 2:
            return None
        values = list(self.spectra.values())
        return all(v == values[0] for v in values[1:])

    @property
    def primary(self) -> Spectrum:
        return next(iter(self.spectra.values()))

    def to_json(self) -> Dict[str, Any]:
        if self.method is SpectrumMethod.BOTH:
            return {
                'group': self.group,
                'method': self.method.value,
                'spectra': {k: spectrum_to_json(v) for k, v in self.spectra.items()},
                'agreement': self.agreement,
            }
        (path, spectrum), = self.spectra.items()
        data = spectrum_to_json(spectrum)
        data.update({'group': self.group, 'method': path})
        if self.predicted is not None:
            data['provenance'] = self.predicted.provenance
            data['errata_flag'] = self.predicted.errata_flag
        return data


def compute_spectrum(spec: FamilySpec, method: SpectrumMethod = SpectrumMethod.AUTO) -> SpectrumResult:
    """
    按指定方式计算谱

    Raises:
        ParameterError: 方式与群不匹配（无闭式公式 / 没有团分解）
        AbelianGroupError: 交换群
        CapExceededError: 超过规模上限
    """
    result = SpectrumResult(group=spec.display_name(), method=method)
    if method is SpectrumMethod.FORMULA:
        predicted = formula_for_spec(spec)
        if predicted is None:
            raise ParameterError(f"{spec.display_name()} 没有闭式谱公式")
        result.predicted = predicted
        result.spectra['formula'] = predicted.spectrum
        return result

    g = build_group(spec)
    cg = build_commuting_graph(g)
    decomposition = clique_decomposition(cg)

    use_clique = method in (SpectrumMethod.CLIQUE, SpectrumMethod.BOTH) or (
        method is SpectrumMethod.AUTO and decomposition is not None)
    use_charpoly = method in (SpectrumMethod.CHARPOLY, SpectrumMethod.BOTH) or (
        method is SpectrumMethod.AUTO and decomposition is None)

    if use_clique:
        if decomposition is None:
            raise ParameterError(f"{spec.display_name()} 的交换图不是完全图的不交并，无法使用 clique 方式")
        result.spectra['clique'] = clique_union_spectrum(decomposition)
    if use_charpoly:
        result.charpoly = char_poly(cg)
        result.spectra['charpoly'] = integer_spectrum(result.charpoly)
    logger.info(f"{result.group} 的谱（{method.value}）: {result.primary}")
    return result
