#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
验证套件

逐个用例：建群 → 建交换图 → 团分解路径 / 特征多项式路径 → 与闭式公式比较。
单个用例失败只记录，不中断套件；报告按用例顺序确定性合并。
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .closed_forms import (
    evaluate_formula, literal_ac_times_abelian_display, literal_pq_display,
)
from .commuting_graph import build_commuting_graph, clique_decomposition, complement_edge_count
from .config import get_config
from .errors import CommuteSpectraError
from .exact_spectrum import (
    Spectrum, char_poly, clique_union_spectrum, integer_spectrum, spectrum_to_json,
)
from .group_families import build_group
from .group_kernel import (
    Family, FamilySpec, center, centralizer_family, is_ac_group, product_spec,
)
from .int_polynomial import expand_factored
from ..utils.performance_timer import PerformanceTimer

logger = logging.getLogger(__name__)


class Method(Enum):
    """谱计算路径"""
    CLIQUE = 'clique'
    CHARPOLY = 'charpoly'
    BOTH = 'both'


@dataclass(frozen=True)
class VerificationCase:
    """
    单个验证用例

    期望值二选一：formula + params（闭式公式），或 literal_factors（展开后逐系数比较特征多项式）。
    """
    spec: FamilySpec
    method: Method
    formula: Optional[str] = None
    params: Tuple[Any, ...] = ()
    literal_factors: Optional[Tuple[Tuple[Tuple[int, ...], int], ...]] = None
    expected_integral: bool = True
    tags: Tuple[str, ...] = ()
    errata: Optional[str] = None

    @property
    def case_id(self) -> str:
        return self.spec.to_spec_string()

    @property
    def name(self) -> str:
        return self.spec.display_name()


@dataclass
class VerificationReport:
    """验证报告"""
    records: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def all_matched(self) -> bool:
        return all(r['match'] for r in self.records)

    def summary(self) -> Dict[str, Any]:
        errored = sum(1 for r in self.records if r.get('error'))
        matched = sum(1 for r in self.records if r['match'])
        by_tag: Dict[str, Dict[str, int]] = {}
        for r in self.records:
            for tag in r['tags']:
                entry = by_tag.setdefault(tag, {'cases': 0, 'integral': 0})
                entry['cases'] += 1
                if r.get('integral'):
                    entry['integral'] += 1
        return {
            'total': len(self.records),
            'matched': matched,
            'mismatched': len(self.records) - matched - errored,
            'errored': errored,
            'tags': {k: by_tag[k] for k in sorted(by_tag)},
        }

    def to_json(self, include_runtimes: bool = False) -> Dict[str, Any]:
        records = []
        for r in self.records:
            r = dict(r)
            if not include_runtimes:
                r.pop('runtime', None)
            records.append(r)
        return {'records': records, 'summary': self.summary(), 'all_matched': self.all_matched}

    def summary_frame(self) -> pd.DataFrame:
        """人读表格"""
        rows = [{
            'case': r['case_id'],
            'order': r.get('order'),
            '|Z|': r.get('center_order'),
            'AC': r.get('ac_flag'),
            'integral': r.get('integral'),
            'match': r['match'],
            'errata': r.get('errata_flag', False),
            'note': r.get('error') or '',
        } for r in self.records]
        return pd.DataFrame(rows, columns=['case', 'order', '|Z|', 'AC', 'integral', 'match', 'errata', 'note'])


# ---------------------------------------------------------------------------
# 默认套件
# ---------------------------------------------------------------------------

def _s(family: Family, *params: int) -> FamilySpec:
    return FamilySpec(family, tuple(params))


def _x(left: FamilySpec, right: FamilySpec) -> FamilySpec:
    return product_spec(left, right)


_ORDER16 = ('central_quotient_pp', (2, 4))

S4_FACTORS = (((-1, 1), 7), ((1, 1), 10), ((-5, 0, 1), 2), ((-2, -3, 1), 1))

# (spec, formula, params)
_PLANAR = [
    (_s(Family.DIHEDRAL, 6), 'dihedral', (3,)),
    (_s(Family.DIHEDRAL, 8), 'dihedral', (4,)),
    (_s(Family.DIHEDRAL, 10), 'dihedral', (5,)),
    (_s(Family.DIHEDRAL, 12), 'dihedral', (6,)),
    (_s(Family.GEN_QUATERNION, 8), 'quaternion', (2,)),
    (_s(Family.GEN_QUATERNION, 12), 'quaternion', (3,)),
    (_x(_s(Family.CYCLIC, 2), _s(Family.DIHEDRAL, 8)),) + _ORDER16,
    (_x(_s(Family.CYCLIC, 2), _s(Family.GEN_QUATERNION, 8)),) + _ORDER16,
    (_s(Family.M16),) + _ORDER16,
    (_s(Family.Z4_RTIMES_Z4),) + _ORDER16,
    (_s(Family.D8_CENTRAL_Z4),) + _ORDER16,
    (_s(Family.SG16_3),) + _ORDER16,
    (_s(Family.ALTERNATING, 4), 'fixed', ('A4',)),
    (_s(Family.ALTERNATING, 5), 'psl2', (2,)),
    (_s(Family.SYMMETRIC, 4), None, ()),
    (_s(Family.SL2, 3), 'fixed', ('SL23',)),
    (_s(Family.F20), 'sz2_quotient', (1,)),
]

_TOROIDAL = [
    (_s(Family.DIHEDRAL, 14), 'dihedral', (7,)),
    (_s(Family.DIHEDRAL, 16), 'dihedral', (8,)),
    (_s(Family.GEN_QUATERNION, 16), 'quaternion', (4,)),
    (_s(Family.QUASIDIHEDRAL, 4), 'quasidihedral', (4,)),
    (_x(_s(Family.DIHEDRAL, 6), _s(Family.CYCLIC, 3)), 'ac_times_abelian', ((3, 2, 2, 2), 1, 3)),
    (_x(_s(Family.ALTERNATING, 4), _s(Family.CYCLIC, 2)), 'ac_times_abelian', ((4, 3, 3, 3, 3), 1, 2)),
    (_s(Family.SEMIDIRECT_PQ, 3, 7), 'pq', (3, 7)),
]

_COMPLEMENT = [_s(Family.DIHEDRAL, 6), _s(Family.DIHEDRAL, 8), _s(Family.GEN_QUATERNION, 8)]

_SWEEPS = (
    [(_s(Family.DIHEDRAL, 2 * m), 'dihedral', (m,)) for m in range(3, 11)]
    + [(_s(Family.GEN_QUATERNION, 4 * n), 'quaternion', (n,)) for n in range(2, 9)]
    + [(_s(Family.QUASIDIHEDRAL, n), 'quasidihedral', (n,)) for n in (4, 5)]
    + [(_s(Family.PSL2, 2 ** k), 'psl2', (k,)) for k in (2, 3)]
    + [(_s(Family.GL2, q), 'gl2', (q,)) for q in (3, 4, 5)]
    + [(_s(Family.HANAKI_A, n), 'hanaki_a', (n,)) for n in (2, 3)]
    + [(_s(Family.HANAKI_B, p, n), 'hanaki_b', (p, n)) for p, n in ((2, 1), (3, 1), (2, 2))]
    + [(_s(Family.SEMIDIRECT_PQ, p, q), 'pq', (p, q)) for p, q in ((3, 7), (5, 11), (3, 13))]
    + [(_x(_s(Family.F20), _s(Family.CYCLIC, 2)), 'sz2_quotient', (2,))]
)

_ERRATA_FORMULAS = {'pq', 'ac_times_abelian'}


def default_suite(both_limit: Optional[int] = None) -> List[VerificationCase]:
    """
    默认验证用例：平面列表、环面列表、补图平面列表以及各族参数扫描

    同一个群出现在多个列表中时合并为一个用例，标签取并集。
    顶点数不超过 both_limit 的用例同时走两条路径，其余只走团分解路径；S4 只走特征多项式路径。
    both_limit 默认取 BOTH_METHOD_VERTEX_LIMIT，未设置时取 SPECTRAL_CAP；两者取较小值。
    """
    if both_limit is None:
        config = get_config()
        both_limit = min(config.BOTH_METHOD_VERTEX_LIMIT or config.SPECTRAL_CAP, config.SPECTRAL_CAP)
    entries: Dict[FamilySpec, Dict[str, Any]] = {}

    def add(spec, formula, params, tag):
        entry = entries.setdefault(spec, {'formula': formula, 'params': params, 'tags': []})
        if tag not in entry['tags']:
            entry['tags'].append(tag)

    for spec, formula, params in _PLANAR:
        add(spec, formula, params, 'planar')
    for spec, formula, params in _TOROIDAL:
        add(spec, formula, params, 'toroidal')
    for spec in _COMPLEMENT:
        add(spec, None, None, 'complement')
    for spec, formula, params in _SWEEPS:
        add(spec, formula, params, 'sweep')

    cases = []
    for spec, entry in entries.items():
        tags = tuple(entry['tags'])
        if spec.family is Family.SYMMETRIC:
            cases.append(VerificationCase(spec, Method.CHARPOLY, literal_factors=S4_FACTORS,
                                          expected_integral=False, tags=tags))
            continue
        formula, params = entry['formula'], entry['params']
        vertex_count = evaluate_formula(formula, params).vertex_count
        method = Method.BOTH if vertex_count <= both_limit else Method.CLIQUE
        errata = formula if formula in _ERRATA_FORMULAS else None
        cases.append(VerificationCase(spec, method, formula, params, tags=tags, errata=errata))
    return cases


# ---------------------------------------------------------------------------
# 执行
# ---------------------------------------------------------------------------

def _centralizers_meet_in_center(g, family) -> bool:
    z = center(g)
    return all((a & b) == z for a, b in combinations(family.members, 2))


def _errata_record(case: VerificationCase) -> Optional[Dict[str, Any]]:
    if case.errata == 'pq':
        return literal_pq_display(*case.params).to_json()
    if case.errata == 'ac_times_abelian':
        return literal_ac_times_abelian_display(*case.params).to_json()
    return None


def run_case(case: VerificationCase, timer: Optional[PerformanceTimer] = None) -> Dict[str, Any]:
    """执行单个用例，异常记录在 error 字段中"""
    timer = timer or PerformanceTimer()
    cid = case.case_id
    record: Dict[str, Any] = {
        'case_id': cid,
        'group': case.name,
        'method': case.method.value,
        'tags': list(case.tags),
        'expected_integral': case.expected_integral,
        'match': False,
    }
    try:
        with timer.time_step(f"{cid}.build"):
            g = build_group(case.spec)
        family = centralizer_family(g)
        ac = is_ac_group(g, family)
        record.update({
            'order': g.order,
            'center_order': center(g).size,
            'ac_flag': ac,
            'centralizer_sizes': list(family.size_multiset),
        })
        if ac:
            record['ac_intersections_ok'] = _centralizers_meet_in_center(g, family)

        with timer.time_step(f"{cid}.graph"):
            cg = build_commuting_graph(g)
            decomposition = clique_decomposition(cg)
        record['vertex_count'] = cg.vertex_count
        record['edge_count'] = cg.edge_count
        record['clique_sizes'] = list(decomposition.size_multiset()) if decomposition else None
        if 'complement' in case.tags:
            record['complement_edge_count'] = complement_edge_count(cg)

        ok = True
        clique_spec: Optional[Spectrum] = None
        poly_spec: Optional[Spectrum] = None
        poly = None
        if case.method in (Method.CLIQUE, Method.BOTH):
            if decomposition is None:
                raise CommuteSpectraError(f"{case.name} 的交换图不是完全图的不交并")
            with timer.time_step(f"{cid}.clique"):
                clique_spec = clique_union_spectrum(decomposition)
        if case.method in (Method.CHARPOLY, Method.BOTH):
            with timer.time_step(f"{cid}.charpoly"):
                poly = char_poly(cg)
                poly_spec = integer_spectrum(poly)
            v = cg.vertex_count
            identities = poly.coefficient(v - 1) == 0 and poly.coefficient(v - 2) == -cg.edge_count
            record['charpoly_identities_ok'] = identities
            ok = ok and identities
        if clique_spec is not None and poly_spec is not None:
            record['agreement'] = clique_spec == poly_spec
            ok = ok and record['agreement']

        brute = poly_spec if poly_spec is not None else clique_spec
        record['brute'] = spectrum_to_json(brute)
        record['integral'] = brute.is_integral

        if case.literal_factors is not None:
            expected_poly = expand_factored(case.literal_factors)
            record['charpoly'] = poly.to_json()
            record['predicted'] = {'charpoly': expected_poly.to_json()}
            record['errata_flag'] = False
            ok = ok and poly == expected_poly
        else:
            predicted = evaluate_formula(case.formula, case.params)
            record['predicted'] = predicted.to_json()
            record['errata_flag'] = predicted.errata_flag
            ok = ok and brute == predicted.spectrum

        errata = _errata_record(case)
        if errata is not None:
            record['errata'] = errata
            ok = ok and errata['literal_fails']

        record['integrality_ok'] = brute.is_integral == case.expected_integral
        ok = ok and record['integrality_ok'] and record.get('ac_intersections_ok', True)
        record['match'] = bool(ok)
        if not ok:
            logger.warning(f"用例 {cid} 不匹配")
    except Exception as e:
        logger.error(f"用例 {cid} 执行失败: {e}")
        record['error'] = f"{type(e).__name__}: {e}"
        record['match'] = False
    record['runtime'] = timer.durations_for(cid)
    return record


def run_suite(cases: Sequence[VerificationCase], parallelism: Optional[int] = None,
              timer: Optional[PerformanceTimer] = None) -> VerificationReport:
    """
    执行用例列表

    Args:
        cases: 用例
        parallelism: 并发线程数，默认取配置 VERIFY_JOBS
        timer: 性能计时器，默认新建
    """
    parallelism = get_config().VERIFY_JOBS if parallelism is None else parallelism
    timer = timer or PerformanceTimer()
    logger.info(f"开始验证 {len(cases)} 个用例，并发 {parallelism}")
    if parallelism > 1 and len(cases) > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as executor:
            records = list(executor.map(lambda c: run_case(c, timer), cases))
    else:
        records = [run_case(c, timer) for c in cases]
    report = VerificationReport(records)
    summary = report.summary()
    logger.info(f"验证完成：{summary['matched']}/{summary['total']} 匹配，{summary['errored']} 个错误")
    return report


def filter_cases(cases: Sequence[VerificationCase], substring: Optional[str]) -> List[VerificationCase]:
    """按用例 id 或群名的子串过滤"""
    if not substring:
        return list(cases)
    return [c for c in cases if substring in c.case_id or substring in c.name]
