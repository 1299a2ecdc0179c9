#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
命令行前端

    info <spec> [--json]
    spectrum <spec> [--method auto|charpoly|clique|formula|both] [--json]
    verify [--filter <子串>] [--jobs N] [--json <路径>] [--runtimes] [--timings <路径>]
    export-dot <spec> [--out <路径>]
    export-table <spec> --out <路径>

退出码：0 成功/全部匹配，1 不匹配，2 用法错误，3 超过规模上限。
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

import pandas as pd

from ..core.analysis import SpectrumMethod, compute_spectrum, group_info, parse_method
from ..core.commuting_graph import build_commuting_graph, export_dot
from ..core.config import get_config
from ..core.errors import CapExceededError, CommuteSpectraError, SpecSyntaxError, ValidationError
from ..core.exact_spectrum import Spectrum
from ..core.group_families import build_group
from ..core.group_kernel import group_to_json
from ..core.verifier import default_suite, filter_cases, run_suite
from ..utils.logging_setup import setup_logging
from ..utils.performance_timer import PerformanceTimer
from .spec_parser import parse_group_spec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3

_SPEC_HELP = ("群描述，如 QD:16、D:6 x Z:3、PQ:3:7。D/Q/QD 取群的阶："
              "D:12 是 12 阶二面体群（文献记号 D12 或 D_{2·6}）")


def _dump(data: Dict[str, Any]) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _spectrum_table(s: Spectrum) -> str:
    frame = pd.DataFrame(
        [{'特征值': v, '重数': k} for v, k in s.integer_eigenvalues],
        columns=['特征值', '重数'],
    )
    lines = [frame.to_string(index=False)]
    if not s.is_integral:
        lines.append(f"剩余因子: {s.residual}")
    lines.append(f"整谱: {'是' if s.is_integral else '否'}")
    return '\n'.join(lines)


def cmd_info(args) -> int:
    info = group_info(parse_group_spec(args.spec))
    if args.json:
        print(_dump(info))
        return EXIT_OK
    yes_no = {True: '是', False: '否', None: '-'}
    print(f"群: {info['group']} ({info['spec']})")
    print(f"阶: {info['order']}")
    print(f"中心阶: {info['center_order']}")
    print(f"AC 群: {yes_no[info['ac_flag']]}")
    if info['centralizer_sizes'] is not None:
        print(f"中心化子阶: {', '.join(str(x) for x in info['centralizer_sizes'])}")
        print(f"交换图: {info['vertex_count']} 个顶点, {info['edge_count']} 条边")
    if info['clique_sizes'] is not None:
        print(f"团分解: {', '.join(str(x) for x in info['clique_sizes'])}")
    return EXIT_OK


def cmd_spectrum(args) -> int:
    method = parse_method(args.method)
    result = compute_spectrum(parse_group_spec(args.spec), method)
    if args.json:
        print(_dump(result.to_json()))
    else:
        print(f"群: {result.group}")
        for path, spectrum in result.spectra.items():
            print(f"\n[{path}]")
            print(_spectrum_table(spectrum))
        if result.agreement is not None:
            print(f"\n两种方式一致: {'是' if result.agreement else '否'}")
    if result.agreement is False:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args) -> int:
    cases = filter_cases(default_suite(), args.filter)
    timer = PerformanceTimer()
    report = run_suite(cases, parallelism=args.jobs, timer=timer)
    if args.timings:
        timer.export_to_json(args.timings)
    if args.json:
        with open(args.json, 'w', encoding='utf-8') as f:
            f.write(_dump(report.to_json(include_runtimes=args.runtimes)) + '\n')
        logger.info(f"报告已写入 {args.json}")
    frame = report.summary_frame()
    if not frame.empty:
        print(frame.to_string(index=False))
    summary = report.summary()
    print(f"\n共 {summary['total']} 个用例：匹配 {summary['matched']}，"
          f"不匹配 {summary['mismatched']}，错误 {summary['errored']}")
    return EXIT_OK if report.all_matched else EXIT_MISMATCH


def cmd_export_dot(args) -> int:
    cg = build_commuting_graph(build_group(parse_group_spec(args.spec)))
    text = export_dot(cg)
    if args.out:
        with open(args.out, 'w', encoding='utf-8') as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_export_table(args) -> int:
    g = build_group(parse_group_spec(args.spec))
    with open(args.out, 'w', encoding='utf-8') as f:
        json.dump(group_to_json(g), f, ensure_ascii=False)
        f.write('\n')
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='commute_spectra', description='有限群交换图的精确谱计算')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='日志级别 (默认: 配置中的 LOG_LEVEL)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('info', help='群的阶、中心、AC 标志与中心化子族')
    p.add_argument('spec', help=_SPEC_HELP)
    p.add_argument('--json', action='store_true', help='输出 JSON')
    p.set_defaults(func=cmd_info)

    p = sub.add_parser('spectrum', help='交换图的谱')
    p.add_argument('spec', help=_SPEC_HELP)
    p.add_argument('--method', default='auto', choices=[m.value for m in SpectrumMethod],
                   help='auto: 有团分解时走 clique，否则 charpoly (默认: auto)')
    p.add_argument('--json', action='store_true', help='输出 JSON')
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser('verify', help='运行默认验证套件')
    p.add_argument('--filter', default=None, help='只运行用例 id 或群名包含该子串的用例')
    p.add_argument('--jobs', type=int, default=None, help='并发线程数 (默认: VERIFY_JOBS)')
    p.add_argument('--json', default=None, metavar='PATH', help='报告 JSON 输出路径')
    p.add_argument('--runtimes', action='store_true', help='JSON 中包含各阶段耗时')
    p.add_argument('--timings', default=None, metavar='PATH', help='各阶段计时记录与最慢步骤的 JSON 输出路径')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('export-dot', help='导出交换图 DOT')
    p.add_argument('spec', help=_SPEC_HELP)
    p.add_argument('--out', default=None, help='输出路径 (默认: 标准输出)')
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser('export-table', help='导出乘法表 JSON')
    p.add_argument('spec', help=_SPEC_HELP)
    p.add_argument('--out', required=True, help='输出路径')
    p.set_defaults(func=cmd_export_table)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """主函数，返回退出码"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    setup_logging(get_config(), args.log_level)
    try:
        return args.func(args)
    except SpecSyntaxError as e:
        print(f"错误: {e}", file=sys.stderr)
        print(f"  {e.text}\n  {' ' * len(e.text.encode('utf-8')[:e.offset].decode('utf-8', 'ignore'))}^",
              file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as e:
        hint = f"，可通过 {e.setting} 调整" if e.setting else ''
        print(f"错误: {e}（上限 {e.cap}{hint}）", file=sys.stderr)
        return EXIT_CAP
    except ValidationError as e:
        logger.error(f"精确计算校验失败: {e}")
        return EXIT_MISMATCH
    except (CommuteSpectraError, ValueError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_USAGE
