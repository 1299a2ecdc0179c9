#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Flask服务端 - 交换图谱查询接口
提供群信息查询、谱计算、交换图导出和验证套件执行功能
"""

import logging
import time
from typing import Any, Dict, Optional, Tuple

from flask import Flask, Response, jsonify, request
from flask_cors import CORS

from ..cli.spec_parser import parse_group_spec
from ..core.analysis import compute_spectrum, group_info, parse_method
from ..core.commuting_graph import build_commuting_graph, export_dot, graph_to_json
from ..core.config import get_config
from ..core.errors import CapExceededError, CommuteSpectraError, SpecSyntaxError, ValidationError
from ..core.group_families import build_group
from ..core.verifier import default_suite, filter_cases, run_suite

logger = logging.getLogger(__name__)

Result = Tuple[Dict[str, Any], int]


def _failure(message: str, status: int, **extra) -> Result:
    body = {'success': False, 'error': message}
    body.update(extra)
    return body, status


class SpectraQueryServer:
    """查询服务：每个方法返回 (响应体, 状态码)"""

    def __init__(self, config=None):
        self.config = config or get_config()

    def health(self) -> Dict[str, Any]:
        return {
            'status': 'healthy',
            'timestamp': time.time(),
            'caps': self.config.get_cap_config(),
            'spectrum': self.config.get_spectrum_config(),
        }

    def _guard(self, action, *args) -> Result:
        try:
            return {'success': True, 'data': action(*args)}, 200
        except CapExceededError as e:
            return _failure(str(e), 413, cap=e.cap)
        except SpecSyntaxError as e:
            return _failure(str(e), 400, offset=e.offset)
        except ValidationError as e:
            logger.error(f"精确计算校验失败: {e}")
            return _failure(str(e), 500)
        except (CommuteSpectraError, ValueError) as e:
            return _failure(str(e), 400)

    def get_group_info(self, spec_text: Optional[str]) -> Result:
        if not spec_text:
            return _failure('缺少 spec 参数', 400)
        return self._guard(lambda: group_info(parse_group_spec(spec_text)))

    def get_spectrum(self, spec_text: Optional[str], method: str = 'auto') -> Result:
        if not spec_text:
            return _failure('缺少 spec 参数', 400)
        return self._guard(lambda: compute_spectrum(parse_group_spec(spec_text), parse_method(method)).to_json())

    def get_graph(self, spec_text: Optional[str], fmt: str = 'json') -> Result:
        if not spec_text:
            return _failure('缺少 spec 参数', 400)
        if fmt not in ('json', 'dot'):
            return _failure(f'未知的导出格式 {fmt!r}，可选: json, dot', 400)

        def export():
            cg = build_commuting_graph(build_group(parse_group_spec(spec_text)))
            if fmt == 'dot':
                return {'format': 'dot', 'dot': export_dot(cg)}
            data = graph_to_json(cg)
            data.update({'format': 'json', 'edge_count': cg.edge_count})
            return data

        return self._guard(export)

    def run_verify(self, options: Dict[str, Any]) -> Result:
        jobs = options.get('jobs')
        if jobs is not None and (not isinstance(jobs, int) or jobs < 1):
            return _failure('jobs 必须是正整数', 400)

        def verify():
            cases = filter_cases(default_suite(), options.get('filter'))
            return run_suite(cases, parallelism=jobs or self.config.VERIFY_JOBS).to_json()

        return self._guard(verify)


def create_app(config=None) -> Flask:
    """创建 Flask 应用"""
    config = config or get_config()
    app = Flask(__name__)
    CORS(app, origins=config.CORS_ORIGINS)  # 允许跨域请求
    server = SpectraQueryServer(config)
    app.config['QUERY_SERVER'] = server

    @app.route('/api/health', methods=['GET'])
    def health_check():
        """健康检查接口"""
        return jsonify(server.health())

    @app.route('/api/group/info', methods=['GET'])
    def get_group_info():
        """群信息"""
        body, status = server.get_group_info(request.args.get('spec'))
        return jsonify(body), status

    @app.route('/api/spectrum', methods=['GET'])
    def get_spectrum():
        """交换图的谱"""
        body, status = server.get_spectrum(request.args.get('spec'), request.args.get('method', 'auto'))
        return jsonify(body), status

    @app.route('/api/graph', methods=['GET'])
    def get_graph():
        """交换图导出；format=dot 时直接返回 DOT 文本"""
        fmt = request.args.get('format', 'json')
        body, status = server.get_graph(request.args.get('spec'), fmt)
        if status == 200 and fmt == 'dot':
            return Response(body['data']['dot'], mimetype='text/vnd.graphviz')
        return jsonify(body), status

    @app.route('/api/verify', methods=['POST'])
    def run_verify():
        """运行验证套件（可按子串过滤）"""
        options = request.get_json(silent=True) or {}
        if not isinstance(options, dict):
            return jsonify({'success': False, 'error': '请求体必须是 JSON 对象'}), 400
        body, status = server.run_verify(options)
        return jsonify(body), status

    return app


app = create_app()
