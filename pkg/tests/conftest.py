#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
测试公共夹具
"""

import os
import sys

import pytest

os.environ['COMMUTE_SPECTRA_ENV'] = 'testing'
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.cli.spec_parser import parse_group_spec
from src.core.commuting_graph import build_commuting_graph
from src.core.config import TestingConfig
from src.core.group_families import build_group
from src.server.flask_server import create_app


def build(text: str):
    """按 CLI 语法构造群表"""
    return build_group(parse_group_spec(text))


def graph(text: str):
    return build_commuting_graph(build(text))


@pytest.fixture
def app():
    """pytest-flask 使用的应用夹具"""
    flask_app = create_app(TestingConfig)
    flask_app.config['TESTING'] = True
    return flask_app


@pytest.fixture
def small_cap(monkeypatch):
    """把群的阶上限临时调到 100"""
    monkeypatch.setattr(TestingConfig, 'MAX_GROUP_ORDER', 100)
    return 100
