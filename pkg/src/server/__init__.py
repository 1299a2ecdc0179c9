"""
服务器模块

包含 Flask HTTP 查询服务
"""

from .flask_server import app, create_app, SpectraQueryServer

__all__ = ['app', 'create_app', 'SpectraQueryServer']
