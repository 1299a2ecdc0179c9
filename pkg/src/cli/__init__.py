"""
命令行模块
"""

from .main import main
from .spec_parser import parse_group_spec

__all__ = ['main', 'parse_group_spec']
