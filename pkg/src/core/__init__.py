"""
核心模块

包含有限域、群内核、交换图、精确谱、闭式公式、验证套件和配置
"""

from .config import Config, get_config
from .errors import CommuteSpectraError
from .group_families import build_group
from .commuting_graph import build_commuting_graph

__all__ = ['Config', 'get_config', 'CommuteSpectraError', 'build_group', 'build_commuting_graph']
