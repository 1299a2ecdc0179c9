"""
工具模块

包含性能计时器和日志配置
"""

from .performance_timer import PerformanceTimer
from .logging_setup import setup_logging

__all__ = ['PerformanceTimer', 'setup_logging']
