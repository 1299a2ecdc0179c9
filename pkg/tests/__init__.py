"""
测试模块

包含所有测试文件和测试用例
"""

__all__ = []
