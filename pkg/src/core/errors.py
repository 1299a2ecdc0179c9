#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
异常定义 - 交换图谱计算系统

所有模块抛出的异常都继承自 CommuteSpectraError，CLI 和 HTTP 服务据此映射退出码/状态码。
"""

from typing import Optional


class CommuteSpectraError(Exception):
    """系统异常基类"""


class ParameterError(CommuteSpectraError, ValueError):
    """参数超出允许范围（非素数、阶数不合法等）"""


class CapExceededError(CommuteSpectraError):
    """请求规模超过配置上限"""

    def __init__(self, what: str, requested: int, cap: int, setting: Optional[str] = None):
        self.what = what
        self.requested = requested
        self.cap = cap
        self.setting = setting  # 可调整该上限的环境变量，固定上限为 None
        super().__init__(f"{what} {requested} 超过上限 {cap}")


class AbelianGroupError(CommuteSpectraError, ValueError):
    """交换图只对非交换群定义"""


class FieldError(CommuteSpectraError, ValueError):
    """有限域运算错误（零元求逆、混用不同域的元素）"""


class GroupAxiomError(CommuteSpectraError):
    """乘法表不满足群公理"""


class SpecSyntaxError(CommuteSpectraError, ValueError):
    """群描述字符串语法错误，带字节偏移"""

    def __init__(self, message: str, text: str, offset: int):
        self.text = text
        self.offset = offset
        super().__init__(f"{message} (位置 {offset}): {text!r}")


class FormulaError(CommuteSpectraError, ValueError):
    """闭式谱公式的参数非法或顶点数恒等式不成立"""


class ValidationError(CommuteSpectraError):
    """精确计算的自检失败（CRT 重建与 Bareiss 行列式不一致等）"""

    def __init__(self, message: str, detail: Optional[dict] = None):
        self.detail = detail or {}
        super().__init__(message)
