"""
commute-spectra 源代码包

包含群内核、交换图、精确谱、闭式公式、验证套件、命令行与 HTTP 服务
"""

__version__ = "1.0.0"
__description__ = "有限群交换图的精确谱计算"
