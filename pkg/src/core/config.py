#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
配置文件 - 交换图谱精确计算系统
"""

import os
from typing import Dict, Any

from dotenv import load_dotenv

load_dotenv()


class Config:
    """基础配置类"""

    # 规模上限
    MAX_GROUP_ORDER = int(os.getenv('COMMUTE_SPECTRA_MAX_ORDER', 4096))
    MAX_FIELD_ORDER = int(os.getenv('COMMUTE_SPECTRA_MAX_FIELD', 2 ** 16))
    SPECTRAL_CAP = int(os.getenv('COMMUTE_SPECTRA_SPECTRAL_CAP', 600))  # 特征多项式路径的最大顶点数

    # 群表校验
    VALIDATE_TABLES = os.getenv('COMMUTE_SPECTRA_VALIDATE_TABLES', 'True').lower() == 'true'
    ASSOCIATIVITY_EXHAUSTIVE_LIMIT = int(os.getenv('ASSOCIATIVITY_EXHAUSTIVE_LIMIT', 256))
    ASSOCIATIVITY_SAMPLES = int(os.getenv('ASSOCIATIVITY_SAMPLES', 10 ** 6))
    ASSOCIATIVITY_SEED = int(os.getenv('ASSOCIATIVITY_SEED', 20140817))

    # 特征多项式
    CHARPOLY_VALIDATE = os.getenv('CHARPOLY_VALIDATE', 'True').lower() == 'true'
    CHARPOLY_JOBS = int(os.getenv('CHARPOLY_JOBS', 1))

    # 验证套件
    VERIFY_JOBS = int(os.getenv('VERIFY_JOBS', 1))
    # 两条路径都走的顶点数上限；未设置时取 SPECTRAL_CAP
    BOTH_METHOD_VERTEX_LIMIT = int(os.getenv('BOTH_METHOD_VERTEX_LIMIT', 0)) or None

    # 日志配置
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')
    LOG_FILE = os.getenv('LOG_FILE', '')

    # HTTP 服务配置
    FLASK_HOST = os.getenv('FLASK_HOST', '127.0.0.1')
    FLASK_PORT = int(os.getenv('FLASK_PORT', 5000))
    FLASK_DEBUG = os.getenv('FLASK_DEBUG', 'False').lower() == 'true'
    SERVER_THREADS = int(os.getenv('SERVER_THREADS', 4))
    CORS_ORIGINS = os.getenv('CORS_ORIGINS', '*').split(',')

    @classmethod
    def get_cap_config(cls) -> Dict[str, Any]:
        """获取规模上限配置"""
        return {
            'max_group_order': cls.MAX_GROUP_ORDER,
            'max_field_order': cls.MAX_FIELD_ORDER,
            'spectral_cap': cls.SPECTRAL_CAP,
        }

    @classmethod
    def get_spectrum_config(cls) -> Dict[str, Any]:
        """获取谱计算配置"""
        return {
            'spectral_cap': cls.SPECTRAL_CAP,
            'validate': cls.CHARPOLY_VALIDATE,
            'jobs': cls.CHARPOLY_JOBS,
        }

    @classmethod
    def get_server_config(cls) -> Dict[str, Any]:
        """获取HTTP服务配置"""
        return {
            'host': cls.FLASK_HOST,
            'port': cls.FLASK_PORT,
            'debug': cls.FLASK_DEBUG,
            'threads': cls.SERVER_THREADS,
        }


class DevelopmentConfig(Config):
    """开发环境配置"""
    CHARPOLY_VALIDATE = True


class ProductionConfig(Config):
    """生产环境配置"""
    LOG_LEVEL = 'WARNING'
    CORS_ORIGINS = ['http://localhost:3000']


class TestingConfig(Config):
    """测试环境配置"""
    LOG_LEVEL = 'DEBUG'
    ASSOCIATIVITY_SAMPLES = 20000  # 测试中缩短抽样校验


# 配置映射
config_map = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig
}


def get_config(env: str = None) -> Config:
    """获取配置类"""
    if env is None:
        env = os.getenv('COMMUTE_SPECTRA_ENV', 'development')

    return config_map.get(env, DevelopmentConfig)
