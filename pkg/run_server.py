#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
启动脚本 - 交换图谱查询服务（waitress）
"""

import logging
import os
import sys

current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

from src.core.config import get_config
from src.utils.logging_setup import setup_logging


def main():
    """主函数"""
    env = os.getenv('COMMUTE_SPECTRA_ENV', 'development')
    config = get_config(env)
    setup_logging(config)
    logger = logging.getLogger(__name__)

    try:
        from waitress import serve
        from src.server.flask_server import create_app

        app = create_app(config)
        server_config = config.get_server_config()
        logger.info(f"环境: {env}，规模上限: {config.get_cap_config()}")
        logger.info(f"服务端启动完成，监听 {server_config['host']}:{server_config['port']}")
        serve(app, host=server_config['host'], port=server_config['port'],
              threads=server_config['threads'])
    except ImportError as e:
        logger.error(f"导入模块失败: {e}")
        sys.exit(1)
    except Exception as e:
        logger.error(f"启动失败: {e}")
        sys.exit(1)


if __name__ == '__main__':
    main()
