#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
启动脚本 - 命令行前端
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli.main import main

if __name__ == '__main__':
    sys.exit(main())
