#!/usr/bin/env python3
"""
最小割枚举命令行入口 (等价于 python3 -m mincut)
用法:
  python3 cli.py enumerate net7
  python3 cli.py compare net7 bridge --oracle
"""

import sys

from mincut.cli import main

if __name__ == "__main__":
    sys.exit(main())
