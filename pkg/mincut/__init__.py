"""Minimal Cut BAT: 二态网络最小割枚举 + 可靠度计算"""

__version__ = "0.1.0"
