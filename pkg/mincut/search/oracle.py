"""
暴力 MC 判定器
按定义检查弧子集: 删除后 1 与 n 不连通，且放回任意一条弧后都不再断开
只用于小规模网络的差分验证
"""

from __future__ import annotations

import logging

from ..core.errors import ResourceLimitError
from ..network.layers import surviving_connected
from ..network.model import CutSet, Network
from .models import McCatalog

logger = logging.getLogger(__name__)

DEFAULT_MAX_ARCS = 24


def _check_size(net: Network, max_arcs: int) -> None:
    if net.arc_count > max_arcs:
        raise ResourceLimitError(f"m={net.arc_count} exceeds the exhaustive limit {max_arcs}")


def _mask_to_cut(mask: int) -> CutSet:
    return CutSet(tuple(k + 1 for k in range(mask.bit_length()) if (mask >> k) & 1))


def _is_minimal_mask(net: Network, mask: int) -> bool:
    """mask 已断开 1 与 n；逐条放回弧检查是否冗余"""
    rest = mask
    while rest:
        bit = rest & -rest
        if not surviving_connected(net, mask ^ bit):
            return False
        rest ^= bit
    return True


def is_minimal_cut(net: Network, cut: CutSet) -> bool:
    """单个弧集的最小性判定，不受 2^m 护栏限制"""
    mask = cut.mask()
    if not mask or surviving_connected(net, mask):
        return False
    return _is_minimal_mask(net, mask)


def mc_oracle(net: Network, max_arcs: int = DEFAULT_MAX_ARCS) -> McCatalog:
    """
    按规范顺序 (大小、弧编号) 返回全部 MC
    按弧编号深度优先遍历 2^m 弧子集格:
      - 已断开的子集不再扩展 (它的超集都不是最小的)
      - 决定保留的弧已连通 1 与 n 时整棵子树跳过 (子树中没有断开的子集)
    """
    _check_size(net, max_arcs)
    m = net.arc_count
    full = (1 << m) - 1
    found: list[CutSet] = []
    visited = 0

    def visit(k: int, removed: int) -> None:
        nonlocal visited
        visited += 1
        if k == m:
            return
        kept = ((1 << k) - 1) & ~removed
        if surviving_connected(net, full & ~kept):
            return

        bit = 1 << k
        cut = removed | bit
        if surviving_connected(net, cut):
            visit(k + 1, cut)
        elif _is_minimal_mask(net, cut):
            found.append(_mask_to_cut(cut))
        visit(k + 1, removed)

    visit(0, 0)
    logger.debug("oracle: m=%d visited %d subset-lattice nodes, c=%d", m, visited, len(found))
    return McCatalog(sorted(found, key=lambda c: (len(c), c.arc_ids)))
