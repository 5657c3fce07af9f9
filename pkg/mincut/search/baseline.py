"""
基准节点 BAT 枚举
用 bat_next 扫描全部 2^(n-2) 个向量，每个向量做两次 PLSA
"""

from __future__ import annotations

import logging
import time

from ..core.events import EventBus, EventType
from ..network.model import Network, cut_of, edge_nodes_of
from .bat import NodeVector, bat_next
from .feasibility import is_feasible
from .models import EnumStats, McCatalog

logger = logging.getLogger(__name__)


def enumerate_baseline(net: Network, bus: EventBus | None = None) -> tuple[McCatalog, EnumStats]:
    """全零向量 (S = {1}) 与其他向量走同一条 is_feasible / cut_of 路径"""
    started = time.perf_counter()
    catalog = McCatalog()
    stats = EnumStats()
    if bus:
        bus.emit_simple(EventType.RUN_STARTED, algorithm="baseline", n=net.node_count, m=net.arc_count)

    x = NodeVector.zeros(net.node_count - 2)
    exhausted = False
    while not exhausted:
        stats.vectors_generated += 1
        if is_feasible(net, x):
            s_side = x.s_side()
            cut = cut_of(net, s_side)
            stats.vectors_feasible += 1
            if catalog.add(cut) and bus:
                bus.emit_simple(
                    EventType.STATE_EMITTED,
                    vector=x.as_tuple(),
                    s_side=tuple(sorted(s_side)),
                    edge_nodes=tuple(sorted(edge_nodes_of(net, s_side))),
                    cut=cut,
                )
        x, exhausted = bat_next(x)

    stats.wall_time = time.perf_counter() - started
    logger.debug(
        "baseline: n=%d m=%d c=%d generated=%d in %.4fs",
        net.node_count, net.arc_count, catalog.count, stats.vectors_generated, stats.wall_time,
    )
    if bus:
        bus.emit_simple(EventType.RUN_FINISHED, algorithm="baseline", stats=stats.to_dict())
    return catalog, stats
