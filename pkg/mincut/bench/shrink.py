"""
反例最小化 (delta debugging)
在弧集合上做 ddmin: 逐步删掉弧，只要子网络仍然触发问题就保留删减
子网络只保留从 1 可达的部分，汇点不可达的候选视为不触发
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence

from ..core.errors import PreconditionError
from ..network.model import Arc, Network

logger = logging.getLogger(__name__)

Predicate = Callable[[Network], bool]


def restrict(net: Network, arc_ids: Sequence[int]) -> Network | None:
    """只保留 arc_ids 中的弧，重新编号；汇点与源点不连通返回 None"""
    kept = [net.arc(k) for k in sorted(arc_ids)]
    adjacency: dict[int, set[int]] = {}
    for arc in kept:
        adjacency.setdefault(arc.u, set()).add(arc.v)
        adjacency.setdefault(arc.v, set()).add(arc.u)

    reached = {net.source}
    layer = [net.source]
    while layer:
        layer = [w for u in layer for w in adjacency.get(u, ()) if w not in reached]
        reached.update(layer)
    if net.sink not in reached:
        return None

    middle = sorted(reached - {net.source, net.sink})
    ids = {net.source: 1, net.sink: len(reached)}
    ids.update({v: k for k, v in enumerate(middle, start=2)})

    rows = sorted(
        (tuple(sorted((ids[arc.u], ids[arc.v]))), net.probability(arc.arc_id))
        for arc in kept if arc.u in reached
    )
    probs = None if net.probabilities is None else tuple(p for _, p in rows)
    return Network(
        node_count=len(reached),
        arcs=tuple(Arc(k, u, v) for k, ((u, v), _) in enumerate(rows, start=1)),
        probabilities=probs,
        labels=tuple(net.label(old) for old, _ in sorted(ids.items(), key=lambda kv: kv[1])),
    )


def _split(items: list[int], n: int) -> list[list[int]]:
    subsets = []
    start = 0
    for i in range(n):
        size = (len(items) - start) // (n - i)
        subsets.append(items[start:start + size])
        start += size
    return subsets


def shrink_network(net: Network, failing: Predicate) -> Network:
    """
    返回一个弧数 1-minimal 的子网络，使 failing(子网络) 仍为 True
    原网络本身必须触发问题
    """
    if not failing(net):
        raise PreconditionError("shrink_network needs a network that triggers the predicate")

    cache: dict[tuple[int, ...], bool] = {}

    def test(arc_ids: list[int]) -> bool:
        key = tuple(sorted(arc_ids))
        if key not in cache:
            sub = restrict(net, key)
            cache[key] = sub is not None and failing(sub)
        return cache[key]

    current = [arc.arc_id for arc in net.arcs]
    n = 2
    while len(current) >= 2:
        subsets = _split(current, n)
        reduced = False
        for subset in subsets:
            if subset and test(subset):
                current, n, reduced = subset, 2, True
                break
        if not reduced:
            for subset in subsets:
                complement = [k for k in current if k not in subset]
                if complement and test(complement):
                    current, n, reduced = complement, max(n - 1, 2), True
                    break
        if not reduced:
            if n >= len(current):
                break
            n = min(len(current), n * 2)

    result = restrict(net, current)
    logger.info("shrunk counterexample from m=%d to m=%d (%d tests)", net.arc_count, result.arc_count, len(cache))
    return result
