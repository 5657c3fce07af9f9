"""
PLSA 分层搜索
- plsa_layers: 全图分层，得到 λ(v) 与 L(1)..L(l)
- plsa_connected: 限定在节点子集上的分层搜索，判断连通性
- plsa_reaches: 同上，某层碰到目标集合即提前停止
- renumber: 按层重新编号，使层号随节点编号单调不减
"""

from __future__ import annotations

import logging
from collections.abc import Collection, Iterable, Iterator
from dataclasses import dataclass

from ..core.errors import DisconnectedNetworkError, PreconditionError
from .model import Arc, Network

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Layering:
    """λ(v) (1 起始，不可达为 0) 与各层节点集合"""
    root: int
    layer_of: tuple[int, ...]
    layers: tuple[frozenset[int], ...]

    def layer(self, v: int) -> int:
        return self.layer_of[v - 1]

    @property
    def depth(self) -> int:
        return len(self.layers)

    @property
    def reached(self) -> frozenset[int]:
        return frozenset().union(*self.layers)

    def mask_of(self, nodes: Iterable[int]) -> int:
        """nodes 占据的层 (bit t-1 对应 L_t)"""
        bits = 0
        for v in nodes:
            if self.layer_of[v - 1]:
                bits |= 1 << (self.layer_of[v - 1] - 1)
        return bits


@dataclass(frozen=True)
class Renumbering:
    """forward[old-1] = new，backward[new-1] = old"""
    forward: tuple[int, ...]
    backward: tuple[int, ...]

    def apply(self, old: int) -> int:
        return self.forward[old - 1]

    def restore(self, new: int) -> int:
        return self.backward[new - 1]

    @property
    def is_identity(self) -> bool:
        return all(new == old for old, new in enumerate(self.forward, start=1))


def _expand(net: Network, root: int, allowed: Collection[int] | None) -> Iterator[frozenset[int]]:
    """STEP P0/P1: 逐层扩展直到新层为空，每个节点最多进入一层"""
    layer = frozenset((root,))
    seen = {root}
    while layer:
        yield layer
        nxt = set()
        for u in layer:
            for w, _ in net.incident(u):
                if w not in seen and (allowed is None or w in allowed):
                    seen.add(w)
                    nxt.add(w)
        layer = frozenset(nxt)


def plsa_layers(net: Network, root: int = 1, allowed: Collection[int] | None = None) -> Layering:
    """完整跑完 STEP P1 (不提前停止)，给每个可达节点标注层号"""
    if not 1 <= root <= net.node_count:
        raise PreconditionError(f"root {root} out of range 1..{net.node_count}")
    if allowed is not None and root not in allowed:
        raise PreconditionError(f"root {root} not in allowed set")

    layers = tuple(_expand(net, root, allowed))
    layer_of = [0] * net.node_count
    for idx, layer in enumerate(layers, start=1):
        for v in layer:
            layer_of[v - 1] = idx
    return Layering(root=root, layer_of=tuple(layer_of), layers=layers)


def plsa_connected(net: Network, allowed: Collection[int], root: int) -> tuple[frozenset[int], bool]:
    """在 G(allowed) 中从 root 分层搜索，返回 (可达集合, 是否全部可达)"""
    if root not in allowed:
        raise PreconditionError(f"root {root} not in allowed set")
    reached: set[int] = set()
    for layer in _expand(net, root, allowed):
        reached |= layer
    return frozenset(reached), len(reached) == len(allowed)


def plsa_reaches(net: Network, allowed: Collection[int], root: int, targets: Collection[int]) -> bool:
    """在 G(allowed) 中从 root 分层搜索，某一层碰到 targets 即停止"""
    if root not in allowed:
        raise PreconditionError(f"root {root} not in allowed set")
    for layer in _expand(net, root, allowed):
        if not layer.isdisjoint(targets):
            return True
    return False


def renumber(net: Network, layering: Layering | None = None) -> tuple[Network, Renumbering]:
    """
    按 PLSA 层号重新编号
    非汇点节点按 (λ, 原编号) 排序；汇点强制编号为 n
    layering 可传入已算好的 plsa_layers(net, 1)
    """
    layering = layering or plsa_layers(net, net.source)
    if len(layering.reached) != net.node_count:
        missing = sorted(set(net.nodes) - layering.reached)
        raise DisconnectedNetworkError(f"nodes unreachable from node 1: {missing}")

    sink_layer = layering.layer(net.sink)
    if sink_layer != layering.depth:
        logger.warning(
            "sink %d sits in layer %d of %d; layer order broken for the sink only",
            net.sink, sink_layer, layering.depth,
        )

    order = sorted(
        (v for v in net.nodes if v != net.sink),
        key=lambda v: (layering.layer(v), v),
    )
    order.append(net.sink)

    backward = tuple(order)
    forward = [0] * net.node_count
    for new, old in enumerate(backward, start=1):
        forward[old - 1] = new
    mapping = Renumbering(forward=tuple(forward), backward=backward)

    if mapping.is_identity:
        return net, mapping

    arcs = []
    for arc in net.arcs:
        a, b = sorted((mapping.apply(arc.u), mapping.apply(arc.v)))
        arcs.append(Arc(arc.arc_id, a, b))
    relabeled = Network(
        node_count=net.node_count,
        arcs=tuple(arcs),
        probabilities=net.probabilities,
        labels=tuple(net.label(old) for old in backward),
    )
    return relabeled, mapping


def surviving_connected(net: Network, failed_mask: int, root: int | None = None, target: int | None = None) -> bool:
    """
    弧状态版 PLSA: failed_mask 的 bit k-1 表示 a_k 失效
    只沿正常工作的弧分层扩展，判断 root 能否到达 target
    """
    root = net.source if root is None else root
    target = net.sink if target is None else target
    if root == target:
        return True
    seen = {root}
    layer = [root]
    while layer:
        nxt = []
        for u in layer:
            for w, k in net.incident(u):
                if w in seen or (failed_mask >> (k - 1)) & 1:
                    continue
                if w == target:
                    return True
                seen.add(w)
                nxt.append(w)
        layer = nxt
    return False
