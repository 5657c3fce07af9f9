"""
网络数据模型
无向二态网络 G(V, E, D_b)：源点固定为 1，汇点固定为 n
节点编号在解析阶段归一化，原始标签保存在 labels 中仅用于显示
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from ..core.errors import PreconditionError


@dataclass(frozen=True)
class Arc:
    """无向弧 a_k = e_{u,v}，u < v"""
    arc_id: int
    u: int
    v: int

    @property
    def name(self) -> str:
        return f"a{self.arc_id}"

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u


@dataclass(frozen=True)
class CutSet:
    """弧子集 C(X)，弧编号严格升序"""
    arc_ids: tuple[int, ...]

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.arc_ids, self.arc_ids[1:])):
            raise PreconditionError(f"cut arc ids not strictly ascending: {self.arc_ids}")

    @classmethod
    def of(cls, arc_ids: Iterable[int]) -> CutSet:
        return cls(tuple(sorted(set(arc_ids))))

    @classmethod
    def parse(cls, text: str) -> CutSet:
        """'a5 a8 a10 a12' -> CutSet"""
        return cls.of(int(tok.lstrip("a")) for tok in text.split())

    def __len__(self) -> int:
        return len(self.arc_ids)

    def __iter__(self) -> Iterator[int]:
        return iter(self.arc_ids)

    def __contains__(self, arc_id: object) -> bool:
        return arc_id in self.arc_ids

    def __str__(self) -> str:
        return " ".join(f"a{k}" for k in self.arc_ids)

    def mask(self) -> int:
        """弧位掩码 (a_k -> bit k-1)"""
        bits = 0
        for k in self.arc_ids:
            bits |= 1 << (k - 1)
        return bits


@dataclass(frozen=True)
class Network:
    """二态网络：节点 1..n，弧 a_1..a_m，可选每弧工作概率"""
    node_count: int
    arcs: tuple[Arc, ...]
    probabilities: tuple[float, ...] | None = None
    labels: tuple[int, ...] | None = field(default=None, compare=False)
    _adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False,
    )
    _neighbors: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)
    _node_set: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.node_count
        if n < 2:
            raise PreconditionError(f"node_count must be >= 2, got {n}")

        seen_pairs: set[tuple[int, int]] = set()
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
        for k, arc in enumerate(self.arcs, start=1):
            if arc.arc_id != k:
                raise PreconditionError(f"arc ids must be a1..am in order, got {arc.name} at position {k}")
            if arc.u == arc.v:
                raise PreconditionError(f"self-loop at node {arc.u} ({arc.name})")
            if not (1 <= arc.u < arc.v <= n):
                raise PreconditionError(f"arc {arc.name} endpoints ({arc.u}, {arc.v}) not normalized in 1..{n}")
            if (arc.u, arc.v) in seen_pairs:
                raise PreconditionError(f"parallel arc {arc.name} between {arc.u} and {arc.v}")
            seen_pairs.add((arc.u, arc.v))
            adjacency[arc.u].append((arc.v, k))
            adjacency[arc.v].append((arc.u, k))

        if self.probabilities is not None:
            if len(self.probabilities) != len(self.arcs):
                raise PreconditionError("every arc needs a working probability")
            for k, p in enumerate(self.probabilities, start=1):
                if not 0.0 <= p <= 1.0:
                    raise PreconditionError(f"probability of a{k} outside [0,1]: {p}")

        if self.labels is not None and len(self.labels) != n:
            raise PreconditionError("labels must cover every node")

        object.__setattr__(self, "_adjacency", tuple(tuple(adj) for adj in adjacency))
        object.__setattr__(self, "_neighbors", tuple(frozenset(w for w, _ in adj) for adj in adjacency))
        object.__setattr__(self, "_node_set", frozenset(range(1, n + 1)))

    # ── 基本属性 ────────────────────────────────────────

    @property
    def source(self) -> int:
        return 1

    @property
    def sink(self) -> int:
        return self.node_count

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    @property
    def nodes(self) -> range:
        return range(1, self.node_count + 1)

    @property
    def node_set(self) -> frozenset[int]:
        return self._node_set

    def arc(self, arc_id: int) -> Arc:
        return self.arcs[arc_id - 1]

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """节点 v 的 (邻居, 弧编号) 列表"""
        return self._adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._neighbors[v]

    def probability(self, arc_id: int) -> float | None:
        if self.probabilities is None:
            return None
        return self.probabilities[arc_id - 1]

    def label(self, v: int) -> int:
        return self.labels[v - 1] if self.labels is not None else v

    def to_networkx(self) -> nx.Graph:
        """转成 networkx 图 (校验和测试中作为独立参照)"""
        g = nx.Graph()
        g.add_nodes_from(self.nodes)
        for arc in self.arcs:
            g.add_edge(arc.u, arc.v, arc_id=arc.arc_id)
        return g


def neighbors(net: Network, v: int) -> frozenset[int]:
    """V(v): 与 v 相邻的全部节点 (包括编号更小的)"""
    if not 1 <= v <= net.node_count:
        raise PreconditionError(f"node {v} out of range 1..{net.node_count}")
    return net.neighbor_set(v)


def cut_of(net: Network, s_side: Iterable[int]) -> CutSet:
    """C(X): 恰有一个端点在 S(X) 中的所有弧 (不保证最小性)"""
    s = frozenset(s_side)
    if net.source not in s:
        raise PreconditionError("source node 1 must be on the S side")
    if net.sink in s:
        raise PreconditionError(f"sink node {net.sink} must be on the T side")
    return CutSet(tuple(
        arc.arc_id for arc in net.arcs if (arc.u in s) != (arc.v in s)
    ))


def edge_nodes_of(net: Network, s_side: Iterable[int]) -> frozenset[int]:
    """U(X) 的直接定义: T(X) 中至少有一个邻居在 S(X) 的节点"""
    s = frozenset(s_side)
    return frozenset(
        w for v in s for w, _ in net.incident(v) if w not in s
    )
