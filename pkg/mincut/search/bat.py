"""
BAT 向量引擎
- bat_next: 经典 BAT 原地后继 (Rule 1 / Rule 2)
- spawn_son: 递归 BAT 生成子向量，O(1) 更新 S(X) 与 U(X)

坐标 k (1 起始) 对应节点 k+1；坐标 1 最先翻转 (最低位)
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from ..core.errors import PreconditionError
from ..network.model import Network


class NodeVector:
    """n* = n-2 位的节点向量，bit k = 1 表示节点 k+1 在 S(X) 中"""

    __slots__ = ("_bits", "writes")

    def __init__(self, bits: Iterable[int] = ()):
        self._bits = [1 if b else 0 for b in bits]
        self.writes = 0

    @classmethod
    def zeros(cls, width: int) -> NodeVector:
        return cls([0] * width)

    @classmethod
    def from_int(cls, value: int, width: int) -> NodeVector:
        return cls((value >> k) & 1 for k in range(width))

    @property
    def width(self) -> int:
        return len(self._bits)

    def __getitem__(self, k: int) -> int:
        return self._bits[k - 1]

    def __setitem__(self, k: int, bit: int) -> None:
        self._bits[k - 1] = bit
        self.writes += 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NodeVector):
            return self._bits == other._bits
        if isinstance(other, tuple):
            return tuple(self._bits) == other
        return NotImplemented

    __hash__ = None  # 可变对象

    def __repr__(self) -> str:
        return "(" + ", ".join(map(str, self._bits)) + ")"

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(self._bits)

    def to_int(self) -> int:
        return sum(bit << k for k, bit in enumerate(self._bits))

    def copy(self) -> NodeVector:
        twin = NodeVector.__new__(NodeVector)
        twin._bits = self._bits.copy()
        twin.writes = 0
        return twin

    def with_bit(self, k: int) -> NodeVector:
        son = self.copy()
        son._bits[k - 1] = 1
        return son

    def s_side(self) -> frozenset[int]:
        """S(X) = {1} ∪ {k+1 : X(k) = 1}"""
        return frozenset([1, *(k + 2 for k, bit in enumerate(self._bits) if bit)])

    def t_side(self) -> frozenset[int]:
        """T(X) = V - S(X)，n = width + 2 恒在 T 中"""
        return frozenset(k + 2 for k, bit in enumerate(self._bits) if not bit) | {self.width + 2}


def bat_next(x: NodeVector) -> tuple[NodeVector, bool]:
    """
    Rule 1: 第一个 0 坐标置 1，其前面的坐标全部归 0
    Rule 2: 全 1 时停止 (exhausted=True，向量不变)
    """
    for k in range(1, x.width + 1):
        if x[k] == 0:
            x[k] = 1
            for j in range(1, k):
                x[j] = 0
            return x, False
    return x, True


@dataclass(slots=True)
class EnumState:
    """递归 BAT 记录: 向量前缀、S(X)、U(X)、存活标记；layer_mask 为 S(X) 占据的层，0 表示未维护"""
    vector: NodeVector
    s_side: frozenset[int]
    edge_nodes: frozenset[int]
    alive: bool = True
    s_connected: bool = True
    feasible: bool = True
    added: int | None = None
    parent_edge_nodes: frozenset[int] | None = field(default=None, repr=False)
    iteration: int = 0
    layer_mask: int = 0

    def t_side(self, net: Network) -> frozenset[int]:
        return net.node_set - self.s_side


def root_state(net: Network) -> EnumState:
    """X1 = (0): S = {1}, U = V(1)"""
    return EnumState(
        vector=NodeVector.zeros(net.node_count - 2),
        s_side=frozenset((net.source,)),
        edge_nodes=net.neighbor_set(net.source),
        layer_mask=1,
    )


def spawn_son(parent: EnumState, i: int, net: Network) -> EnumState:
    """
    子向量 = 父向量 + 坐标 i 置 1，新加入节点 v = i+1
    S(son) = S(parent) ∪ {v}
    U(son) = [U(parent) - {v}] ∪ [V(v) - S(son)]
    不做可行性判断
    """
    if not parent.alive:
        raise PreconditionError("cannot spawn from a removed parent")
    if not 1 <= i <= parent.vector.width:
        raise PreconditionError(f"iteration {i} out of range 1..{parent.vector.width}")
    if parent.vector[i]:
        raise PreconditionError(f"coordinate {i} already set in {parent.vector}")

    v = i + 1
    s_side = parent.s_side | {v}
    return EnumState(
        vector=parent.vector.with_bit(i),
        s_side=s_side,
        edge_nodes=(parent.edge_nodes | net.neighbor_set(v)) - s_side,
        s_connected=False,
        feasible=False,
        added=v,
        parent_edge_nodes=parent.edge_nodes,
        iteration=i,
    )


@dataclass
class RecursiveFrontier:
    """
    递归列表: 第 i 轮开始时冻结 N* = N，只扫描前 N* 个父向量，
    本轮生成的子向量追加在 N* 之后
    """
    states: list[EnumState] = field(default_factory=list)
    iteration: int = 1
    snapshot_count: int = 0

    @property
    def total_count(self) -> int:
        return len(self.states)

    def begin_iteration(self, i: int) -> None:
        self.iteration = i
        self.snapshot_count = len(self.states)

    def parents(self) -> Iterator[EnumState]:
        for idx in range(self.snapshot_count):
            state = self.states[idx]
            if state.alive:
                yield state

    def append(self, state: EnumState) -> None:
        self.states.append(state)


def iter_offspring(vector: NodeVector, fixed_upto: int) -> Iterator[NodeVector]:
    """坐标 1..fixed_upto 与 vector 相同、其后至少有一个 1 的全部后代"""
    free = vector.width - fixed_upto
    base = vector.to_int()
    for pattern in range(1, 1 << free):
        yield NodeVector.from_int(base | (pattern << fixed_upto), vector.width)
