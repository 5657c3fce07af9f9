"""
枚举结果数据模型
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any

from ..core.config import CheckMode, EnumerationConfig
from ..network.model import CutSet


class IsolationKind(str, Enum):
    NONE = "none"
    SON_INFEASIBLE = "son_infeasible"                              # 子向量不可行，但后代可能可行
    SON_AND_OFFSPRING_INFEASIBLE = "son_and_offspring_infeasible"  # 子向量连同后代全部剪除
    PARENT_REMOVABLE = "parent_removable"                          # 父向量不再生成子向量


@dataclass(frozen=True)
class IsolationVerdict:
    kind: IsolationKind
    witness: int | None = None

    def __post_init__(self):
        if (self.kind is IsolationKind.NONE) != (self.witness is None):
            raise ValueError(f"witness must be present iff kind != none: {self.kind} / {self.witness}")

    @classmethod
    def none(cls) -> IsolationVerdict:
        return cls(IsolationKind.NONE)

    @property
    def fathoms_son(self) -> bool:
        return self.kind in (IsolationKind.SON_AND_OFFSPRING_INFEASIBLE, IsolationKind.PARENT_REMOVABLE)


class McCatalog:
    """Ω: 按发现顺序保存的互不相同的 MC"""

    def __init__(self, cuts: Iterable[CutSet] = ()):
        self._cuts: list[CutSet] = []
        self._seen: set[CutSet] = set()
        for cut in cuts:
            self.add(cut)

    def add(self, cut: CutSet) -> bool:
        """插入一个 MC，重复返回 False"""
        if cut in self._seen:
            return False
        self._seen.add(cut)
        self._cuts.append(cut)
        return True

    @property
    def cuts(self) -> tuple[CutSet, ...]:
        return tuple(self._cuts)

    @property
    def count(self) -> int:
        return len(self._cuts)

    def as_set(self) -> frozenset[CutSet]:
        return frozenset(self._cuts)

    def sorted(self) -> list[CutSet]:
        """规范顺序: 先按大小，再按弧编号"""
        return sorted(self._cuts, key=lambda c: (len(c), c.arc_ids))

    def __len__(self) -> int:
        return len(self._cuts)

    def __iter__(self) -> Iterator[CutSet]:
        return iter(self._cuts)

    def __contains__(self, cut: object) -> bool:
        return cut in self._seen

    def __repr__(self) -> str:
        return f"McCatalog(c={self.count})"


@dataclass(frozen=True)
class Divergence:
    """edge-node 判定与 plsa 判定不一致的一个子向量"""
    vector: tuple[int, ...]
    s_side: tuple[int, ...]
    plsa: bool
    edge_node: bool

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class EnumStats:
    vectors_generated: int = 0
    vectors_feasible: int = 0
    parents_removed: int = 0
    sons_fathomed: int = 0
    wall_time: float = 0.0     # 秒
    divergences: list[Divergence] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        return {
            "vectors_generated": self.vectors_generated,
            "vectors_feasible": self.vectors_feasible,
            "parents_removed": self.parents_removed,
            "sons_fathomed": self.sons_fathomed,
            "wall_time": self.wall_time,
            "divergences": len(self.divergences),
        }


@dataclass(frozen=True)
class EnumOptions:
    """递归枚举选项 (检查方式 + 剪枝开关)"""
    check: CheckMode = CheckMode.PLSA
    prune_isolated: bool = True
    prune_parent: bool = True
    cross_check: bool = True

    @classmethod
    def from_config(cls, cfg: EnumerationConfig) -> EnumOptions:
        return cls(
            check=cfg.check,
            prune_isolated=cfg.prune_isolated,
            prune_parent=cfg.prune_parent,
            cross_check=cfg.cross_check,
        )
