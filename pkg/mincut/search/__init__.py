"""搜索层：BAT 向量生成、三种 MC 枚举器、可行性与孤立节点判定"""

from .bat import EnumState, NodeVector, RecursiveFrontier, bat_next, iter_offspring, root_state, spawn_son
from .models import (
    Divergence, EnumOptions, EnumStats, IsolationKind, IsolationVerdict, McCatalog,
)
from .feasibility import classify_isolation, is_feasible, t_side_check
from .baseline import enumerate_baseline
from .recursive import enumerate_recursive
from .oracle import is_minimal_cut, mc_oracle

__all__ = [
    "EnumState", "NodeVector", "RecursiveFrontier", "bat_next", "iter_offspring",
    "root_state", "spawn_son",
    "Divergence", "EnumOptions", "EnumStats", "IsolationKind", "IsolationVerdict", "McCatalog",
    "classify_isolation", "is_feasible", "t_side_check",
    "enumerate_baseline", "enumerate_recursive", "is_minimal_cut", "mc_oracle",
]
