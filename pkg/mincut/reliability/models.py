"""
可靠度数据模型
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..core.errors import PreconditionError
from ..network.model import Network


@dataclass(frozen=True)
class FailureModel:
    """q[k-1] = a_k 的失效概率 = 1 - 工作概率 (各弧独立)"""
    q: tuple[float, ...]

    def __post_init__(self):
        for k, qk in enumerate(self.q, start=1):
            if not 0.0 <= qk <= 1.0:
                raise PreconditionError(f"failure probability of a{k} outside [0,1]: {qk}")

    @classmethod
    def uniform(cls, net: Network, p: float) -> FailureModel:
        if not 0.0 <= p <= 1.0:
            raise PreconditionError(f"working probability outside [0,1]: {p}")
        return cls(tuple(1.0 - p for _ in net.arcs))

    @classmethod
    def from_network(cls, net: Network, uniform_p: float | None = None) -> FailureModel:
        """给定 uniform_p 时覆盖文件中的 D_b"""
        if uniform_p is not None:
            return cls.uniform(net, uniform_p)
        if net.probabilities is None:
            raise PreconditionError("network has no per-arc probabilities; pass a uniform p")
        return cls(tuple(1.0 - p for p in net.probabilities))

    @property
    def arc_count(self) -> int:
        return len(self.q)

    def failure(self, arc_id: int) -> float:
        return self.q[arc_id - 1]

    def all_fail(self, mask: int) -> float:
        """掩码中全部弧同时失效的概率"""
        prob = 1.0
        k = 0
        while mask:
            if mask & 1:
                prob *= self.q[k]
            mask >>= 1
            k += 1
        return prob


@dataclass(frozen=True)
class ReliabilityResult:
    reliability: float
    unreliability: float
    terms_evaluated: int
    method: str               # iet | brute
    elapsed: float = 0.0

    def to_dict(self) -> dict[str, Any]:
        return {
            "method": self.method,
            "R": self.reliability,
            "F": self.unreliability,
            "terms": self.terms_evaluated,
            "time": self.elapsed,
        }
