"""可靠度层：由 MC 目录做容斥 (IET) 的精确计算 + 弧状态穷举判定器"""

from .models import FailureModel, ReliabilityResult
from .iet import event_union_prob, unreliability_iet
from .brute import reliability_brute

__all__ = [
    "FailureModel", "ReliabilityResult",
    "event_union_prob", "unreliability_iet", "reliability_brute",
]
