"""
弧状态穷举可靠度 (判定器)
"""

from __future__ import annotations

import logging
import math
import time

from ..core.errors import PreconditionError, ResourceLimitError
from ..network.layers import surviving_connected
from ..network.model import Network
from .models import FailureModel, ReliabilityResult

logger = logging.getLogger(__name__)

DEFAULT_MAX_ARCS = 24


def reliability_brute(net: Network, model: FailureModel, max_arcs: int = DEFAULT_MAX_ARCS) -> ReliabilityResult:
    """R = Σ 连通状态的概率，遍历全部 2^m 个失效掩码"""
    m = net.arc_count
    if model.arc_count != m:
        raise PreconditionError(f"failure model covers {model.arc_count} arcs, network has {m}")
    if m > max_arcs:
        raise ResourceLimitError(f"m={m} exceeds the exhaustive limit {max_arcs}")

    started = time.perf_counter()
    q = model.q
    terms = []
    for failed in range(1 << m):
        if not surviving_connected(net, failed):
            continue
        prob = 1.0
        for k in range(m):
            prob *= q[k] if (failed >> k) & 1 else 1.0 - q[k]
        terms.append(prob)

    r = min(1.0, max(0.0, math.fsum(terms)))
    elapsed = time.perf_counter() - started
    logger.debug("brute: m=%d states=%d R=%.12g", m, 1 << m, r)
    return ReliabilityResult(
        reliability=r,
        unreliability=1.0 - r,
        terms_evaluated=1 << m,
        method="brute",
        elapsed=elapsed,
    )
