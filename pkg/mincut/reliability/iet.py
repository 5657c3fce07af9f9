"""
容斥 (IET) 计算不可靠度
F = Σ_{I ≠ ∅} (-1)^{|I|+1} · Pr(I 中所有 MC 的弧全部失效)
R = 1 - F

同一并集弧集的项先合并成整数系数，再按并集掩码升序用 math.fsum 求和，
结果与 MC 的排列顺序无关
"""

from __future__ import annotations

import logging
import math
import time
from collections import Counter
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor

from ..core.errors import PreconditionError, ResourceLimitError
from ..network.model import CutSet
from ..search.models import McCatalog
from .models import FailureModel, ReliabilityResult

logger = logging.getLogger(__name__)

DEFAULT_MAX_TERMS = 20
_LOW_BITS = 10


def event_union_prob(cuts: Iterable[CutSet], model: FailureModel) -> float:
    """supp 的并集: 所有 MC 的弧全部失效的概率"""
    union = 0
    empty = True
    for cut in cuts:
        union |= cut.mask()
        empty = False
    if empty:
        raise PreconditionError("event_union_prob needs at least one cut")
    return model.all_fail(union)


def _subset_unions(masks: Sequence[int]) -> list[int]:
    """unions[s] = s 选中的 MC 掩码的并集 (s 为子集位掩码)"""
    unions = [0] * (1 << len(masks))
    for s in range(1, len(unions)):
        low = s & -s
        unions[s] = unions[s ^ low] | masks[low.bit_length() - 1]
    return unions


def _coefficients(masks: Sequence[int], low_bits: int, high_from: int, high_to: int) -> Counter:
    """
    高位子集 h ∈ [high_from, high_to) 与全部低位子集组合，按并集累加 ±1
    子集为空 (h = 0 且低位 = 0) 时跳过
    """
    low_unions = _subset_unions(masks[:low_bits])
    low_parity = [bin(s).count("1") & 1 for s in range(len(low_unions))]
    high_masks = masks[low_bits:]

    coef: Counter = Counter()
    for h in range(high_from, high_to):
        high_union = 0
        for k in range(len(high_masks)):
            if (h >> k) & 1:
                high_union |= high_masks[k]
        high_parity = bin(h).count("1") & 1
        for s, low_union in enumerate(low_unions):
            if h == 0 and s == 0:
                continue
            # |I| 为奇数取 +1
            coef[low_union | high_union] += 1 if low_parity[s] ^ high_parity else -1
    return coef


def _chunks(high_count: int, workers: int) -> list[tuple[int, int]]:
    step = max(1, math.ceil(high_count / workers))
    return [(lo, min(lo + step, high_count)) for lo in range(0, high_count, step)]


def unreliability_iet(
    catalog: McCatalog | Sequence[CutSet],
    model: FailureModel,
    limit: int = DEFAULT_MAX_TERMS,
    workers: int = 1,
) -> ReliabilityResult:
    """
    2^c - 1 项容斥；c 超过 limit 抛 ResourceLimitError
    workers > 1 时按高位子集切块并行，合并顺序固定
    """
    if workers < 1:
        raise PreconditionError(f"workers must be >= 1, got {workers}")
    cuts = list(catalog)
    c = len(cuts)
    if c > limit:
        raise ResourceLimitError(f"catalog has c={c} cuts; IET needs 2^{c}-1 terms (limit c <= {limit})")

    started = time.perf_counter()
    masks = [cut.mask() for cut in cuts]
    low_bits = min(c, _LOW_BITS)
    high_count = 1 << (c - low_bits)
    chunks = _chunks(high_count, workers)

    coef: Counter = Counter()
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_coefficients, masks, low_bits, lo, hi) for lo, hi in chunks]
            for future in futures:
                coef.update(future.result())
    else:
        for lo, hi in chunks:
            coef.update(_coefficients(masks, low_bits, lo, hi))

    f = math.fsum(coef[u] * model.all_fail(u) for u in sorted(coef) if coef[u])
    f = min(1.0, max(0.0, f))
    elapsed = time.perf_counter() - started
    terms = (1 << c) - 1
    logger.debug("iet: c=%d terms=%d distinct unions=%d F=%.6g", c, terms, len(coef), f)
    return ReliabilityResult(
        reliability=1.0 - f,
        unreliability=f,
        terms_evaluated=terms,
        method="iet",
        elapsed=elapsed,
    )
