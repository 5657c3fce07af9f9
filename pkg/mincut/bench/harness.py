"""
差分对比 / 基准工具
每个实例: baseline 与 recursive 各跑 repetitions 次取中位数耗时，比较 MC 集合；
可选 oracle 与 edge-node 分歧检查，分歧反例用 delta debugging 最小化
实例可以分给进程池，报告行按输入顺序组装
"""

from __future__ import annotations

import logging
import os
import platform
import statistics
import sys
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Any

from ..core.config import CheckMode
from ..network.model import Network
from ..network.parser import format_network
from ..search.baseline import enumerate_baseline
from ..search.models import EnumOptions, EnumStats, McCatalog
from ..search.oracle import mc_oracle
from ..search.recursive import enumerate_recursive
from .shrink import shrink_network

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    name: str
    n: int
    m: int
    c: int
    generated_baseline: int
    generated_recursive: int
    t_baseline: float
    t_recursive: float
    catalogs_equal: bool
    oracle_equal: bool | None = None     # None: 未运行 oracle
    divergences: int = 0

    @property
    def passed(self) -> bool:
        return self.catalogs_equal and self.oracle_equal is not False

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)
    environment: dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def mismatches(self) -> list[BenchRow]:
        return [row for row in self.rows if not row.passed]


@dataclass(frozen=True)
class CompareSettings:
    repetitions: int = 5
    opts: EnumOptions = field(default_factory=EnumOptions)
    oracle: bool = False
    oracle_max_arcs: int = 24


def environment_info(seed: int | None = None, **extra: Any) -> dict[str, str]:
    env = {
        "python": platform.python_version(),
        "platform": sys.platform,
        "machine": platform.machine() or "unknown",
        "cpus": str(os.cpu_count() or 1),
    }
    if seed is not None:
        env["seed"] = str(seed)
    env.update({k: str(v) for k, v in extra.items()})
    return env


def _timed(
    run: Callable[[], tuple[McCatalog, EnumStats]],
    repetitions: int,
) -> tuple[McCatalog, EnumStats, float]:
    """中位数墙钟耗时 (perf_counter)，结果取第一次运行"""
    times = []
    first: tuple[McCatalog, EnumStats] | None = None
    for _ in range(repetitions):
        started = time.perf_counter()
        result = run()
        times.append(time.perf_counter() - started)
        if first is None:
            first = result
    catalog, stats = first
    return catalog, stats, statistics.median(times)


def compare_instance(name: str, net: Network, settings: CompareSettings) -> BenchRow:
    """
    edge-node 模式下计时的是快速判定的运行，catalogs_equal 取 plsa 判定的结果；
    快速判定的分歧只计入 divergences 列
    """
    base_cat, base_stats, t_base = _timed(lambda: enumerate_baseline(net), settings.repetitions)
    rec_cat, rec_stats, t_rec = _timed(lambda: enumerate_recursive(net, settings.opts), settings.repetitions)

    checked_cat = rec_cat
    if settings.opts.check is CheckMode.EDGE_NODE:
        checked_cat, _ = enumerate_recursive(net, replace(settings.opts, check=CheckMode.PLSA))
        if rec_cat.as_set() != checked_cat.as_set():
            logger.warning(
                "%s: edge-node catalog differs from plsa (c=%d vs c=%d, %d divergences)",
                name, rec_cat.count, checked_cat.count, len(rec_stats.divergences),
            )

    equal = base_cat.as_set() == checked_cat.as_set()
    if not equal:
        logger.error(
            "%s: catalogs differ (baseline c=%d, recursive c=%d)",
            name, base_cat.count, checked_cat.count,
        )

    oracle_equal = None
    if settings.oracle and net.arc_count <= settings.oracle_max_arcs:
        oracle_equal = mc_oracle(net, settings.oracle_max_arcs).as_set() == base_cat.as_set()
        if not oracle_equal:
            logger.error("%s: baseline disagrees with the oracle", name)

    return BenchRow(
        name=name,
        n=net.node_count,
        m=net.arc_count,
        c=base_cat.count,
        generated_baseline=base_stats.vectors_generated,
        generated_recursive=rec_stats.vectors_generated,
        t_baseline=t_base,
        t_recursive=t_rec,
        catalogs_equal=equal,
        oracle_equal=oracle_equal,
        divergences=len(rec_stats.divergences),
    )


def _compare_job(job: tuple[str, Network, CompareSettings]) -> BenchRow:
    return compare_instance(*job)


def run_compare(
    instances: Sequence[tuple[str, Network]],
    settings: CompareSettings | None = None,
    workers: int = 1,
    environment: dict[str, str] | None = None,
) -> BenchReport:
    """worker 独占各自实例，报告行顺序与输入一致"""
    settings = settings or CompareSettings()
    jobs = [(name, net, settings) for name, net in instances]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_compare_job, jobs))
    else:
        rows = [_compare_job(job) for job in jobs]

    report = BenchReport(rows=rows, environment=environment or environment_info())
    logger.info(
        "compared %d instances: %d mismatches, %d with edge-node divergences",
        len(rows), len(report.mismatches), sum(1 for r in rows if r.divergences),
    )
    nets = dict(instances)
    plsa_opts = replace(settings.opts, check=CheckMode.PLSA)
    for row in rows:
        if not row.catalogs_equal:
            repro = shrink_network(nets[row.name], lambda sub: catalogs_mismatch(sub, plsa_opts))
            logger.error("%s: minimized mismatch repro:\n%s", row.name, format_network(repro))
        if row.divergences:
            logger.warning("%s: edge-node divergence, minimized repro:\n%s", row.name, minimized_divergence(nets[row.name]))
    return report


def _diverges(net: Network) -> bool:
    opts = EnumOptions(check=CheckMode.EDGE_NODE, cross_check=True)
    _, stats = enumerate_recursive(net, opts)
    return bool(stats.divergences)


def minimized_divergence(net: Network) -> str:
    """edge-node 与 plsa 分歧的最小反例 (网络文件文本)"""
    small = shrink_network(net, _diverges)
    return format_network(small, comment="edge-node check diverges from plsa on this network")


def catalogs_mismatch(net: Network, opts: EnumOptions | None = None) -> bool:
    """baseline 与 recursive 结果不同 (供 shrink_network 使用)"""
    base, _ = enumerate_baseline(net)
    rec, _ = enumerate_recursive(net, opts)
    return base.as_set() != rec.as_set()
