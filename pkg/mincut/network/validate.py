"""
网络假设校验 (只报告，不抛异常)
- 连通性: 从节点 1 做 PLSA
- 假设 1: 每个节点至少在一条 1→n 简单路径上 (n 较小时穷举简单路径)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import networkx as nx

from .layers import plsa_connected
from .model import Network

logger = logging.getLogger(__name__)


@dataclass
class ValidationReport:
    connected: bool
    nodes_off_all_paths: frozenset[int] = frozenset()
    warnings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.connected and not self.nodes_off_all_paths

    def to_dict(self) -> dict:
        return {
            "connected": self.connected,
            "nodes_off_all_paths": sorted(self.nodes_off_all_paths),
            "warnings": self.warnings,
        }


def validate(net: Network, max_nodes: int = 16) -> ValidationReport:
    reached, connected = plsa_connected(net, frozenset(net.nodes), net.source)
    report = ValidationReport(connected=connected)
    if not connected:
        missing = sorted(set(net.nodes) - reached)
        report.warnings.append(f"disconnected: nodes {missing} unreachable from node 1")

    if net.node_count > max_nodes:
        report.warnings.append(
            f"simple-path check skipped: n={net.node_count} > {max_nodes}"
        )
        logger.warning("simple-path check skipped for n=%d", net.node_count)
        return report

    # 所有节点都被覆盖后即可停止枚举
    covered: set[int] = set()
    everything = set(net.nodes)
    for path in nx.all_simple_paths(net.to_networkx(), net.source, net.sink):
        covered.update(path)
        if covered == everything:
            break

    report.nodes_off_all_paths = frozenset(everything - covered)
    if report.nodes_off_all_paths:
        report.warnings.append(
            f"nodes on no simple 1-{net.sink} path: {sorted(report.nodes_off_all_paths)}"
        )
    return report
