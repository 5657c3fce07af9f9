"""
递归节点 BAT 枚举 (带孤立节点剪枝)

STEP 0  PLSA 分层 + 重新编号，种子 X1 = (0)，X2 在第 1 轮由 X1 生成
STEP i  冻结 N* = N，前 N* 个存活父向量各生成一个子向量 (坐标 i 置 1，加入节点 v = i+1)
        判定顺序: 孤立节点 → S 侧连通 → T 侧连通
        parent_removable / son_and_offspring_infeasible 的子向量不入列表
        son_infeasible 的子向量保留 (不输出 MC)，其后代可能重新连上 S

事件中的节点编号、向量坐标都是重新编号后的网络上的，
RUN_STARTED 携带 network 与 renumbering 供订阅者换算
"""

from __future__ import annotations

import logging
import time

from ..core.config import CheckMode
from ..core.events import EventBus, EventType
from ..network.layers import Layering, plsa_layers, renumber
from ..network.model import Network, cut_of
from .bat import EnumState, RecursiveFrontier, root_state, spawn_son
from .feasibility import classify_son, edge_node_check, parent_removable, t_side_unreached
from .models import Divergence, EnumOptions, EnumStats, IsolationKind, IsolationVerdict, McCatalog

logger = logging.getLogger(__name__)


class RecursiveEnumerator:
    """单次枚举运行，持有递归列表与统计"""

    def __init__(self, net: Network, opts: EnumOptions, bus: EventBus | None = None):
        self.opts = opts
        self.bus = bus
        self._ablated = not (opts.prune_parent and opts.prune_isolated)
        layering = plsa_layers(net, net.source)
        self.net, self.renumbering = renumber(net, layering)
        self.layering: Layering = (
            layering if self.renumbering.is_identity else plsa_layers(self.net, self.net.source)
        )
        self.frontier = RecursiveFrontier()
        self.catalog = McCatalog()
        self.stats = EnumStats()

    # ── 主循环 ────────────────────────────────────────

    def run(self) -> tuple[McCatalog, EnumStats]:
        started = time.perf_counter()
        net = self.net
        self._emit(
            EventType.RUN_STARTED,
            algorithm="recursive", n=net.node_count, m=net.arc_count,
            network=net, renumbering=self.renumbering,
        )

        seed = root_state(net)
        _, seed.feasible = _t_connected(net, seed)
        self._admit(seed)

        width = net.node_count - 2
        for i in range(1, width + 1):
            self.frontier.begin_iteration(i)
            for parent in self.frontier.parents():
                self._spawn(parent, i)
            logger.debug(
                "iteration %d: N*=%d N=%d c=%d",
                i, self.frontier.snapshot_count, self.frontier.total_count, self.catalog.count,
            )

        self.stats.wall_time = time.perf_counter() - started
        logger.debug(
            "recursive: n=%d m=%d c=%d generated=%d removed=%d fathomed=%d in %.4fs",
            net.node_count, net.arc_count, self.catalog.count, self.stats.vectors_generated,
            self.stats.parents_removed, self.stats.sons_fathomed, self.stats.wall_time,
        )
        if self.stats.divergences:
            logger.warning("edge-node check diverged from plsa on %d vectors", len(self.stats.divergences))
        if self.bus:
            self._emit(EventType.RUN_FINISHED, algorithm="recursive", stats=self.stats.to_dict())
        return self.catalog, self.stats

    def _spawn(self, parent: EnumState, i: int) -> None:
        net = self.net
        son = spawn_son(parent, i, net)
        v = son.added
        son.layer_mask = parent.layer_mask | (1 << (self.layering.layer(v) - 1))
        self.stats.vectors_generated += 1

        unreached = None
        if parent_removable(self.layering, parent, v):
            verdict = IsolationVerdict(IsolationKind.PARENT_REMOVABLE, v)
        else:
            unreached = t_side_unreached(net, son.t_side(net))
            verdict = classify_son(net, parent, v, son.s_side, unreached)
        if self._ablated:
            verdict = self._apply_ablation(verdict)

        if verdict.kind is IsolationKind.PARENT_REMOVABLE:
            parent.alive = False
            self.stats.parents_removed += 1
            self.stats.sons_fathomed += 1
            if self.bus:
                self._emit(
                    EventType.PARENT_REMOVED,
                    parent=parent.vector.as_tuple(), son=son.vector.as_tuple(),
                    iteration=i, witness=verdict.witness,
                )
            return
        if verdict.kind is IsolationKind.SON_AND_OFFSPRING_INFEASIBLE:
            self.stats.sons_fathomed += 1
            if self.bus:
                self._emit(
                    EventType.SON_FATHOMED,
                    son=son.vector.as_tuple(), iteration=i, witness=verdict.witness,
                )
            return

        son.s_connected = verdict.kind is not IsolationKind.SON_INFEASIBLE
        if son.s_connected:
            son.feasible = self._t_side_ok(parent, son, unreached)
        self._admit(son)

    def _apply_ablation(self, verdict: IsolationVerdict) -> IsolationVerdict:
        """关闭的规则降级为更弱的判定 (判定本身仍然成立)"""
        kind = verdict.kind
        if kind is IsolationKind.PARENT_REMOVABLE and not self.opts.prune_parent:
            kind = IsolationKind.SON_AND_OFFSPRING_INFEASIBLE
        if kind is IsolationKind.SON_AND_OFFSPRING_INFEASIBLE and not self.opts.prune_isolated:
            kind = IsolationKind.SON_INFEASIBLE
        if kind is verdict.kind:
            return verdict
        return IsolationVerdict(kind, verdict.witness)

    def _t_side_ok(self, parent: EnumState, son: EnumState, unreached: frozenset[int]) -> bool:
        exact = not unreached
        if self.opts.check is not CheckMode.EDGE_NODE or not parent.feasible:
            return exact

        fast = edge_node_check(self.net, son)
        if self.opts.cross_check and fast != exact:
            divergence = Divergence(
                vector=son.vector.as_tuple(),
                s_side=tuple(sorted(son.s_side)),
                plsa=exact,
                edge_node=fast,
            )
            self.stats.divergences.append(divergence)
            logger.debug("edge-node diverged: %s", divergence)
            self._emit(EventType.CHECK_DIVERGED, **divergence.to_dict())
        return fast

    def _admit(self, state: EnumState) -> None:
        """入列表；可行则输出 C(X)"""
        if state.added is None:
            self.stats.vectors_generated += 1
        self.frontier.append(state)
        if not state.feasible:
            return
        self.stats.vectors_feasible += 1
        cut = cut_of(self.net, state.s_side)
        if self.catalog.add(cut) and self.bus:
            self._emit(
                EventType.STATE_EMITTED,
                vector=state.vector.as_tuple(),
                s_side=tuple(sorted(state.s_side)),
                edge_nodes=tuple(sorted(state.edge_nodes)),
                cut=cut,
                iteration=state.iteration,
            )

    def _emit(self, event_type: EventType, **data) -> None:
        if self.bus:
            self.bus.emit_simple(event_type, **data)


def _t_connected(net: Network, state: EnumState) -> tuple[frozenset[int], bool]:
    unreached = t_side_unreached(net, state.t_side(net))
    return unreached, not unreached


def enumerate_recursive(
    net: Network,
    opts: EnumOptions | None = None,
    bus: EventBus | None = None,
) -> tuple[McCatalog, EnumStats]:
    """输出的 MC 弧编号与输入网络一致 (重新编号不改变弧编号)"""
    return RecursiveEnumerator(net, opts or EnumOptions(), bus).run()
