"""
可行性与孤立节点判定

可行向量: G(S(X)) 与 G(T(X)) 都连通 (连通图上与 MC 一一对应)
孤立节点判定按强度从高到低:
  (c) parent_removable     某层 L_t (2 <= t < λ(v)) 整层落在 T 中
  (b) son_and_offspring_infeasible
        T 侧: 已固定节点 (编号 <= v) 在 G(T(son)) 中到不了 n
        S 侧: S(son) 中节点即使加入全部未固定节点也到不了 1
  (a) son_infeasible       S(son) 不连通
  none
"""

from __future__ import annotations

from ..core.config import CheckMode
from ..network.layers import Layering, plsa_connected, plsa_reaches
from ..network.model import Network
from .bat import EnumState, NodeVector
from .models import IsolationKind, IsolationVerdict


def is_feasible(net: Network, x: NodeVector) -> bool:
    """S(X) 从 1 出发、T(X) 从 n 出发各做一次 PLSA"""
    if x.width != net.node_count - 2:
        raise ValueError(f"vector width {x.width} != n-2 = {net.node_count - 2}")
    _, s_ok = plsa_connected(net, x.s_side(), net.source)
    if not s_ok:
        return False
    _, t_ok = plsa_connected(net, x.t_side(), net.sink)
    return t_ok


def t_side_unreached(net: Network, t_side: frozenset[int]) -> frozenset[int]:
    """G(T) 中从 n 出发到不了的节点"""
    reached, _ = plsa_connected(net, t_side, net.sink)
    return t_side - reached


def edge_node_check(net: Network, son: EnumState) -> bool:
    """边缘节点快速判定: G(U(parent) - {v}) 连通 (空集视为连通)"""
    if son.parent_edge_nodes is None:
        raise ValueError("edge-node check needs the parent's edge nodes")
    rest = son.parent_edge_nodes - {son.added}
    if not rest:
        return True
    _, ok = plsa_connected(net, rest, min(rest))
    return ok


def t_side_check(
    net: Network,
    son: EnumState,
    mode: CheckMode = CheckMode.PLSA,
    unreached: frozenset[int] | None = None,
) -> bool:
    """
    T(son) 连通性
    plsa: 精确判定，可传入已算好的 unreached 复用
    edge-node: 只看父向量的边缘节点，是未经证明的快速判定
    """
    if mode is CheckMode.EDGE_NODE:
        return edge_node_check(net, son)
    if unreached is None:
        unreached = t_side_unreached(net, son.t_side(net))
    return not unreached


_NO_VERDICT = IsolationVerdict.none()


def parent_removable(layering: Layering, parent: EnumState, v: int) -> bool:
    """(c): S(parent) 未覆盖 L_2..L_{λ(v)-1} 中的某一层，v 不属于这些层"""
    lam = layering.layer(v)
    if lam < 3:
        return False
    below = (1 << (lam - 1)) - 1
    covered = parent.layer_mask or layering.mask_of(parent.s_side)
    return covered & below != below


def classify_isolation(
    net: Network,
    layering: Layering,
    parent: EnumState,
    v: int,
    unreached: frozenset[int] | None = None,
) -> IsolationVerdict:
    """
    返回最强的适用判定，witness 为触发判定的节点
    layering 必须来自已按层重新编号的网络
    """
    # (c) 外部孤立: v 与 S 之间隔着整层 T 节点，父向量之后的子向量只会加入层号更大的节点
    if parent_removable(layering, parent, v):
        return IsolationVerdict(IsolationKind.PARENT_REMOVABLE, v)
    return classify_son(net, parent, v, parent.s_side | {v}, unreached)


def classify_son(
    net: Network,
    parent: EnumState,
    v: int,
    s_side: frozenset[int],
    unreached: frozenset[int] | None = None,
) -> IsolationVerdict:
    """(c) 已排除后的 (b)/(a) 判定；s_side 为 S(son)"""
    # (b) T 侧: 已固定的 T 节点以后只会留在 T，而 T 只会缩小
    if unreached is None:
        unreached = t_side_unreached(net, net.node_set - s_side)
    stranded = [u for u in unreached if u <= v]
    if stranded:
        return IsolationVerdict(IsolationKind.SON_AND_OFFSPRING_INFEASIBLE, min(stranded))

    # S(parent) 连通且 v 与之相邻: S(son) 连通，S 侧不会有被切断的节点
    if parent.s_connected and v in parent.edge_nodes:
        return _NO_VERDICT

    # (b) S 侧: 后代的 S 不会超出 S(son) ∪ {v+1..n-1}
    allowed = s_side | frozenset(range(v + 1, net.sink))
    if parent.s_connected:
        # 只有 v 可能被切断: 它得经由未固定节点接回 S(parent)
        if plsa_reaches(net, allowed, v, parent.s_side):
            return IsolationVerdict(IsolationKind.SON_INFEASIBLE, v)
        return IsolationVerdict(IsolationKind.SON_AND_OFFSPRING_INFEASIBLE, v)

    reached, _ = plsa_connected(net, allowed, net.source)
    cut_off = s_side - reached
    if cut_off:
        return IsolationVerdict(IsolationKind.SON_AND_OFFSPRING_INFEASIBLE, min(cut_off))

    # (a)
    _, ok = plsa_connected(net, s_side, net.source)
    return _NO_VERDICT if ok else IsolationVerdict(IsolationKind.SON_INFEASIBLE, v)
