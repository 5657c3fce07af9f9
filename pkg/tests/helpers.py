"""测试用构造工具"""

from __future__ import annotations

from mincut.network.layers import plsa_connected
from mincut.network.model import Arc, Network
from mincut.search.bat import EnumState, root_state, spawn_son


def make_network(n: int, pairs: list[tuple[int, int]], p: float | None = None) -> Network:
    """按给定顺序命名 a1..am，端点自动归一化为 u < v"""
    arcs = tuple(Arc(k, min(u, v), max(u, v)) for k, (u, v) in enumerate(pairs, start=1))
    probs = None if p is None else tuple(p for _ in pairs)
    return Network(node_count=n, arcs=arcs, probabilities=probs)


def network_text(n: int, pairs: list[tuple[int, int]], source: int = 1, sink: int | None = None) -> str:
    lines = [f"nodes {n}", f"source {source}", f"sink {sink or n}"]
    lines += [f"arc a{k} {u} {v}" for k, (u, v) in enumerate(pairs, start=1)]
    return "\n".join(lines) + "\n"


def state_for(net: Network, s_side: set[int]) -> EnumState:
    """按升序加入节点构造递归状态，连通性标记按实际情况填写"""
    state = root_state(net)
    for v in sorted(set(s_side) - {net.source}):
        state = spawn_son(state, v - 1, net)
        _, state.s_connected = plsa_connected(net, state.s_side, net.source)
        _, t_ok = plsa_connected(net, state.t_side(net), net.sink)
        state.feasible = state.s_connected and t_ok
    return state
