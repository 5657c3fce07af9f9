"""
随机实例生成器
随机生成树保证连通，再均匀补充非边；源汇取层距离最远的一对节点，
最后按 PLSA 重新编号并按 (u, v) 排序命名 a1..am
同一 seed 生成完全相同的网络
"""

from __future__ import annotations

import itertools
import random

import networkx as nx
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..core.errors import GenSpecError
from ..network.layers import renumber
from ..network.model import Arc, Network

# 标准基准集各实例的 (n, m)
STANDARD_SIZES: tuple[tuple[int, int], ...] = (
    (4, 5), (6, 8), (5, 8), (6, 9), (9, 12), (7, 14), (11, 21), (9, 13), (8, 12), (9, 14),
    (7, 12), (8, 13), (16, 30), (21, 26), (9, 14), (10, 21), (18, 27), (13, 22), (20, 30), (16, 24),
)

_RULES = ("uniform", "alternating", "random")


def _parse_rule(rule: str) -> tuple[str, tuple[float, ...]]:
    kind, _, args = rule.partition(":")
    kind = kind.strip()
    if kind not in _RULES:
        raise ValueError(f"unknown probability rule {kind!r} (expected one of {', '.join(_RULES)})")
    try:
        values = tuple(float(a) for a in args.split(",")) if args else ()
    except ValueError as e:
        raise ValueError(f"bad probability rule {rule!r}: {e}") from None

    expected = {"uniform": (0, 1), "alternating": (2,), "random": (2,)}[kind]
    if len(values) not in expected:
        raise ValueError(f"rule {kind!r} takes {' or '.join(map(str, expected))} values, got {len(values)}")
    if any(not 0.0 <= p <= 1.0 for p in values):
        raise ValueError(f"probabilities in {rule!r} must lie in [0,1]")
    if kind == "random" and values[0] > values[1]:
        raise ValueError(f"random rule needs lo <= hi, got {values}")
    return kind, values


class GenSpec(BaseModel):
    """随机实例规格"""
    node_count: int = Field(ge=2)
    arc_count: int = Field(ge=1)
    seed: int = 42
    rule: str = "uniform:0.9"

    @field_validator("rule")
    @classmethod
    def _check_rule(cls, v: str) -> str:
        _parse_rule(v)
        return v

    @model_validator(mode="after")
    def _check_arc_range(self) -> GenSpec:
        n, m = self.node_count, self.arc_count
        if not n - 1 <= m <= n * (n - 1) // 2:
            raise ValueError(f"arc_count must lie in [{n - 1}, {n * (n - 1) // 2}] for n={n}, got {m}")
        return self

    @classmethod
    def build(cls, **kwargs) -> GenSpec:
        """pydantic 校验错误统一转成 GenSpecError"""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            messages = "; ".join(err["msg"] for err in e.errors())
            raise GenSpecError(messages) from None

    @property
    def probability_rule(self) -> tuple[str, tuple[float, ...]]:
        return _parse_rule(self.rule)


def _probabilities(spec: GenSpec, m: int, rng: random.Random) -> tuple[float, ...]:
    kind, values = spec.probability_rule
    if kind == "uniform":
        p = values[0] if values else 0.9
        return tuple(p for _ in range(m))
    if kind == "alternating":
        p_odd, p_even = values
        return tuple(p_odd if k % 2 else p_even for k in range(1, m + 1))
    lo, hi = values
    return tuple(round(rng.uniform(lo, hi), 6) for _ in range(m))


def _random_structure(n: int, m: int, rng: random.Random) -> nx.Graph:
    order = list(range(n))
    rng.shuffle(order)
    g = nx.Graph()
    g.add_nodes_from(range(n))
    for idx in range(1, n):
        g.add_edge(order[idx], order[rng.randrange(idx)])

    non_edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if not g.has_edge(u, v)]
    g.add_edges_from(rng.sample(non_edges, m - (n - 1)))
    return g


def _farthest_pair(g: nx.Graph) -> tuple[int, int]:
    """层距离最大的两点，平局取字典序最小"""
    dist = dict(nx.all_pairs_shortest_path_length(g))
    return max(
        itertools.combinations(sorted(g.nodes), 2),
        key=lambda pair: (dist[pair[0]][pair[1]], -pair[0], -pair[1]),
    )


def generate_network(spec: GenSpec) -> Network:
    rng = random.Random(spec.seed)
    n, m = spec.node_count, spec.arc_count
    g = _random_structure(n, m, rng)
    source, sink = _farthest_pair(g)

    middle = [v for v in sorted(g.nodes) if v not in (source, sink)]
    ids = {source: 1, sink: n}
    ids.update({v: k for k, v in enumerate(middle, start=2)})

    pairs = sorted(tuple(sorted((ids[u], ids[v]))) for u, v in g.edges)
    draft = Network(node_count=n, arcs=tuple(Arc(k, u, v) for k, (u, v) in enumerate(pairs, start=1)))
    ordered, _ = renumber(draft)

    pairs = sorted((arc.u, arc.v) for arc in ordered.arcs)
    return Network(
        node_count=n,
        arcs=tuple(Arc(k, u, v) for k, (u, v) in enumerate(pairs, start=1)),
        probabilities=_probabilities(spec, m, rng),
    )


def generate_suite(
    count: int,
    node_range: tuple[int, int],
    max_arcs: int,
    seed: int,
    rule: str = "uniform:0.9",
) -> list[tuple[str, Network]]:
    """count 个随机实例，n 在 node_range 内，m 不超过 max_arcs"""
    rng = random.Random(seed)
    suite = []
    for k in range(count):
        n = rng.randint(*node_range)
        hi = min(n * (n - 1) // 2, max(max_arcs, n - 1))
        m = rng.randint(n - 1, hi)
        spec = GenSpec.build(node_count=n, arc_count=m, seed=rng.randrange(2**31), rule=rule)
        suite.append((f"rand-{k:03d}", generate_network(spec)))
    return suite


def standard_suite(seed: int, rule: str = "uniform:0.9") -> list[tuple[str, Network]]:
    """标准基准集: 每个 (n, m) 生成一个实例"""
    return [
        (f"std-{k:02d}", generate_network(GenSpec.build(node_count=n, arc_count=m, seed=seed + k, rule=rule)))
        for k, (n, m) in enumerate(STANDARD_SIZES, start=1)
    ]
