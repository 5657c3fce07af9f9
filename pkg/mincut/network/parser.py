"""
网络文件格式 (UTF-8，按行，# 开始注释)

    nodes <n>
    source <id>
    sink <id>
    arc <name> <u> <v> [<p>]     # 共 m 行，name 依次为 a1..am，p 为工作概率

解析是全有或全无的：任何一行出错都抛出带行号的 NetworkFormatError
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..core.errors import NetworkFormatError
from .model import Arc, Network

HEADER_KEYS = ("nodes", "source", "sink")


def parse_network(text: str) -> Network:
    """解析网络文件，归一化节点编号使 source=1、sink=n"""
    header: dict[str, int] = {}
    raw_arcs: list[tuple[int, int, int, float | None, int]] = []
    seen_names: set[str] = set()
    seen_pairs: dict[tuple[int, int], str] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0].lower()

        # 头部三行必须按顺序出现
        if len(header) < len(HEADER_KEYS):
            expected = HEADER_KEYS[len(header)]
            if key != expected or len(tokens) != 2:
                raise NetworkFormatError(f"expected '{expected} <int>'", line_no)
            header[expected] = _parse_int(tokens[1], line_no)
            if expected == "nodes" and header["nodes"] < 2:
                raise NetworkFormatError("nodes must be >= 2", line_no)
            if expected in ("source", "sink"):
                _check_node(header[expected], header["nodes"], line_no)
            if expected == "sink" and header["sink"] == header["source"]:
                raise NetworkFormatError("source and sink must differ", line_no)
            continue

        if key != "arc" or len(tokens) not in (4, 5):
            raise NetworkFormatError("malformed line, expected 'arc <name> <u> <v> [<p>]'", line_no)

        name = tokens[1]
        if name in seen_names:
            raise NetworkFormatError(f"duplicate arc id {name}", line_no)
        expected_name = f"a{len(raw_arcs) + 1}"
        if name != expected_name:
            raise NetworkFormatError(f"arc name must be {expected_name}, got {name}", line_no)
        seen_names.add(name)

        u = _parse_int(tokens[2], line_no)
        v = _parse_int(tokens[3], line_no)
        _check_node(u, header["nodes"], line_no)
        _check_node(v, header["nodes"], line_no)
        if u == v:
            raise NetworkFormatError(f"self-loop at node {u}", line_no)
        pair = (min(u, v), max(u, v))
        if pair in seen_pairs:
            raise NetworkFormatError(f"parallel arc {name} duplicates {seen_pairs[pair]}", line_no)
        seen_pairs[pair] = name

        p = None
        if len(tokens) == 5:
            try:
                p = float(tokens[4])
            except ValueError:
                raise NetworkFormatError(f"probability is not a number: {tokens[4]}", line_no) from None
            if not 0.0 <= p <= 1.0:
                raise NetworkFormatError(f"probability {p} outside [0,1]", line_no)
        raw_arcs.append((len(raw_arcs) + 1, u, v, p, line_no))

    if len(header) < len(HEADER_KEYS):
        raise NetworkFormatError(f"missing '{HEADER_KEYS[len(header)]}' header")

    with_p = [p is not None for _, _, _, p, _ in raw_arcs]
    if any(with_p) and not all(with_p):
        first_missing = next(ln for (_, _, _, p, ln) in raw_arcs if p is None)
        raise NetworkFormatError("probability missing (either every arc has one or none)", first_missing)

    # 归一化: source -> 1, sink -> n, 其余按原编号升序占 2..n-1
    n = header["nodes"]
    source, sink = header["source"], header["sink"]
    middle = [v for v in range(1, n + 1) if v not in (source, sink)]
    order = [source, *middle, sink]
    new_id = {old: new for new, old in enumerate(order, start=1)}

    arcs = []
    for k, u, v, _, _ in raw_arcs:
        a, b = sorted((new_id[u], new_id[v]))
        arcs.append(Arc(k, a, b))
    probabilities = tuple(p for *_, p, _ in raw_arcs) if raw_arcs and all(with_p) else None

    return Network(
        node_count=n,
        arcs=tuple(arcs),
        probabilities=probabilities,
        labels=tuple(order),
    )


def format_network(net: Network, comment: str | None = None) -> str:
    """序列化为文件格式 (归一化编号)"""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines += [f"nodes {net.node_count}", f"source {net.source}", f"sink {net.sink}"]
    for arc in net.arcs:
        p = net.probability(arc.arc_id)
        suffix = f" {p!r}" if p is not None else ""
        lines.append(f"arc {arc.name} {arc.u} {arc.v}{suffix}")
    return "\n".join(lines) + "\n"


def load_network(path: str | Path) -> Network:
    return parse_network(Path(path).read_text(encoding="utf-8"))


FIXTURE_ALIASES = {"net7": "fig1", "bridge": "fig3", "net7_shuffled": "fig4"}
FIXTURES = ("fig1", "fig3", "fig4", *FIXTURE_ALIASES)


def load_fixture(name: str) -> Network:
    """加载随包安装的示例网络 (fig1 / fig3 / fig4，或别名 net7 / bridge / net7_shuffled)"""
    stem = name.removesuffix(".net")
    stem = FIXTURE_ALIASES.get(stem, stem)
    text = resources.files("mincut.fixtures").joinpath(f"{stem}.net").read_text(encoding="utf-8")
    return parse_network(text)


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise NetworkFormatError(f"expected integer, got {token!r}", line_no) from None


def _check_node(v: int, n: int, line_no: int) -> None:
    if not 1 <= v <= n:
        raise NetworkFormatError(f"node index {v} out of range 1..{n}", line_no)
