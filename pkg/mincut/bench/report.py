"""
对比报告输出
text:    rich 表格，列 name n m c T_baseline T_recursive + 生成向量数 + 分歧数
machine: 首行 `# env k=v ...`，之后每行一个实例，空格分隔的 key=value
         布尔值 true/false，缺省值 -，浮点数用 repr 保证可逆
"""

from __future__ import annotations

import io
from dataclasses import fields

from rich.console import Console
from rich.table import Table

from ..core.errors import ReportFormatError
from .harness import BenchReport, BenchRow

ENV_PREFIX = "# env"
TIMING_KEYS = frozenset({"t_baseline", "t_recursive"})

_ROW_FIELDS = {f.name: f for f in fields(BenchRow)}
_INT_KEYS = {"n", "m", "c", "generated_baseline", "generated_recursive", "divergences"}
_FLOAT_KEYS = {"t_baseline", "t_recursive"}
_BOOL_KEYS = {"catalogs_equal", "oracle_equal"}


# ── 文本 ────────────────────────────────────────

def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "NO"


def render_text(report: BenchReport, width: int = 140) -> str:
    table = Table(title="MC enumeration: baseline vs recursive")
    for col in ("name", "n", "m", "c", "T_baseline", "T_recursive", "gen_baseline", "gen_recursive", "equal", "oracle", "diverged"):
        table.add_column(col, justify="left" if col == "name" else "right")
    for row in report.rows:
        table.add_row(
            row.name, str(row.n), str(row.m), str(row.c),
            f"{row.t_baseline:.6f}", f"{row.t_recursive:.6f}",
            str(row.generated_baseline), str(row.generated_recursive),
            _flag(row.catalogs_equal), _flag(row.oracle_equal), str(row.divergences),
        )

    buf = io.StringIO()
    console = Console(file=buf, width=width, no_color=True, highlight=False)
    console.print(table)
    if report.environment:
        console.print("  ".join(f"{k}={v}" for k, v in sorted(report.environment.items())))
    return buf.getvalue()


# ── 机器格式 ────────────────────────────────────────

def _encode(value: object) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    text = str(value)
    if not text or any(ch.isspace() for ch in text):
        raise ValueError(f"value {text!r} cannot be written as a single token")
    return text


def emit_machine(report: BenchReport, include_timing: bool = True) -> str:
    """include_timing=False 时去掉耗时字段 (用于确定性比较)"""
    lines = [" ".join([ENV_PREFIX, *(f"{k}={_encode(v)}" for k, v in sorted(report.environment.items()))])]
    for row in report.rows:
        tokens = [
            f"{key}={_encode(value)}"
            for key, value in row.to_dict().items()
            if include_timing or key not in TIMING_KEYS
        ]
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def _decode(key: str, raw: str, line_no: int) -> object:
    try:
        if key in _BOOL_KEYS:
            if raw == "-":
                return None
            if raw not in ("true", "false"):
                raise ValueError(f"expected true/false, got {raw!r}")
            return raw == "true"
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_KEYS:
            return float(raw)
    except ValueError as e:
        raise ReportFormatError(f"line {line_no}: bad value for {key}: {e}") from None
    return raw


def _pairs(tokens: list[str], line_no: int) -> dict[str, str]:
    pairs = {}
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or not key:
            raise ReportFormatError(f"line {line_no}: expected key=value, got {tok!r}")
        pairs[key] = value
    return pairs


def parse_machine(text: str) -> BenchReport:
    report = BenchReport()
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(ENV_PREFIX):
            report.environment = _pairs(line[len(ENV_PREFIX):].split(), line_no)
            continue
        if line.startswith("#"):
            continue

        pairs = _pairs(line.split(), line_no)
        unknown = set(pairs) - set(_ROW_FIELDS)
        if unknown:
            raise ReportFormatError(f"line {line_no}: unknown keys {sorted(unknown)}")
        values = {key: _decode(key, raw, line_no) for key, raw in pairs.items()}
        for key in TIMING_KEYS:
            values.setdefault(key, 0.0)
        try:
            report.rows.append(BenchRow(**values))
        except TypeError as e:
            raise ReportFormatError(f"line {line_no}: {e}") from None
    return report
