"""
最小割枚举: 命令行工具
用法:
  python3 -m mincut validate FILE                 # 连通性 + 节点是否都在某条 1→n 简单路径上
  python3 -m mincut layers FILE                   # PLSA 分层
  python3 -m mincut renumber FILE                 # 按层重新编号后的网络文件
  python3 -m mincut enumerate FILE --algo recursive --check plsa
  python3 -m mincut reliability FILE --method iet --p 0.9
  python3 -m mincut compare net7 bridge --oracle    # baseline vs recursive 差分对比
  python3 -m mincut compare --count 50 --nodes 10,10 --max-arcs 18
  python3 -m mincut compare --suite standard
  python3 -m mincut gen --nodes 7 --arcs 12 --count 3 --out-dir out/
  python3 -m mincut report out/report.txt         # 重新渲染机器格式报告

FILE 可以是路径，也可以是随包示例名 net7 / bridge / net7_shuffled
退出码: 0 正常 / 1 输入错误 / 2 差分不一致 / 3 资源护栏
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from .core.config import CheckMode, Config, load_config
from .core.errors import DifferentialMismatch, MincutError, ResourceLimitError
from .bench.generator import GenSpec, generate_network, generate_suite, standard_suite
from .bench.harness import CompareSettings, environment_info, run_compare
from .bench.report import emit_machine, parse_machine, render_text
from .network.layers import plsa_layers, renumber
from .network.model import Network
from .network.parser import FIXTURES, format_network, load_fixture, load_network
from .network.validate import validate
from .reliability.brute import reliability_brute
from .reliability.iet import unreliability_iet
from .reliability.models import FailureModel
from .search.baseline import enumerate_baseline
from .search.models import EnumOptions, EnumStats, McCatalog
from .search.oracle import mc_oracle
from .search.recursive import enumerate_recursive

logger = logging.getLogger("mincut")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_MISMATCH = 2
EXIT_RESOURCE = 3


class _Parser(argparse.ArgumentParser):
    """用法错误按输入错误处理 (退出码 1)，2 留给差分不一致"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"❌ {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def load_instance(ref: str) -> tuple[str, Network]:
    path = Path(ref)
    if path.exists():
        return path.stem, load_network(path)
    stem = ref.removesuffix(".net")
    if stem in FIXTURES:
        return stem, load_fixture(stem)
    raise FileNotFoundError(f"no such network file or fixture: {ref}")


def _pair(text: str, cast=int) -> tuple:
    lo, _, hi = text.partition(",")
    return cast(lo), cast(hi or lo)


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _machine(args) -> bool:
    return args.format == "machine"


# ── 子命令 ────────────────────────────────────────

def cmd_validate(args, cfg: Config) -> int:
    _, net = load_instance(args.file)
    report = validate(net, max_nodes=cfg.limits.max_nodes_path_check)
    if _machine(args):
        off = ",".join(map(str, sorted(report.nodes_off_all_paths))) or "-"
        print(f"connected={str(report.connected).lower()} nodes_off_all_paths={off} warnings={len(report.warnings)}")
    else:
        print(f"  连通: {'✅' if report.connected else '❌'}")
        off = " ".join(map(str, sorted(report.nodes_off_all_paths))) or "无"
        print(f"  不在任何 1→n 简单路径上的节点: {off}")
    for warning in report.warnings:
        print(f"  ⚠️ {warning}")
    return EXIT_OK


def cmd_layers(args, cfg: Config) -> int:
    _, net = load_instance(args.file)
    layering = plsa_layers(net, net.source)
    for idx, layer in enumerate(layering.layers, start=1):
        print(f"L{idx}: " + " ".join(map(str, sorted(layer))))
    return EXIT_OK


def cmd_renumber(args, cfg: Config) -> int:
    _, net = load_instance(args.file)
    renumbered, mapping = renumber(net)
    pairs = " ".join(f"{old}->{mapping.apply(old)}" for old in net.nodes)
    print(format_network(renumbered, comment=f"renumbered (old->new): {pairs}"), end="")
    return EXIT_OK


def _enum_options(args, cfg: Config) -> EnumOptions:
    opts = EnumOptions.from_config(cfg.enumeration)
    return EnumOptions(
        check=CheckMode(args.check) if args.check else opts.check,
        prune_isolated=opts.prune_isolated and not args.no_prune_isolated,
        prune_parent=opts.prune_parent and not args.no_prune_parent,
        cross_check=opts.cross_check,
    )


def _run_algo(algo: str, net: Network, opts: EnumOptions, cfg: Config) -> tuple[McCatalog, EnumStats | None]:
    if algo == "baseline":
        return enumerate_baseline(net)
    if algo == "oracle":
        return mc_oracle(net, cfg.limits.max_arcs), None
    return enumerate_recursive(net, opts)


def cmd_enumerate(args, cfg: Config) -> int:
    _, net = load_instance(args.file)
    catalog, stats = _run_algo(args.algo, net, _enum_options(args, cfg), cfg)

    print(f"c={catalog.count}" if _machine(args) else f"c = {catalog.count}")
    for cut in catalog:
        print(cut)
    if stats is not None:
        data = stats.to_dict()
        if _machine(args):
            print("stats " + " ".join(f"{k}={v}" for k, v in data.items()))
        else:
            print()
            for k, v in data.items():
                print(f"  {k}: {v:.6f}" if isinstance(v, float) else f"  {k}: {v}")
    return EXIT_OK


def cmd_reliability(args, cfg: Config) -> int:
    _, net = load_instance(args.file)
    model = FailureModel.from_network(net, args.p)
    if args.method == "brute":
        result = reliability_brute(net, model, cfg.limits.max_arcs)
    else:
        catalog, _ = enumerate_recursive(net, EnumOptions.from_config(cfg.enumeration))
        result = unreliability_iet(catalog, model, limit=cfg.limits.max_mc_terms, workers=args.workers)

    if _machine(args):
        print(" ".join(f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}" for k, v in result.to_dict().items()))
    else:
        print(f"  R = {result.reliability:.12f}")
        print(f"  F = {result.unreliability:.12f}")
        print(f"  terms = {result.terms_evaluated}")
        print(f"  time = {result.elapsed:.6f}s ({result.method})")
    return EXIT_OK


def _rule(args, cfg: Config) -> str:
    return args.rule or f"uniform:{cfg.bench.default_probability}"


def _compare_instances(args, cfg: Config) -> list[tuple[str, Network]]:
    instances = [load_instance(ref) for ref in args.files]
    if args.suite == "standard":
        instances += standard_suite(cfg.bench.seed, rule=_rule(args, cfg))
    if args.count:
        instances += generate_suite(
            args.count, _pair(args.nodes), args.max_arcs, cfg.bench.seed, rule=_rule(args, cfg),
        )
    return instances


def cmd_compare(args, cfg: Config) -> int:
    instances = _compare_instances(args, cfg)
    settings = CompareSettings(
        repetitions=max(cfg.bench.repetitions, args.repetitions or 0),
        opts=_enum_options(args, cfg),
        oracle=args.oracle,
        oracle_max_arcs=cfg.limits.max_arcs,
    )
    report = run_compare(
        instances, settings,
        workers=args.workers or cfg.bench.workers,
        environment=environment_info(seed=cfg.bench.seed, check=settings.opts.check.value),
    )

    text = emit_machine(report) if _machine(args) else render_text(report)
    print(text, end="")
    if args.output:
        Path(args.output).write_text(emit_machine(report), encoding="utf-8")

    if not report.passed:
        names = ", ".join(row.name for row in report.mismatches)
        raise DifferentialMismatch(f"catalogs differ on: {names}")
    return EXIT_OK


def cmd_gen(args, cfg: Config) -> int:
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for k in range(1, args.count + 1):
        spec = GenSpec.build(node_count=args.nodes, arc_count=args.arcs, seed=cfg.bench.seed + k - 1, rule=_rule(args, cfg))
        text = format_network(generate_network(spec), comment=f"generated: {spec.model_dump_json()}")
        if out_dir:
            path = out_dir / f"{args.prefix}-{k}.net"
            path.write_text(text, encoding="utf-8")
            logger.info("wrote %s", path)
        else:
            print(text, end="")
    return EXIT_OK


def cmd_report(args, cfg: Config) -> int:
    report = parse_machine(Path(args.file).read_text(encoding="utf-8"))
    print(emit_machine(report) if _machine(args) else render_text(report), end="")
    return EXIT_OK


COMMANDS = {
    "validate": cmd_validate,
    "layers": cmd_layers,
    "renumber": cmd_renumber,
    "enumerate": cmd_enumerate,
    "reliability": cmd_reliability,
    "compare": cmd_compare,
    "gen": cmd_gen,
    "report": cmd_report,
}


# ── 参数 ────────────────────────────────────────

def _add_enum_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--check", choices=[m.value for m in CheckMode], default=None, help="T 侧连通性检查方式")
    p.add_argument("--no-prune-isolated", action="store_true", help="关闭孤立节点剪枝")
    p.add_argument("--no-prune-parent", action="store_true", help="关闭父向量移除")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mincut", description="两端点二态网络最小割枚举")
    parser.add_argument("--seed", type=int, default=None, help="随机种子 (覆盖配置)")
    parser.add_argument("--format", choices=["text", "machine"], default="text")
    parser.add_argument("--limit-mc", type=int, default=None, help="IET 允许的最大 MC 数")
    parser.add_argument("--limit-arcs", type=int, default=None, help="2^m 穷举允许的最大弧数")
    parser.add_argument("--config", default="config", help="配置目录")
    parser.add_argument("--log-level", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("validate", "layers", "renumber"):
        sub.add_parser(name).add_argument("file")

    p = sub.add_parser("enumerate", help="枚举全部 MC")
    p.add_argument("file")
    p.add_argument("--algo", choices=["baseline", "recursive", "oracle"], default="recursive")
    _add_enum_flags(p)

    p = sub.add_parser("reliability", help="计算 R / F")
    p.add_argument("file")
    p.add_argument("--method", choices=["iet", "brute"], default="iet")
    p.add_argument("--p", type=float, default=None, help="统一工作概率 (缺省用文件中的概率)")
    p.add_argument("--workers", type=_positive_int, default=1)

    p = sub.add_parser("compare", help="baseline 与 recursive 差分对比")
    p.add_argument("files", nargs="*")
    p.add_argument("--suite", choices=["standard"], default=None)
    p.add_argument("--count", type=int, default=0, help="随机实例个数")
    p.add_argument("--nodes", default="4,12", help="随机实例节点数范围 lo,hi")
    p.add_argument("--max-arcs", type=int, default=24)
    p.add_argument("--rule", default=None, help="概率规则 uniform:p | alternating:p1,p2 | random:lo,hi")
    p.add_argument("--oracle", action="store_true", help="同时与暴力判定器比较")
    p.add_argument("--workers", type=_positive_int, default=None)
    p.add_argument("--repetitions", type=int, default=None)
    p.add_argument("-o", "--output", default=None, help="机器格式报告写入文件")
    _add_enum_flags(p)

    p = sub.add_parser("gen", help="生成随机实例")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--arcs", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--rule", default=None)
    p.add_argument("--out-dir", default=None)
    p.add_argument("--prefix", default="gen")

    p = sub.add_parser("report", help="重新渲染机器格式报告")
    p.add_argument("file")
    return parser


def _apply_overrides(cfg: Config, args) -> Config:
    if args.seed is not None:
        cfg.bench.seed = args.seed
    if args.limit_mc is not None:
        cfg.limits.max_mc_terms = args.limit_mc
    if args.limit_arcs is not None:
        cfg.limits.max_arcs = args.limit_arcs
    if args.log_level:
        cfg.logging.level = args.log_level
    return cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _apply_overrides(load_config(args.config), args)
    except (ValidationError, ValueError) as e:
        print(f"❌ invalid configuration: {e}", file=sys.stderr)
        return EXIT_INPUT
    setup_logging(cfg.logging.level)

    try:
        return COMMANDS[args.command](args, cfg)
    except DifferentialMismatch as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_MISMATCH
    except ResourceLimitError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (MincutError, OSError, ValueError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
