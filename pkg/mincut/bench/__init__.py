"""基准层：随机实例生成、差分对比、报告输出、反例最小化"""

from .generator import GenSpec, STANDARD_SIZES, generate_network, generate_suite, standard_suite
from .harness import BenchReport, BenchRow, CompareSettings, compare_instance, environment_info, run_compare
from .report import emit_machine, parse_machine, render_text
from .shrink import restrict, shrink_network

__all__ = [
    "GenSpec", "STANDARD_SIZES", "generate_network", "generate_suite", "standard_suite",
    "BenchReport", "BenchRow", "CompareSettings", "compare_instance", "environment_info", "run_compare",
    "emit_machine", "parse_machine", "render_text",
    "restrict", "shrink_network",
]
