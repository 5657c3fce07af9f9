"""随机实例生成、差分对比、报告格式、反例最小化"""

import statistics
import timeit

import pytest

from mincut.bench.generator import STANDARD_SIZES, GenSpec, generate_network, generate_suite, standard_suite
from mincut.bench.harness import BenchReport, BenchRow, CompareSettings, catalogs_mismatch, environment_info, run_compare
from mincut.bench.report import emit_machine, parse_machine, render_text
from mincut.bench.shrink import restrict, shrink_network
from mincut.core.config import CheckMode
from mincut.core.errors import GenSpecError, PreconditionError, ReportFormatError
from mincut.network.layers import plsa_layers
from mincut.network.parser import format_network
from mincut.network.validate import validate
from mincut.search.baseline import enumerate_baseline
from mincut.search.models import EnumOptions
from mincut.search.recursive import enumerate_recursive


# ── 生成器 ────────────────────────────────────────

def test_generator_is_deterministic():
    spec = GenSpec.build(node_count=9, arc_count=14, seed=123)
    assert format_network(generate_network(spec)) == format_network(generate_network(spec))


def test_generator_different_seeds_differ():
    a = generate_network(GenSpec.build(node_count=10, arc_count=20, seed=1))
    b = generate_network(GenSpec.build(node_count=10, arc_count=20, seed=2))
    assert format_network(a) != format_network(b)


@pytest.mark.parametrize("n, m", [(2, 1), (4, 3), (5, 10), (12, 24)])
def test_generated_network_shape(n, m):
    net = generate_network(GenSpec.build(node_count=n, arc_count=m, seed=9))
    assert (net.node_count, net.arc_count) == (n, m)
    assert validate(net).connected
    assert [a.arc_id for a in net.arcs] == list(range(1, m + 1))
    assert net.probabilities == (0.9,) * m

    layer_of = plsa_layers(net, 1).layer_of
    assert list(layer_of) == sorted(layer_of)
    assert layer_of[-1] == max(layer_of)


@pytest.mark.parametrize("kwargs", [
    {"node_count": 4, "arc_count": 2},
    {"node_count": 4, "arc_count": 7},
    {"node_count": 1, "arc_count": 1},
    {"node_count": 4, "arc_count": 4, "rule": "bogus"},
    {"node_count": 4, "arc_count": 4, "rule": "random:0.9,0.1"},
    {"node_count": 4, "arc_count": 4, "rule": "alternating:0.9"},
])
def test_genspec_rejects_infeasible(kwargs):
    with pytest.raises(GenSpecError):
        GenSpec.build(**kwargs)


def test_probability_rules():
    alt = generate_network(GenSpec.build(node_count=6, arc_count=9, rule="alternating:0.96,0.91"))
    assert alt.probabilities[0] == 0.96
    assert alt.probabilities[1] == 0.91

    rnd = generate_network(GenSpec.build(node_count=6, arc_count=9, rule="random:0.8,0.95"))
    assert all(0.8 <= p <= 0.95 for p in rnd.probabilities)


def test_generate_suite_ranges():
    suite = generate_suite(25, node_range=(4, 8), max_arcs=12, seed=5)
    assert [name for name, _ in suite][:2] == ["rand-000", "rand-001"]
    for _, net in suite:
        assert 4 <= net.node_count <= 8
        assert net.node_count - 1 <= net.arc_count <= 12
    assert [format_network(n) for _, n in suite] == [format_network(n) for _, n in generate_suite(25, (4, 8), 12, 5)]


def test_standard_suite_sizes():
    suite = standard_suite(seed=42)
    assert len(suite) == 20
    assert [(net.node_count, net.arc_count) for _, net in suite] == list(STANDARD_SIZES)
    assert suite[0][0] == "std-01"


# ── 对比 ────────────────────────────────────────

def test_compare_fixtures(net7, bridge):
    settings = CompareSettings(repetitions=1, oracle=True)
    report = run_compare([("net7", net7), ("bridge", bridge)], settings, environment={"seed": "1"})

    first, second = report.rows
    assert (first.name, first.c, first.generated_baseline, first.generated_recursive) == ("net7", 16, 32, 25)
    assert (second.name, second.c, second.generated_baseline, second.generated_recursive) == ("bridge", 4, 4, 4)
    assert first.oracle_equal and second.oracle_equal
    assert report.passed
    assert report.mismatches == []


def _median_seconds(run, repetitions: int = 5, loops: int = 20) -> float:
    return statistics.median(t / loops for t in timeit.repeat(run, number=loops, repeat=repetitions))


def test_recursive_is_not_slower_than_baseline(net7):
    enumerate_baseline(net7)
    enumerate_recursive(net7)
    t_base = _median_seconds(lambda: enumerate_baseline(net7))
    t_rec = _median_seconds(lambda: enumerate_recursive(net7))
    assert t_rec <= t_base


def test_compare_edge_node_divergence_is_not_a_mismatch(net7):
    opts = EnumOptions(check=CheckMode.EDGE_NODE, cross_check=True)
    report = run_compare([("net7", net7)], CompareSettings(repetitions=1, opts=opts, oracle=True))
    row = report.rows[0]
    assert row.divergences > 0
    assert row.catalogs_equal
    assert row.oracle_equal
    assert report.passed


def test_compare_skips_oracle_above_limit(net7):
    report = run_compare([("net7", net7)], CompareSettings(repetitions=1, oracle=True, oracle_max_arcs=8))
    assert report.rows[0].oracle_equal is None
    assert report.passed


def test_compare_empty_instance_list():
    report = run_compare([])
    assert report.rows == []
    assert report.passed
    assert "python" in report.environment


def test_catalogs_mismatch_is_false_on_fixtures(bridge, net7_shuffled):
    assert not catalogs_mismatch(bridge)
    assert not catalogs_mismatch(net7_shuffled)


def test_environment_info_extras():
    env = environment_info(seed=3, workers=2)
    assert env["seed"] == "3"
    assert env["workers"] == "2"
    assert {"python", "platform", "machine", "cpus"} <= set(env)


# ── 报告 ────────────────────────────────────────

def _sample_report() -> BenchReport:
    return BenchReport(
        rows=[
            BenchRow("net7", 7, 12, 16, 32, 25, 0.0123, 0.00456, True, True, 0),
            BenchRow("rand-007", 9, 14, 30, 128, 71, 1.5e-05, 2.25e-05, False, None, 2),
        ],
        environment={"python": "3.11.4", "seed": "42"},
    )


def test_machine_format_round_trip():
    report = _sample_report()
    text = emit_machine(report)
    assert text.splitlines()[0] == "# env python=3.11.4 seed=42"
    assert "oracle_equal=-" in text
    assert parse_machine(text) == report


def test_machine_format_without_timing():
    text = emit_machine(_sample_report(), include_timing=False)
    assert "t_baseline" not in text
    parsed = parse_machine(text)
    assert [r.t_recursive for r in parsed.rows] == [0.0, 0.0]
    assert emit_machine(parsed, include_timing=False) == text


@pytest.mark.parametrize("line", [
    "name=x n=abc",
    "justaword",
    "name=x bogus=1",
    "name=x n=1",
    "name=x n=1 m=1 c=1 generated_baseline=1 generated_recursive=1 catalogs_equal=maybe",
])
def test_parse_machine_errors(line):
    with pytest.raises(ReportFormatError):
        parse_machine(line + "\n")


def test_render_text():
    text = render_text(_sample_report())
    for header in ("name", "T_baseline", "T_recursive", "gen_recursive", "diverged"):
        assert header in text
    assert "rand-007" in text
    assert "NO" in text
    assert "seed=42" in text


# ── 反例最小化 ────────────────────────────────────────

def test_restrict(bridge):
    sub = restrict(bridge, [1, 4])
    assert sub.node_count == 3
    assert [(a.u, a.v) for a in sub.arcs] == [(1, 2), (2, 3)]
    assert sub.label(3) == 4
    assert sub.probabilities == (0.9, 0.9)
    assert restrict(bridge, [1, 2]) is None


def test_shrink_is_one_minimal(net7):
    def failing(net):
        return net.arc_count >= 3

    result = shrink_network(net7, failing)
    assert failing(result)
    ids = [a.arc_id for a in result.arcs]
    for k in ids:
        sub = restrict(result, [j for j in ids if j != k])
        assert sub is None or not failing(sub)


def test_shrink_requires_failing_input(bridge):
    with pytest.raises(PreconditionError):
        shrink_network(bridge, lambda net: False)
