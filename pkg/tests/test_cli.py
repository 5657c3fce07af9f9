"""命令行: 输出格式与退出码"""

import pytest

from mincut import cli
from mincut.bench.harness import BenchReport, BenchRow
from mincut.bench.report import emit_machine, parse_machine
from mincut.network.layers import renumber
from mincut.network.parser import load_network, parse_network


@pytest.fixture
def run(tmp_path, capsys):
    """以空配置目录运行 main，返回 (退出码, stdout, stderr)"""
    def _run(*argv: str):
        code = cli.main(["--config", str(tmp_path), *argv])
        out, err = capsys.readouterr()
        return code, out, err
    return _run


def test_enumerate_bridge_text(run):
    code, out, _ = run("enumerate", "bridge")
    lines = out.splitlines()
    assert code == 0
    assert lines[:5] == ["c = 4", "a1 a2", "a2 a3 a4", "a1 a3 a5", "a4 a5"]
    assert "  vectors_generated: 4" in lines


def test_enumerate_machine(run):
    code, out, _ = run("--format", "machine", "enumerate", "net7", "--algo", "baseline")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "c=16"
    assert lines[-1].startswith("stats vectors_generated=32 ")


def test_enumerate_oracle_has_no_stats(run):
    code, out, _ = run("enumerate", "bridge", "--algo", "oracle")
    assert code == 0
    assert out.splitlines() == ["c = 4", "a1 a2", "a4 a5", "a1 a3 a5", "a2 a3 a4"]


def test_enumerate_ablation_flags(run):
    code, out, _ = run("--format", "machine", "enumerate", "net7", "--no-prune-parent")
    assert code == 0
    assert "vectors_generated=27" in out.splitlines()[-1]


def test_missing_file_is_input_error(run, tmp_path):
    code, _, err = run("enumerate", str(tmp_path / "nope.net"))
    assert code == 1
    assert "❌" in err


def test_malformed_file_is_input_error(run, tmp_path):
    path = tmp_path / "bad.net"
    path.write_text("nodes 3\nsource 1\nsink 3\narc a1 1 1\n", encoding="utf-8")
    code, _, err = run("validate", str(path))
    assert code == 1
    assert "line 4" in err


def test_oracle_size_guard_exit_code(run):
    code, _, err = run("--limit-arcs", "3", "enumerate", "bridge", "--algo", "oracle")
    assert code == 3
    assert "exceeds" in err


def test_iet_term_limit_exit_code(run):
    code, _, _ = run("--limit-mc", "3", "reliability", "net7")
    assert code == 3


def test_usage_error_exits_with_input_code(tmp_path):
    with pytest.raises(SystemExit) as info:
        cli.main(["--config", str(tmp_path), "enumerate"])
    assert info.value.code == 1


def test_invalid_config_is_input_error(tmp_path, capsys):
    (tmp_path / "default.yaml").write_text("bench:\n  repetitions: 2\n", encoding="utf-8")
    assert cli.main(["--config", str(tmp_path), "layers", "bridge"]) == 1
    assert "invalid configuration" in capsys.readouterr().err


def test_validate_machine(run):
    code, out, _ = run("--format", "machine", "validate", "bridge")
    assert code == 0
    assert out.strip() == "connected=true nodes_off_all_paths=- warnings=0"


def test_layers(run):
    code, out, _ = run("layers", "net7")
    assert code == 0
    assert out.splitlines() == ["L1: 1", "L2: 2 3", "L3: 4 5 6", "L4: 7"]


def test_renumber_prints_loadable_network(run, net7_shuffled):
    code, out, _ = run("renumber", "net7_shuffled")
    assert code == 0
    assert out.startswith("# renumbered (old->new): 1->1 ")
    assert parse_network(out) == renumber(net7_shuffled)[0]


def test_reliability_machine(run):
    code, out, _ = run("--format", "machine", "reliability", "bridge")
    fields = dict(tok.split("=", 1) for tok in out.split())
    assert code == 0
    assert fields["method"] == "iet"
    assert float(fields["R"]) == pytest.approx(0.97848, abs=1e-12)
    assert fields["terms"] == "15"


def test_reliability_brute_with_uniform_p(run):
    code, out, _ = run("reliability", "bridge", "--method", "brute", "--p", "0.9")
    assert code == 0
    assert "R = 0.978480000000" in out


def test_compare_writes_machine_report(run, tmp_path):
    report_path = tmp_path / "report.txt"
    code, out, _ = run("compare", "net7", "bridge", "--oracle", "-o", str(report_path))
    assert code == 0
    assert "net7" in out
    report = parse_machine(report_path.read_text(encoding="utf-8"))
    assert [row.name for row in report.rows] == ["net7", "bridge"]
    assert all(row.oracle_equal for row in report.rows)
    assert report.environment["seed"] == "42"


def test_compare_seed_override(run):
    code, out, _ = run("--seed", "7", "--format", "machine", "compare", "--count", "2", "--nodes", "4,5", "--max-arcs", "6")
    assert code == 0
    assert out.splitlines()[0].startswith("# env ")
    assert "seed=7" in out.splitlines()[0]
    assert len(out.splitlines()) == 3


def test_compare_mismatch_exit_code(run, monkeypatch):
    def fake_run_compare(instances, settings, workers, environment):
        row = BenchRow("bridge", 4, 5, 4, 4, 4, 0.0, 0.0, catalogs_equal=False)
        return BenchReport(rows=[row], environment=environment)

    monkeypatch.setattr(cli, "run_compare", fake_run_compare)
    code, _, err = run("compare", "bridge")
    assert code == 2
    assert "bridge" in err


def test_gen_writes_files(run, tmp_path):
    out_dir = tmp_path / "out"
    code, _, _ = run("gen", "--nodes", "5", "--arcs", "6", "--count", "2", "--out-dir", str(out_dir))
    assert code == 0
    files = sorted(out_dir.glob("gen-*.net"))
    assert [f.name for f in files] == ["gen-1.net", "gen-2.net"]
    for f in files:
        net = load_network(f)
        assert (net.node_count, net.arc_count) == (5, 6)


def test_gen_rejects_infeasible_sizes(run):
    code, _, err = run("gen", "--nodes", "4", "--arcs", "9")
    assert code == 1
    assert "arc_count" in err


def test_report_rerenders_machine_file(run, tmp_path):
    report = BenchReport(
        rows=[BenchRow("net7", 7, 12, 16, 32, 25, 0.5, 0.25, True, None, 0)],
        environment={"seed": "42"},
    )
    path = tmp_path / "report.txt"
    path.write_text(emit_machine(report), encoding="utf-8")

    code, out, _ = run("--format", "machine", "report", str(path))
    assert code == 0
    assert out == emit_machine(report)

    code, out, _ = run("report", str(path))
    assert code == 0
    assert "net7" in out


def test_compare_accepts_figure_fixture_names(run):
    code, out, _ = run("--format", "machine", "compare", "fig3", "fig1")
    rows = [dict(tok.split("=", 1) for tok in line.split()) for line in out.splitlines()[1:]]
    assert code == 0
    assert [(row["name"], row["c"], row["catalogs_equal"]) for row in rows] == [
        ("fig3", "4", "true"), ("fig1", "16", "true"),
    ]


def test_compare_edge_node_reports_divergences_and_passes(run):
    code, out, _ = run("--format", "machine", "compare", "net7", "--check", "edge-node")
    row = dict(tok.split("=", 1) for tok in out.splitlines()[1].split())
    assert code == 0
    assert row["catalogs_equal"] == "true"
    assert int(row["divergences"]) > 0


def test_reliability_rejects_zero_workers(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["--config", str(tmp_path), "reliability", "bridge", "--workers", "0"])
    assert info.value.code == 1
    assert "positive integer" in capsys.readouterr().err
