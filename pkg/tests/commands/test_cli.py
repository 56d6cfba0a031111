import json
import pytest
from main import run_cli
from utils.core.models import CuttingPlan, Lay
from utils.core.files import load_plan, save_instance, save_plan
from tests.conftest import make_instance, slow


# --- generate ---


def test_generate_writes_named_cases(tmp_path, capsys):
    out = tmp_path / "d"
    assert run_cli(["generate", "--group", "G1", "--cases", "2", "--seed", "1000000", "--out", str(out)]) == 0
    assert sorted(p.name for p in out.iterdir()) == ["G1_case01.json", "G1_case02.json"]
    assert len(capsys.readouterr().out.splitlines()) == 2


def test_generate_rejects_unknown_group(tmp_path):
    assert run_cli(["generate", "--group", "G11", "--out", str(tmp_path)]) == 1


def test_generate_rejects_zero_cases(tmp_path):
    assert run_cli(["generate", "--cases", "0", "--out", str(tmp_path)]) == 1


# --- solve and validate ---


def test_solve_then_validate(tmp_path, instance_file, capsys):
    plan_path = tmp_path / "plan.json"
    assert run_cli(["solve", str(instance_file), "--out", str(plan_path)]) == 0
    line = capsys.readouterr().out.strip()
    assert line.startswith("k=1 mean_ur=0.35 tc=")

    assert load_plan(plan_path).k == 1
    assert run_cli(["validate", str(instance_file), str(plan_path)]) == 0
    assert capsys.readouterr().out.strip() == "valid"


def test_solve_without_out_writes_nothing(tmp_path, instance_file):
    assert run_cli(["solve", str(instance_file), "--time-limit", "0"]) == 0
    assert sorted(p.name for p in tmp_path.iterdir()) == [instance_file.name]


def test_solve_rejects_negative_time_limit(instance_file):
    assert run_cli(["solve", str(instance_file), "--time-limit", "-1"]) == 1


def test_solve_invalid_instance_exits_two(tmp_path):
    path = save_instance(make_instance([[-1]], [10]), tmp_path / "bad.json")
    assert run_cli(["solve", str(path)]) == 2


def test_solve_missing_file_exits_one(tmp_path):
    assert run_cli(["solve", str(tmp_path / "missing.json")]) == 1


def test_validate_reports_overproduction(tmp_path, instance_file, single_sku_instance, capsys):
    plan = CuttingPlan.from_lays(single_sku_instance, [Lay(heights=(5,), counts=(1,))])
    plan_path = save_plan(plan, tmp_path / "over.json")
    assert run_cli(["validate", str(instance_file), str(plan_path)]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "exactness[0,0]" in captured.err
    assert "observed=5 required=4" in captured.err


def test_validate_malformed_plan_exits_two(tmp_path, instance_file):
    path = tmp_path / "plan.json"
    path.write_text(json.dumps({"instance": "x", "lays": "none"}))
    assert run_cli(["validate", str(instance_file), str(path)]) == 2


# --- render ---


def test_render_writes_svg(tmp_path, instance_file, plan_file, capsys):
    out = tmp_path / "plan.svg"
    assert run_cli(["render", str(plan_file), str(instance_file), "--out", str(out), "--scale", "0.5"]) == 0
    assert out.read_text().startswith("<?xml")
    assert capsys.readouterr().out.strip() == str(out)


def test_render_rejects_zero_scale(tmp_path, instance_file, plan_file):
    assert run_cli(["render", str(plan_file), str(instance_file), "--out", str(tmp_path / "p.svg"), "--scale", "0"]) == 1


# --- bench ---


@pytest.fixture
def tiny_suite(monkeypatch):
    """Two small hand-made cases instead of full-scale generated ones."""
    from utils.bench import harness

    def generate_suite(groups, cases, seed, per_group_streams=False):
        return [
            make_instance([[4 + n, 2], [3, 1]], [100, 80], name=f"{spec.name.value}_case{n:02d}")
            for spec in groups
            for n in range(1, cases + 1)
        ]

    monkeypatch.setattr(harness, "generate_suite", generate_suite)


def test_bench_writes_reports(tmp_path, tiny_suite, capsys):
    out = tmp_path / "bench"
    args = ["bench", "--groups", "G1,G2", "--cases", "2", "--out", str(out), "--no-timings"]
    assert run_cli(args) == 0

    case_lines = (out / "results.csv").read_text().splitlines()
    assert len(case_lines) == 5
    assert case_lines[1].split(",")[4] == ""
    assert len((out / "results_summary.csv").read_text().splitlines()) == 3

    printed = capsys.readouterr().out.splitlines()
    assert [line.split()[0] for line in printed] == ["G1", "G2"]

    first = (out / "results.csv").read_bytes()
    assert run_cli(args) == 0
    assert (out / "results.csv").read_bytes() == first


def test_bench_requires_out():
    assert run_cli(["bench", "--groups", "G1"]) == 1


@slow
def test_bench_is_byte_identical_across_job_counts(tmp_path):
    base = ["bench", "--groups", "G1", "--cases", "5", "--seed", "1000000", "--time-limit", "0", "--no-timings"]
    assert run_cli(base + ["--jobs", "1", "--out", str(tmp_path / "serial")]) == 0
    assert run_cli(base + ["--jobs", "4", "--out", str(tmp_path / "parallel")]) == 0
    for name in ("results.csv", "results_summary.csv"):
        assert (tmp_path / "serial" / name).read_bytes() == (tmp_path / "parallel" / name).read_bytes()
