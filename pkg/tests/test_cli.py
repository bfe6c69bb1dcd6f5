import json
import os
import subprocess
import sys


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "rsfq", *args],
        capture_output=True, text=True, env=env,
    )


def test_distribution_json(tmp_path):
    result = run_cli("distribution", "-n", "3")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["counts"] == {"0": 4, "1": 2, "2": 2}
    assert data["total"] == 8


def test_distribution_csv_round_trip():
    result = run_cli("distribution", "-n", "4", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "gamma,count,expected,deviation"
    counts = {row.split(",")[0]: int(row.split(",")[1]) for row in lines[1:]}
    reference = json.loads(run_cli("distribution", "-n", "4").stdout)
    assert counts == reference["counts"]


def test_verify_star_passes():
    result = run_cli("verify", "star")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["passed"]
    assert all(cell["check"] == "star" for cell in data["cells"])


def test_verify_selector_csv():
    result = run_cli("verify", "tau", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "check,q,n,pass"
    assert all(line.endswith("True") for line in lines[1:])


def test_verify_rank_qa_reports_known_failures():
    """The boundary counterexamples surface as cell failures (exit 1)."""
    result = run_cli("verify", "rank-qa")
    assert result.returncode == 1
    data = json.loads(result.stdout)
    assert not data["passed"]
    failing = {cell["n"] for cell in data["cells"] if not cell["pass"]}
    assert failing == {5, 6, 7, 8}
    cell6 = next(c for c in data["cells"] if c["n"] == 6)
    bad = {f["a"] for f in cell6["detail"]["rank_failures"]}
    assert bad == {"2,1,1", "2,2,1"}


def test_even_characteristic_rejected():
    result = run_cli("--p", "2", "verify", "star")
    assert result.returncode == 2
    assert "odd prime" in result.stderr


def test_cap_exceeded_is_usage_error():
    result = run_cli("--cap", "10", "distribution", "-n", "5")
    assert result.returncode == 2
    assert "cap" in result.stderr


def test_bad_selector_rejected():
    result = run_cli("verify", "nonsense")
    assert result.returncode == 2


def test_sigma_subcommand():
    result = run_cli("sigma", "sigma1", "-n", "5", "-u", "1", "-v", "2")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["value"] > 0
    assert data["bound"] == 3.0 ** ((5 + 1 + 2 + 2) / 2)


def test_sigma_trivial_character_rejected():
    result = run_cli("sigma", "sigma1", "-n", "5", "-u", "1", "-v", "2",
                     "--beta", "0")
    assert result.returncode == 2


def test_nf_count_single_poly():
    result = run_cli("nf-count", "-n", "1", "--poly", "0,1")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["observed"] == 2
    assert data["detail"]["solutions"] == ["0,1", "0,2"]


def test_nf_count_scan():
    result = run_cli("nf-count", "-n", "2")
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["observed"] == 4 and data["pass"]


def test_trend_csv():
    result = run_cli("trend", "--trend-max", "4", "--format", "csv")
    assert result.returncode == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "n,total,expected,max_abs_dev,relative_dev"
    assert len(lines) == 4


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("format=csv\np=3\n")
    result = run_cli("--config", str(cfg), "distribution", "-n", "3")
    assert result.returncode == 0
    assert result.stdout.startswith("gamma,")      # csv from config file
    result = run_cli("--config", str(cfg), "--format", "json",
                     "distribution", "-n", "3")
    assert result.stdout.lstrip().startswith("{")  # flag wins


def test_env_jobs_override():
    result = run_cli("distribution", "-n", "4", env_extra={"RSFQ_JOBS": "2"})
    assert result.returncode == 0
    data = json.loads(result.stdout)
    assert data["total"] == 18


def test_global_flags_both_positions():
    before = run_cli("--p", "5", "distribution", "-n", "2")
    after = run_cli("distribution", "-n", "2", "--p", "5")
    assert before.returncode == after.returncode == 0
    assert before.stdout == after.stdout
    assert json.loads(before.stdout)["q"] == 5
