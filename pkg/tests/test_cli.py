import json
import subprocess
import sys

from hopflike.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_simplicial(capsys):
    code, out, _ = run_cli(capsys, "verify", "simplicial", "--max-n", "5")
    assert code == 0
    assert "suite: simplicial" in out
    assert "failures: 0" in out
    assert out.strip().endswith("PASS")


def test_verify_simplicial_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "simplicial", "--max-n", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "simplicial"
    assert payload["failures"] == []
    assert payload["millis"] == 0


def test_verify_relations(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "relations", "--family", "dd",
        "--max-sum", "5", "--max-len", "3",
    )
    assert code == 0
    assert "relations-dd" in out


def test_verify_square_per_k_fails_with_exit_one(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "square", "--alpha", "(1,1)", "--beta", "(1,1)",
        "--reading", "per-k",
    )
    assert code == 1
    assert "K=[[1,0],[0,1]]" in out
    code, out, _ = run_cli(
        capsys, "verify", "square", "--alpha", "(1,1)", "--beta", "(1,1)",
    )
    assert code == 0


def test_verify_bidegree12(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "bidegree12", "--max-total", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert [p["suite"] for p in payload] == [
        "bidegree12-defect", "bidegree12-six-cases"
    ]


def test_matrices_listing(capsys):
    code, out, _ = run_cli(capsys, "matrices", "--alpha", "(1,1)", "--beta", "(1,1)")
    assert code == 0
    assert out.splitlines() == ["[[1,0],[0,1]]", "[[0,1],[1,0]]", "total: 2"]


def test_compositions_listing(capsys):
    code, out, _ = run_cli(capsys, "compositions", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["(3)", "(1,2)", "(2,1)", "(1,1,1)", "total: 4"]


def test_normalize(capsys):
    code, out, _ = run_cli(capsys, "normalize", "(7) ; s[1,1,3]")
    assert code == 0
    assert "source: (7)" in out
    assert "target: (3,4)" in out
    assert "map: A(3,4) -> A(7)" in out


def test_normalize_parse_error_exit_two(capsys):
    code, _, err = run_cli(capsys, "normalize", "(3) ; d[2,1]")
    assert code == 2
    assert "step 1" in err
    code, _, err = run_cli(capsys, "normalize", "(2,")
    assert code == 2
    assert "column 4" in err


def test_explore_mixed_json(capsys):
    code, out, _ = run_cli(
        capsys, "explore", "mixed", "--a", "1", "--beta", "(1,1)",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["suite"] == "explore-mixed"
    assert "upper" in payload and "lower" in payload


def test_cache_commands(tmp_path, capsys):
    path = str(tmp_path / "cache.json")
    code, out, _ = run_cli(capsys, "--cache", path, "verify", "hopf", "--max-degree", "3")
    assert code == 0
    code, out, _ = run_cli(capsys, "--cache", path, "cache", "stats")
    assert code == 0
    assert path in out
    code, out, _ = run_cli(capsys, "--cache", path, "cache", "clear")
    assert code == 0
    import os
    assert not os.path.exists(path)


def test_every_subcommand_has_help():
    for argv in [
        ["--help"],
        ["verify", "--help"],
        ["verify", "simplicial", "--help"],
        ["verify", "relations", "--help"],
        ["verify", "hopf", "--help"],
        ["verify", "square", "--help"],
        ["verify", "bidegree12", "--help"],
        ["explore", "--help"],
        ["explore", "mixed", "--help"],
        ["matrices", "--help"],
        ["compositions", "--help"],
        ["normalize", "--help"],
        ["cache", "--help"],
    ]:
        proc = subprocess.run(
            [sys.executable, "-m", "hopflike", *argv],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0, argv
        assert "usage" in proc.stdout.lower()


def test_json_output_byte_identical_across_processes():
    argv = [
        sys.executable, "-m", "hopflike", "verify", "relations",
        "--family", "ss", "--max-sum", "5", "--max-len", "3",
        "--format", "json",
    ]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout


def test_env_var_sets_cache_path(tmp_path, capsys, monkeypatch):
    path = str(tmp_path / "envcache.json")
    monkeypatch.setenv("HOPFLIKE_CACHE", path)
    code, out, _ = run_cli(capsys, "cache", "stats")
    assert code == 0
    assert path in out
