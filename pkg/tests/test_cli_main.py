import json
import subprocess
import sys
from pathlib import Path
from typing import Any

import numpy as np
import pytest

ROOT = Path(__file__).resolve().parent.parent


def _run(*args: str) -> subprocess.CompletedProcess[str]:
    return subprocess.run(
        [sys.executable, "-m", "sympolar", *args],
        capture_output=True,
        text=True,
        cwd=ROOT,
    )


def _write(path: Path, X: np.ndarray, **extra: Any) -> Path:
    payload = {"n": X.shape[0] // 2, "rows": X.tolist(), **extra}
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def _write_channel(path: Path, K: np.ndarray, alpha: np.ndarray) -> Path:
    return _write(path, K, l=[0.0] * K.shape[0], alpha=alpha.tolist())


J2 = np.array([[0.0, 0.0, -1.0, 0.0], [0.0, 0.0, 0.0, -1.0], [1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0]])
D2 = np.diag([1.0, 1.0, -1.0, -1.0])
Z2 = -np.abs(J2)


@pytest.mark.parametrize("matrix, code", [(np.eye(4), 0), (J2, 0), (D2, 2)])
def test_decompose_exit_codes(tmp_path: Path, matrix: np.ndarray, code: int) -> None:
    path = _write(tmp_path / "x.json", matrix)
    result = _run("--no-timestamp", "decompose", str(path), "--variant", "ms")
    assert result.returncode == code, result.stderr

    report = json.loads(result.stdout)
    assert report["operation"] == "decompose"
    assert report["exit_code"] == code
    assert report["verdict"] == ("ok" if code == 0 else "fail")
    if code == 2:
        assert report["details"]["reason"] == "SpectrumSign"
        assert report["details"]["offending_eigenvalues"] == [-1.0, -1.0, -1.0, -1.0]
        assert "sympolar: decompose:" in result.stderr
    else:
        assert [f["name"] for f in report["factors"]] == ["M", "S"]
        assert report["classification"]["has_zero"] is False
        assert report["reconstruction_residual"] <= report["reconstruction_bound"]


def test_decompose_then_verify(tmp_path: Path) -> None:
    x_path = _write(tmp_path / "x.json", np.eye(4))
    factors_dir = tmp_path / "factors"
    result = _run("decompose", str(x_path), "--variant", "MS", "--factors-dir", str(factors_dir))
    assert result.returncode == 0, result.stderr
    assert sorted(p.name for p in factors_dir.iterdir()) == ["x.0-M.json", "x.1-S.json"]

    stored = [str(factors_dir / "x.0-M.json"), str(factors_dir / "x.1-S.json")]
    verified = _run("verify", str(x_path), "--variant", "ms", "--factors", *stored)
    assert verified.returncode == 0, verified.stderr
    assert json.loads(verified.stdout)["verdict"] == "ok"

    # M = 2I still passes the structure check but no longer reconstructs I
    _write(factors_dir / "x.0-M.json", 2.0 * np.eye(4))
    tampered = _run("verify", str(x_path), "--variant", "ms", "--factors", *stored)
    assert tampered.returncode == 4
    report = json.loads(tampered.stdout)
    assert report["verdict"] == "fail"
    assert all(f["holds"] for f in report["factors"])


def test_verify_hand_written_factors(tmp_path: Path) -> None:
    x_path = _write(tmp_path / "d.json", D2)
    h_path = _write(tmp_path / "h.json", J2)
    t_path = _write(tmp_path / "t.json", Z2)
    result = _run("verify", str(x_path), "--variant", "ht", "--factors", str(h_path), str(t_path))
    assert result.returncode == 0, result.stderr


def test_verify_with_wrong_factor_count(tmp_path: Path) -> None:
    x_path = _write(tmp_path / "x.json", np.eye(4))
    result = _run("verify", str(x_path), "--variant", "ms", "--factors", str(x_path))
    assert result.returncode == 1
    assert json.loads(result.stdout)["details"]["error"] == "DimensionMismatch"


def test_channel_commands(tmp_path: Path) -> None:
    valid = _write_channel(tmp_path / "valid.json", np.eye(2), np.eye(2))
    invalid = _write_channel(tmp_path / "invalid.json", 2.0 * np.eye(2), np.eye(2))
    reflection = _write_channel(tmp_path / "reflection.json", np.diag([1.0, -1.0]), np.eye(2))

    ok = _run("channel", "validate", str(valid))
    assert ok.returncode == 0, ok.stderr
    bad = _run("channel", "validate", str(invalid))
    assert bad.returncode == 4
    assert json.loads(bad.stdout)["details"]["min_eigenvalue"] == pytest.approx(-0.5)

    classified = json.loads(_run("channel", "classify", str(reflection)).stdout)
    assert classified["details"]["admissible_cases"] == ["DRForm", "DAForm"]
    assert classified["details"]["holevo_case"] == "D)"

    form = _run("channel", "normal-form", str(reflection))
    assert form.returncode == 0, form.stderr
    assert json.loads(form.stdout)["case"] == "DAForm"
    refused = _run("channel", "normal-form", str(reflection), "--case", "a")
    assert refused.returncode == 2
    assert json.loads(refused.stdout)["details"]["reason"] == "CaseInadmissible"

    composed = _run("channel", "compose", str(valid), str(invalid))
    assert composed.returncode == 0, composed.stderr
    product = json.loads(composed.stdout)["details"]["product"]
    assert product["K"] == [[2.0, 0.0], [0.0, 2.0]]
    assert product["alpha"] == [[2.0, 0.0], [0.0, 2.0]]


def test_generate_decompose_verify_pipeline(tmp_path: Path) -> None:
    out = tmp_path / "s.json"
    generated = _run("--out", str(out), "generate", "symplectic", "--n", "2", "--seed", "5")
    assert generated.returncode == 0, generated.stderr
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["kind"] == "symplectic"
    assert document["seed"] == 5

    factors_dir = tmp_path / "factors"
    result = _run("--tol", "1e-8", "decompose", str(out), "--variant", "sm", "--factors-dir", str(factors_dir))
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout)["seed"] == 5

    stored = [str(factors_dir / "s.0-S.json"), str(factors_dir / "s.1-M.json")]
    verified = _run("--tol", "1e-8", "verify", str(out), "--variant", "sm", "--factors", *stored)
    assert verified.returncode == 0, verified.stderr


def test_generate_channel_document_is_valid(tmp_path: Path) -> None:
    out = tmp_path / "c.json"
    assert _run("--out", str(out), "generate", "valid_channel", "--n", "2", "--seed", "9").returncode == 0
    result = _run("channel", "validate", str(out))
    assert result.returncode == 0, result.stderr


def test_no_timestamp_output_is_deterministic(tmp_path: Path) -> None:
    path = _write(tmp_path / "x.json", J2)
    first = _run("--no-timestamp", "decompose", str(path), "--variant", "as")
    second = _run("--no-timestamp", "decompose", str(path), "--variant", "as")
    assert first.stdout == second.stdout
    assert "timestamp" not in json.loads(first.stdout)

    stamped = _run("decompose", str(path), "--variant", "as")
    assert json.loads(stamped.stdout)["timestamp"].endswith("Z")


def test_batch_decompose_with_workers(tmp_path: Path) -> None:
    paths = [str(_write(tmp_path / f"x{i}.json", m)) for i, m in enumerate((np.eye(4), J2, D2))]
    result = _run("--jobs", "2", "--no-timestamp", "decompose", *paths, "--variant", "ms")
    assert result.returncode == 2
    reports = json.loads(result.stdout)
    assert [r["input"] for r in reports] == paths
    assert [r["exit_code"] for r in reports] == [0, 0, 2]


def test_config_file_sets_tolerance(tmp_path: Path) -> None:
    cfg = tmp_path / "settings.jsonc"
    cfg.write_text('{"tolerance": {"rel_tol": 1e-6}, // loose\n "timestamp": false}', encoding="utf-8")
    path = _write(tmp_path / "x.json", np.eye(2))
    result = _run("--config", str(cfg), "decompose", str(path), "--variant", "ms")
    assert result.returncode == 0, result.stderr
    report = json.loads(result.stdout)
    assert report["tolerance"]["rel_tol"] == 1e-6
    assert "timestamp" not in report


def test_list_definitions() -> None:
    result = _run("--list-definitions")
    assert result.returncode == 0, result.stderr
    categories = {d["category"] for d in json.loads(result.stdout)}
    assert {"decomposition", "channel_case", "generator", "settings"} <= categories


def test_cli_version_flag() -> None:
    result = _run("--version")
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip().startswith("sympolar ")


@pytest.mark.parametrize(
    "args",
    [
        ("decompose", "x.json", "--variant", "qr"),
        ("frobnicate",),
        (),
        ("decompose", "missing.json", "--variant", "ms"),
    ],
)
def test_usage_and_io_errors_exit_with_one(args: tuple[str, ...]) -> None:
    assert _run(*args).returncode == 1
