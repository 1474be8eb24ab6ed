import subprocess
import sys

import pytest


def grover_cli(args):
    proc = subprocess.run(
        [sys.executable, "-m", "grover_gme", *args],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def corpus(tmp_path_factory):
    """CSV/JSON files produced by the primary CLI, the only interface used."""
    root = tmp_path_factory.mktemp("cli-out")
    for n in (15, 20, 25, 30):
        for preset in ("product", "ghz"):
            grover_cli([
                "curve", "--n", str(n), "--preset", preset, "--mode", "asymptotic",
                "--out", str(root / f"{preset}{n}.csv"), "--format", "json",
            ])
    for n in (15, 20, 25, 30, 35):
        grover_cli([
            "curve", "--n", str(n), "--preset", "w", "--mode", "asymptotic",
            "--out", str(root / f"w{n}.csv"), "--format", "json",
        ])
    grover_cli([
        "curve", "--n", "12", "--preset", "w", "--mode", "both",
        "--out", str(root / "w12both.csv"), "--format", "json",
    ])
    grover_cli([
        "profile", "--n", "100", "--preset", "dicke:10",
        "--out", str(root / "profile.csv"),
    ])
    return root
