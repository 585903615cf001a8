"""Fixtures that produce real CLI output for the figure scripts to consume.

The figure package talks to the core only through its published interfaces:
the ``rossbybec`` console entry point and the CSV/JSON files it writes.
"""

import subprocess
import sys

import pytest


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "rossbybec.cli", *args],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def dispersion_csv(tmp_path_factory):
    out = tmp_path_factory.mktemp("dispersion")
    run_cli("dispersion", "--v-r", "0.1", "--xi", "0,0.7,1.3",
            "--k-max", "5", "--n-k", "128", "-o", str(out))
    return out / "dispersion.csv"


@pytest.fixture(scope="session")
def stationary_dir(tmp_path_factory):
    base = tmp_path_factory.mktemp("stationary")
    run_cli("stationary", "--omega-ratio", "2.4", "--beta", "1.6",
            "--mu", "0.2", "-o", str(base / "disk"))
    run_cli("stationary", "--omega-ratio", "2.4", "--beta", "1.6",
            "--mu", "-0.2", "-o", str(base / "annulus"))
    return base
