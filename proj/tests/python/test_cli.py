import csv
import io
import json
import os
import subprocess
from fractions import Fraction

import pytest

CLI = os.environ.get("MSTLAB_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="MSTLAB_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=600)


def test_exact_rows_increase():
    out = run("exact", "--n-max", "8")
    assert out.returncode == 0, out.stderr
    rows = json.loads(out.stdout)
    assert [r["n"] for r in rows] == list(range(2, 9))
    totals = [Fraction(r["total"]["fraction"]) for r in rows]
    assert all(a < b for a, b in zip(totals, totals[1:]))


def test_exact_csv():
    out = run("exact", "--n-min", "3", "--n-max", "4", "--format", "csv")
    assert out.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.stdout)))
    assert rows[1]["total"] == "31/35"


def test_constants_without_tail():
    out = run("constants", "--no-tail")
    assert out.returncode == 0, out.stderr
    report = json.loads(out.stdout)
    assert report["c2c_partial"]["value"] == pytest.approx(-0.7331, abs=5e-4)


def test_mc_and_census(tmp_path):
    target = tmp_path / "mc.json"
    out = run("mc", "--n", "4", "6", "--reps", "2000", "--seed", "9", "-o", str(target))
    assert out.returncode == 0, out.stderr
    rows = json.loads(target.read_text())
    assert [r["n"] for r in rows] == [4, 6]
    out = run("census", "--n", "100", "--lambda", "-1:1:1", "--reps", "20", "--format", "csv")
    assert out.returncode == 0, out.stderr
    assert len(out.stdout.strip().splitlines()) == 4


def test_exit_codes():
    assert run("verify", "--criteria", "3").returncode == 0
    assert run("verify", "--criteria", "5").returncode == 3
    assert run("mc", "--n", "5", "--model", "gamma").returncode == 1
    assert run().returncode == 1
    bad = run("exact", "--n-max", "40")
    assert bad.returncode != 0
    assert bad.stderr
