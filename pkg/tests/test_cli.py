import json
import math
import re
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from polyzero.cli import main
from polyzero.poly import power_minus_one, write_polynomial


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "polyzero.cli", *args],
        capture_output=True,
        text=True,
        timeout=300,
    )
    return proc


@pytest.fixture(scope="module")
def unit_roots_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("poly") / "unit_roots_8.json"
    path.write_text(write_polynomial(power_minus_one(8)))
    return str(path)


class TestAnalyze:
    def test_lehmer_report(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("analyze", "--family", "lehmer", "--out", str(out), "--centers", "64")
        assert proc.returncode == 0
        payload = json.loads(out.read_text())
        assert abs(payload["profile"]["mahler"] - 1.1762808) < 1e-6
        assert payload["schema"] == "polyzero-report/1"

    def test_unit_roots_discrepancy(self, unit_roots_file, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("analyze", "--poly", unit_roots_file, "--out", str(out), "--centers", "32")
        assert proc.returncode == 0
        payload = json.loads(out.read_text())
        assert payload["observed"]["angular_discrepancy"] == pytest.approx(0.125, abs=1e-12)

    def test_deterministic_reports(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ("analyze", "--family", "littlewood", "--degree", "16", "--seed", "1", "--centers", "32")
        assert run_cli(*args, "--out", str(a)).returncode == 0
        assert run_cli(*args, "--out", str(b)).returncode == 0
        ja = json.loads(a.read_text())
        jb = json.loads(b.read_text())
        ja.pop("timing")
        jb.pop("timing")
        assert json.dumps(ja, sort_keys=True) == json.dumps(jb, sort_keys=True)

    def test_missing_file_exit_1(self):
        assert run_cli("analyze", "--poly", "/does/not/exist.json").returncode == 1

    def test_malformed_file_exit_1(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        assert run_cli("analyze", "--poly", str(bad)).returncode == 1

    def test_usage_error_exit_64(self):
        assert run_cli("analyze", "--no-such-flag").returncode == 64
        assert run_cli("analyze").returncode == 64  # needs a source


class TestGear:
    def test_reference_gear_78_teeth(self, tmp_path):
        svg = tmp_path / "gear.svg"
        js = tmp_path / "gear.json"
        proc = run_cli("gear", "--gamma", "0.04", "--delta", "0", "--svg", str(svg), "--json", str(js))
        assert proc.returncode == 0
        payload = json.loads(js.read_text())
        assert payload["teeth"] == 78
        root = ET.fromstring(svg.read_text())  # well-formed XML
        assert root.tag.endswith("svg")

    def test_reference_gear_48_teeth(self, tmp_path):
        js = tmp_path / "gear.json"
        gamma = repr(math.pi / 60)
        proc = run_cli("gear", "--gamma", gamma, "--delta", "0.2577", "--json", str(js))
        assert proc.returncode == 0
        payload = json.loads(js.read_text())
        assert payload["teeth"] == 48
        assert abs(payload["tooth_width_actual"] - math.pi / 120) < 1e-4

    def test_membership_counts(self, tmp_path):
        path = tmp_path / "u64.json"
        path.write_text(write_polynomial(power_minus_one(64)))
        js = tmp_path / "gear.json"
        proc = run_cli("gear", "--gamma", "0.5", "--delta", "0", "--poly", str(path), "--json", str(js))
        assert proc.returncode == 0
        payload = json.loads(js.read_text())
        # Roots of unity: angular distance to the nearest of the 6 centers
        # must exceed half the bitten arc.
        half = payload["tooth_arc"] / 2.0
        spacing = 2 * math.pi / payload["teeth"]
        expect = sum(
            1
            for k in range(64)
            if min(abs((2 * math.pi * k / 64 - spacing * j + math.pi) % (2 * math.pi) - math.pi)
                   for j in range(payload["teeth"])) > half
        )
        assert payload["roots_inside_gear"] == expect

    def test_wide_gamma_exit_1(self):
        assert run_cli("gear", "--gamma", "0.8", "--delta", "0").returncode == 1

    def test_svg_deterministic_and_path_grammar(self, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        run_cli("gear", "--gamma", "0.3", "--delta", "0.1", "--svg", str(a))
        run_cli("gear", "--gamma", "0.3", "--delta", "0.1", "--svg", str(b))
        assert a.read_bytes() == b.read_bytes()
        grammar = re.compile(r"^M( -?\d+(\.\d+)? -?\d+(\.\d+)?)( L -?\d+(\.\d+)? -?\d+(\.\d+)?)+ Z$")
        for el in ET.fromstring(a.read_text()).iter():
            if el.tag.endswith("path"):
                assert grammar.match(el.attrib["d"])


class TestThresholds:
    def test_default_table(self):
        proc = run_cli("thresholds")
        assert proc.returncode == 0
        lines = proc.stdout.strip().splitlines()
        assert lines[0].split() == ["coefficient", "bound", "min_degree"]
        values = [line.split()[-1] for line in lines[1:]]
        assert values == ["6170", "2307257", "35583"]

    def test_custom_row(self):
        proc = run_cli("thresholds", "--coefficient", "1", "--bound", "1")
        assert proc.stdout.strip().splitlines()[-1].split()[-1] == "2"


class TestSweepCommand:
    def test_small_sweep_outputs(self, tmp_path):
        js, csv_path = tmp_path / "s.json", tmp_path / "s.csv"
        proc = run_cli(
            "sweep", "--family", "littlewood", "--degrees", "12", "--trials", "2",
            "--seed", "3", "--centers", "16", "--out-json", str(js), "--out-csv", str(csv_path),
        )
        assert proc.returncode == 0
        summary = json.loads(proc.stdout)
        assert summary["instances"] == 2
        assert summary["hard_violation_count"] == 0
        rows = csv_path.read_text().splitlines()
        assert rows[0].startswith("family,degree,seed,bound_id")
        payload = json.loads(js.read_text())
        assert payload["schema"] == "polyzero-sweep/1"


def test_main_callable_directly(capsys):
    code = main(["thresholds", "--coefficient", "2", "--bound", "1"])
    assert code == 0
    out = capsys.readouterr().out
    assert "min_degree" in out
