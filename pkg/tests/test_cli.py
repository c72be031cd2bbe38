import json
import subprocess
import sys
from pathlib import Path

import pytest

from h2star import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


class TestSubcommands:
    def test_bound_text(self, capsys):
        code, out, _ = run_cli(capsys, "bound", "--alpha", "0")
        assert code == 0
        assert out.splitlines()[0] == "sharp_bound = 1"

    def test_extremal_json(self, capsys):
        doc = run_json(capsys, "extremal", "--alpha", "0.25", "--order", "8")
        assert doc["coefficients"][2] == [0.75, 0.0]
        assert doc["h2_abs"] == 0.5625
        assert doc["hankel_det"] == [-0.5625, 0.0]

    def test_hankel_koebe(self, capsys):
        code, out, _ = run_cli(capsys, "hankel", "--coeffs", "1,2,3,4", "--q", "2", "--n", "2")
        assert code == 0
        assert out.splitlines()[0] == "det = -1+0j"

    def test_hankel_complex_entries(self, capsys):
        doc = run_json(
            capsys, "hankel", "--coeffs", "1,2+1j,3,4-1j", "--q", "2", "--n", "1"
        )
        # det = a1 a3 - a2^2 = 3 - (2+i)^2
        assert doc["det"] == [0.0, -4.0]

    def test_coeffs_from_atoms(self, capsys):
        doc = run_json(
            capsys,
            "coeffs",
            "--alpha", "0",
            "--atoms", "1:0",
            "--order", "5",
        )
        assert doc["coefficients"] == [[float(n), 0.0] for n in range(1, 6)]

    def test_functional_moment_form(self, capsys):
        doc = run_json(
            capsys,
            "functional",
            "--alpha", "0",
            "--p1", "2",
            "--p2", "2",
            "--p3", "2",
        )
        assert doc["abs"] == pytest.approx(1.0, abs=1e-15)
        assert doc["value"][0] == pytest.approx(-1.0, abs=1e-15)

    def test_param_includes_majorant(self, capsys):
        doc = run_json(
            capsys,
            "param",
            "--alpha", "0.5",
            "--p", "0",
            "--y", "1,0",
            "--zeta", "0,0",
        )
        assert doc["value"] == [-0.25, 0.0]
        assert doc["phi"] == 0.25

    def test_phi_value(self, capsys):
        doc = run_json(capsys, "phi", "--alpha", "0", "--p", "2", "--t", "0.3")
        assert doc["value"] == pytest.approx(1.0, abs=1e-15)

    def test_search_json_round_trips(self, capsys):
        doc = run_json(
            capsys,
            "search",
            "--alpha", "0.25",
            "--method", "phi",
            "--seed", "1",
        )
        assert doc["value"] == 0.5625
        assert doc["method"] == "phi"
        assert json.loads(json.dumps(doc, sort_keys=True)) == doc

    def test_check_subset(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--only", "prior-result-anchors")
        assert code == 0
        assert out.startswith("PASS prior-result-anchors")


class TestSweep:
    GOLDEN_ARGS = [
        "sweep",
        "--alpha-start", "0",
        "--alpha-end", "0.9",
        "--steps", "9",
        "--method", "phi",
        "--seed", "7",
    ]

    def test_golden_file_stability(self, tmp_path, capsys):
        paths = [tmp_path / f"sweep{i}.csv" for i in range(3)]
        for path, workers in zip(paths, ("1", "2", "4")):
            code, _, err = run_cli(
                capsys, *self.GOLDEN_ARGS, "--workers", workers, "--out", str(path)
            )
            assert code == 0, err
        blobs = [p.read_bytes() for p in paths]
        assert blobs[0] == blobs[1] == blobs[2]
        assert b"\r" not in blobs[0]
        header = blobs[0].split(b"\n", 1)[0]
        assert header == b"alpha,searched_max,sharp_bound,abs_gap,argmax"
        assert len(blobs[0].decode().strip().splitlines()) == 11

    def test_matches_subprocess_run(self, tmp_path, capsys):
        path = tmp_path / "inproc.csv"
        code, _, _ = run_cli(capsys, *self.GOLDEN_ARGS, "--out", str(path))
        assert code == 0
        proc = subprocess.run(
            [sys.executable, "-m", "h2star.cli", *self.GOLDEN_ARGS],
            capture_output=True,
            cwd=Path(__file__).resolve().parents[1],
        )
        assert proc.returncode == 0, proc.stderr
        assert proc.stdout == path.read_bytes()

    def test_stdout_emission(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "sweep",
            "--alpha-start", "0",
            "--alpha-end", "0.5",
            "--steps", "1",
            "--method", "phi",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "alpha,searched_max,sharp_bound,abs_gap,argmax"
        assert lines[1].startswith("0,1,1,0,")
        assert lines[2].startswith("0.5,0.25,0.25,0,")


class TestExitCodes:
    def test_unknown_flag_is_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--alpha", "0.5", "--bogus", "1")
        assert code == 2
        assert "error" in err

    def test_missing_required_flag(self, capsys):
        code, _, _ = run_cli(capsys, "bound")
        assert code == 2

    def test_malformed_complex_flag(self, capsys):
        code, _, _ = run_cli(
            capsys, "functional", "--alpha", "0", "--p1", "1,2,3", "--p2", "0", "--p3", "0"
        )
        assert code == 2

    def test_malformed_atoms(self, capsys):
        code, _, _ = run_cli(capsys, "coeffs", "--alpha", "0", "--atoms", "0.5;0")
        assert code == 2

    def test_bad_method_choice(self, capsys):
        code, _, _ = run_cli(capsys, "search", "--alpha", "0.1", "--method", "newton")
        assert code == 2

    def test_inapplicable_grid_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "search", "--alpha", "0.1", "--method", "phi", "--restarts", "2"
        )
        assert code == 2
        assert "does not apply" in err

    def test_domain_error_from_alpha(self, capsys):
        code, _, err = run_cli(capsys, "bound", "--alpha", "1.5")
        assert code == 1
        assert "alpha" in err

    def test_domain_error_from_lemma_point(self, capsys):
        code, _, _ = run_cli(
            capsys, "param", "--alpha", "0", "--p", "0", "--y", "2,0", "--zeta", "0"
        )
        assert code == 1

    def test_domain_error_from_short_coeffs(self, capsys):
        code, _, _ = run_cli(capsys, "hankel", "--coeffs", "1,2", "--q", "2", "--n", "2")
        assert code == 1

    def test_domain_error_from_non_unit_leading(self, capsys):
        code, _, _ = run_cli(capsys, "hankel", "--coeffs", "2,2,3,4", "--q", "2", "--n", "2")
        assert code == 1

    def test_unknown_check_name(self, capsys):
        code, _, _ = run_cli(capsys, "check", "--only", "nonsense")
        assert code == 2
