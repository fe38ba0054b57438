import json
import math

import numpy as np
import pytest

from ecctensor.cli import main
from ecctensor.welch import EXAMPLE_7X2


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_example_csv(path):
    lines = [",".join(f"{v:.2f}" for v in row) for row in EXAMPLE_7X2]
    path.write_text("\n".join(lines) + "\n")


class TestBounds:
    def test_real_paper_row(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--m", "7", "--n", "2", "--k-max", "3", "--field", "real")
        assert code == 0
        rows = json.loads(out)
        row = rows[2]
        assert row["k"] == 3
        assert row["scaled_improved_bound"] == pytest.approx(15.3125, abs=1e-6)

    def test_complex_paper_row(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--m", "7", "--n", "2", "--k-max", "3", "--field", "complex")
        assert code == 0
        rows = json.loads(out)
        assert rows[2]["scaled_classical_bound"] == pytest.approx(12.25, abs=1e-6)

    def test_vacuous_cmax_clamped(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--m", "2", "--n", "8", "--k-max", "1", "--field", "complex")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["cmax_bound"] == 0.0

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["bounds", "--m", "7"])
        assert exc.value.code == 2

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--m", "3", "--n", "2", "--k-max", "2", "--field", "real", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("m,n,k,")
        assert len(lines) == 3


class TestEval:
    def test_paper_matrix(self, capsys, tmp_path):
        path = tmp_path / "example.csv"
        write_example_csv(path)
        code, out, _ = run_cli(capsys, "eval", "--input", str(path), "--k-max", "3", "--renormalize")
        assert code == 0
        rows = json.loads(out)
        assert rows[2]["scaled_potential"] == pytest.approx(15.3128, abs=5e-3)

    def test_identity_tight_frame(self, capsys, tmp_path):
        path = tmp_path / "eye.csv"
        path.write_text("1,0\n0,1\n")
        code, out, _ = run_cli(capsys, "eval", "--input", str(path), "--k-max", "1")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["potential_gap"] == pytest.approx(0.0, abs=1e-12)

    def test_malformed_csv_exit_3(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("1,0\n0,oops\n")
        code, _, err = run_cli(capsys, "eval", "--input", str(path), "--k-max", "1")
        assert code == 3
        assert "line 2" in err

    def test_non_unit_without_renormalize_exit_4(self, capsys, tmp_path):
        path = tmp_path / "stretch.csv"
        path.write_text("2,0\n0,1\n")
        code, _, err = run_cli(capsys, "eval", "--input", str(path), "--k-max", "1")
        assert code == 4
        assert "renormalize" in err

    def test_json_input_with_complex_field(self, capsys, tmp_path):
        doc = {
            "field": "complex",
            "vectors": [[[1.0, 0.0], [0.0, 0.0]], [[0.0, 0.0], [0.0, 1.0]]],
        }
        path = tmp_path / "cx.json"
        path.write_text(json.dumps(doc))
        code, out, _ = run_cli(capsys, "eval", "--input", str(path), "--k-max", "2")
        assert code == 0
        rows = json.loads(out)
        assert rows[0]["field"] == "complex"
        assert rows[0]["improved_bound"] is None

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("1,0\n0,1\n"))
        code, out, _ = run_cli(capsys, "eval", "--input", "-", "--k-max", "1")
        assert code == 0


class TestOptimize:
    def test_seed_reproducibility_byte_identical(self, capsys):
        args = ["optimize", "--m", "3", "--n", "2", "--k", "1", "--restarts", "4", "--seed", "1"]
        code_a, out_a, _ = run_cli(capsys, *args)
        code_b, out_b, _ = run_cli(capsys, *args)
        assert code_a == code_b == 0
        assert out_a == out_b

    def test_mercedes_frame(self, capsys):
        code, out, _ = run_cli(
            capsys, "optimize", "--m", "3", "--n", "2", "--k", "1", "--restarts", "8", "--seed", "2"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["scaled_potential"] == pytest.approx(4.5, abs=1e-4)


class TestEnergy:
    def test_antipodal_geodesic_exact(self, capsys):
        code, out, _ = run_cli(capsys, "energy", "--kind", "geodesic", "--delta", "1", "--measure", "antipodal")
        assert code == 0
        doc = json.loads(out)
        assert doc["value"] == pytest.approx(math.pi / 2, rel=1e-15)
        assert doc["method"] == "closed-form"

    def test_antipodal_euclidean_delta_two(self, capsys):
        code, out, _ = run_cli(capsys, "energy", "--kind", "euclidean", "--delta", "2", "--measure", "antipodal")
        doc = json.loads(out)
        assert doc["value"] == pytest.approx(2.0)

    def test_uniform_circle_chord(self, capsys):
        code, out, _ = run_cli(
            capsys, "energy", "--kind", "euclidean", "--delta", "1", "--n", "2",
            "--measure", "uniform", "--samples", "1000000", "--seed", "3",
        )
        doc = json.loads(out)
        assert abs(doc["value"] - 4 / math.pi) <= 3 * doc["error_bound"]

    def test_measure_from_file(self, capsys, tmp_path):
        path = tmp_path / "pair.csv"
        path.write_text("1,0\n0,1\n")
        code, out, _ = run_cli(capsys, "energy", "--kind", "euclidean", "--delta", "2", "--measure", str(path))
        doc = json.loads(out)
        assert doc["value"] == pytest.approx(1.0)  # 2 - ||mean||^2 with mean (1/2,1/2)


class TestSeries:
    def test_arccos_csv(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--function", "arccos", "--order", "5")
        assert code == 0
        lines = out.strip().splitlines()
        values = [float(line.split(",")[1]) for line in lines[1:]]
        np.testing.assert_allclose(
            values, [math.pi / 2, -1, 0, -1 / 6, 0, -0.075], atol=1e-12
        )

    def test_arccos_pow_delta_one_identical(self, capsys):
        _, out_a, _ = run_cli(capsys, "series", "--function", "arccos", "--order", "8")
        _, out_b, _ = run_cli(capsys, "series", "--function", "arccos-pow", "--delta", "1", "--order", "8")
        assert out_a == out_b

    def test_euclid_pow(self, capsys):
        code, out, _ = run_cli(capsys, "series", "--function", "euclid-pow", "--delta", "1", "--order", "3")
        values = [float(line.split(",")[1]) for line in out.strip().splitlines()[1:]]
        np.testing.assert_allclose(
            values,
            [math.sqrt(2), -0.70710678, -0.17677670, -0.08838835],
            atol=1e-8,
        )

    def test_invalid_delta_exit_4(self, capsys):
        code, _, _ = run_cli(capsys, "series", "--function", "arccos-pow", "--delta", "-1", "--order", "5")
        assert code == 4


class TestPhase:
    def test_small_sweep(self, capsys):
        code, out, _ = run_cli(
            capsys, "phase", "--kind", "euclidean", "--n", "3",
            "--deltas", "1.0,2.0,3.0", "--samples", "200000", "--seed", "1",
        )
        assert code == 0
        rows = json.loads(out)
        assert [r["winner"] for r in rows] == ["uniform", "tie", "antipodal"]


class TestThreads:
    def test_env_fallback(self, capsys, monkeypatch):
        monkeypatch.setenv("ECC_THREADS", "2")
        code, out, _ = run_cli(
            capsys, "optimize", "--m", "3", "--n", "2", "--k", "1", "--restarts", "2", "--seed", "4"
        )
        assert code == 0

    def test_flag(self, capsys):
        code, out, _ = run_cli(
            capsys, "--threads", "2", "optimize", "--m", "3", "--n", "2", "--k", "1",
            "--restarts", "2", "--seed", "4",
        )
        assert code == 0
