import json
import math

import numpy as np
import pytest

from inner_fourier.cli import main
from inner_fourier.quadrature import theta_grid


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCoeffsCommand:
    def test_square_wave_pattern(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--fn", "square", "--K", "64")
        assert code == 0
        doc = json.loads(out)
        beta = np.array(doc["beta"])
        k = np.arange(1, 65)
        want = 2.0 * (1.0 - (-1.0) ** k) / (math.pi * k)
        assert np.max(np.abs(beta - want)) < 1e-8
        assert np.max(np.abs(np.array(doc["alpha"]))) < 1e-8
        assert doc["c_re"][1] == pytest.approx(doc["alpha"][0])

    def test_point_mass(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--fn", "delta", "--theta1", "0", "--K", "8")
        assert code == 0
        doc = json.loads(out)
        assert np.allclose(doc["alpha"], 1.0 / math.pi, atol=0)

    def test_zero(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--fn", "zero", "--K", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha0"] == 0.0 and all(v == 0.0 for v in doc["alpha"] + doc["beta"])

    def test_unknown_catalog_id(self, capsys):
        code, _, err = run(capsys, "coeffs", "--fn", "nope", "--K", "4")
        assert code == 2
        assert "unknown catalog id" in err

    def test_missing_csv_file(self, capsys):
        code, _, err = run(capsys, "coeffs", "--csv", "/nonexistent/x.csv", "--K", "4")
        assert code == 3

    def test_csv_input(self, capsys, tmp_path):
        m = 64
        grid = theta_grid(m)
        path = tmp_path / "s.csv"
        path.write_text(
            "theta,value\n" + "\n".join(f"{t:.17g},{math.cos(2 * t):.17g}" for t in grid) + "\n"
        )
        code, out, _ = run(capsys, "coeffs", "--csv", str(path), "--K", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["alpha"][1] == pytest.approx(1.0, abs=1e-13)

    def test_output_file_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert run(capsys, "coeffs", "--fn", "triangle", "--K", "16", "--out", str(a))[0] == 0
        assert run(capsys, "coeffs", "--fn", "triangle", "--K", "16", "--out", str(b))[0] == 0
        assert a.read_bytes() == b.read_bytes()


class TestReconstructCommand:
    def _coeff_file(self, capsys, tmp_path, name, K, **flags):
        path = tmp_path / f"{name}.json"
        argv = ["coeffs", "--fn", name, "--K", str(K), "--out", str(path)]
        for key, val in flags.items():
            argv += [f"--{key}", str(val)]
        assert main(argv) == 0
        capsys.readouterr()
        return path

    @pytest.mark.filterwarnings("ignore::inner_fourier.errors.TruncationWarning")
    def test_square_schedule_recovery(self, capsys, tmp_path):
        path = self._coeff_file(capsys, tmp_path, "square", 2000)
        out = tmp_path / "sq.csv"
        code, _, _ = run(
            capsys,
            "reconstruct",
            "--coeffs",
            str(path),
            "--thetas=-pi:pi:8",
            "--schedule",
            "1..12",
            "--tol",
            "1e-3",
            "--out",
            str(out),
        )
        assert code == 0
        rows = out.read_text().splitlines()
        assert rows[0] == "theta,rho,value,conjugate,converged"
        final = [r.split(",") for r in rows[1:] if r.split(",")[4] != ""]
        assert len(final) == 8
        for cells in final:
            theta, value = float(cells[0]), float(cells[2])
            if min(abs(theta), abs(abs(theta) - math.pi)) > 0.3:
                assert abs(value - math.copysign(1.0, theta)) < 0.02
                assert cells[4] == "true"

    def test_point_mass_poisson_curve(self, capsys, tmp_path):
        from inner_fourier import poisson_kernel

        path = self._coeff_file(capsys, tmp_path, "delta", 2000, theta1=0.0)
        code, out, _ = run(
            capsys, "reconstruct", "--coeffs", str(path), "--thetas=-pi:pi:16", "--rho", "0.99"
        )
        assert code == 0
        truncation = 0.99**2001 / (math.pi * 0.01) + 1e-12
        for line in out.splitlines()[1:]:
            cells = line.split(",")
            assert float(cells[2]) == pytest.approx(
                poisson_kernel(float(cells[0]), 0.0, 0.99), abs=truncation
            )

    def test_zero_curve(self, capsys, tmp_path):
        path = self._coeff_file(capsys, tmp_path, "zero", 8)
        code, out, _ = run(
            capsys, "reconstruct", "--coeffs", str(path), "--thetas", "0:1:4", "--rho", "0.5"
        )
        assert code == 0
        for line in out.splitlines()[1:]:
            assert float(line.split(",")[2]) == 0.0

    def test_radius_domain_error(self, capsys, tmp_path):
        path = self._coeff_file(capsys, tmp_path, "zero", 8)
        code, _, err = run(
            capsys, "reconstruct", "--coeffs", str(path), "--thetas", "0:1:4", "--rho", "1.0"
        )
        assert code == 2


class TestVerifyCommand:
    @pytest.mark.parametrize(
        "argv",
        [
            ("verify", "--suite", "ortho", "--K", "16"),
            ("verify", "--suite", "kernels"),
            ("verify", "--suite", "hilbert", "--K", "8", "--rho0", "0.5"),
        ],
    )
    def test_suites_pass(self, capsys, argv):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_classify_family_flag(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "classify", "--family", "poly", "--p", "5")
        assert code == 0
        assert "bounded=true" in out

    def test_exit_one_on_violation(self, capsys, monkeypatch):
        import inner_fourier.basis as basis_mod

        real = basis_mod.residue_identity_check
        monkeypatch.setattr(
            basis_mod, "residue_identity_check", lambda p, rho, M=None: real(p, rho, M) + 1e-9
        )
        code, out, _ = run(capsys, "verify", "--suite", "ortho", "--K", "4")
        assert code == 1
        assert "FAIL" in out
