import json

import pytest

from potalg.cli import main, poly_text
from potalg.exprparse import lower_ncpoly, parse_expression
from potalg.ncalg import NCPoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


class TestClassify:
    def test_e8(self, capsys):
        code, rep = run_json(capsys, "classify", "--weights", "1,2,3")
        assert code == 0
        assert rep["results"]["verdict"] == "E8"
        assert rep["results"]["legs"] == [5, 2, 1]

    def test_rational(self, capsys):
        code, rep = run_json(capsys, "classify", "--weights", "1,1,3", "--max-degree", "5")
        assert code == 0
        assert rep["results"]["verdict"] == "Rational"


class TestSaito:
    def test_polynomial(self, capsys):
        code, rep = run_json(capsys, "saito", "--type", "E6")
        assert code == 0
        assert rep["results"]["quotient"] == [1, 3, 3, 1]

    def test_non_polynomial(self, capsys):
        code, rep = run_json(capsys, "saito", "--weights", "1,2,2", "--max-degree", "3")
        assert code == 0
        assert rep["results"]["is_polynomial"] is False


class TestHilbert:
    def test_e6_seeded(self, capsys):
        code, rep = run_json(
            capsys, "hilbert", "--type", "E6", "--max-degree", "4", "--seed", "7"
        )
        assert code == 0
        assert rep["results"]["dims"] == [1, 3, 6, 10, 15]
        assert rep["checks"][0]["pass"] is True
        assert rep["seed"] == 7

    def test_math_failure_exit_code(self, capsys):
        # xyz alone presents a monomial algebra that is not flat
        code, rep = run_json(
            capsys, "hilbert", "--type", "E6", "--potential", "x*y*z", "--max-degree", "3"
        )
        assert code == 1
        assert rep["checks"][0]["pass"] is False


class TestCenter:
    def test_filtered_solution_dim(self, capsys):
        code, rep = run_json(capsys, "center", "--type", "E6", "--filtered", "--seed", "7")
        assert code == 0
        assert rep["results"]["solution_dim"] == 2
        psi_text = rep["results"]["normalized_psi"]
        psi = lower_ncpoly(parse_expression(psi_text))
        assert not psi.is_zero()


class TestOtherCommands:
    def test_jacobi(self, capsys):
        code, rep = run_json(capsys, "jacobi", "--type", "E8")
        assert code == 0
        assert rep["results"]["graded_dims"] == [1, 1, 2, 2, 2, 1, 1]
        assert rep["results"]["mu"] == 10

    def test_matfact(self, capsys):
        code, rep = run_json(capsys, "matfact", "--point", "1,2,3")
        assert code == 0
        assert rep["results"]["tau"] == "6"
        assert all(c["pass"] for c in rep["checks"])

    def test_cohomology(self, capsys):
        code, rep = run_json(capsys, "cohomology", "--type", "E7")
        assert code == 0
        assert rep["results"]["hh2_nonpositive_dim"] == 9

    def test_poisson_check(self, capsys):
        code, rep = run_json(capsys, "poisson-check", "--type", "E6", "--seed", "3")
        assert code == 0
        assert all(c["pass"] for c in rep["checks"])


class TestReportContract:
    def test_json_deterministic_modulo_timing(self, capsys):
        _, rep1 = run_json(capsys, "center", "--type", "E7", "--seed", "11")
        _, rep2 = run_json(capsys, "center", "--type", "E7", "--seed", "11")
        rep1.pop("timing_ms")
        rep2.pop("timing_ms")
        assert rep1 == rep2

    def test_schema_keys(self, capsys):
        _, rep = run_json(capsys, "saito", "--type", "E6")
        assert set(rep) == {
            "command", "inputs", "results", "checks", "seed", "version", "timing_ms",
        }

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code = main(["classify", "--weights", "1,1,1", "--format", "json", "--out", str(path)])
        assert code == 0
        rep = json.loads(path.read_text())
        assert rep["results"]["verdict"] == "E6"

    def test_usage_errors_exit_2(self, capsys):
        assert main(["classify"]) == 2  # weights missing
        assert main(["classify", "--weights", "bogus"]) == 2
        with pytest.raises(SystemExit) as exc:
            main(["not-a-command"])
        assert exc.value.code == 2

    def test_poly_text_round_trip(self, capsys):
        f = NCPoly({(0, 1, 2): 3, (2, 2): -1, (): 7})
        assert lower_ncpoly(parse_expression(poly_text(f))) == f
