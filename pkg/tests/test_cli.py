import json
import subprocess
import sys

import pytest

from siegel_hecke.cli import main
from siegel_hecke.poly_core import LaurentPolynomial
from siegel_hecke.render import latex, latex_name


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_hecke_poly_latex(capsys):
    status, out, _ = run(capsys, "hecke-poly", "--g", "2", "--format", "latex")
    lines = out.strip().splitlines()
    assert status == 0 and len(lines) == 5
    assert lines[0] == r"\goth h_{0} = p^{6}"
    assert lines[-1] == r"\goth h_{4} = 1"


def test_satake_json_round_trips(capsys):
    status, out, _ = run(capsys, "satake", "--g", "3", "--i", "2")
    data = json.loads(out)
    assert status == 0 and set(data["tau_p2"]["phi"]) == {"0,2", "0,3", "1,3"}
    LaurentPolynomial.from_dict(data["tau_p2"]["uv"])


def test_output_is_deterministic(capsys):
    first = run(capsys, "packet", "--g", "3", "--ptype", "2")[1]
    second = run(capsys, "packet", "--g", "3", "--ptype", "2")[1]
    assert first == second


def test_relations_y_relation(capsys):
    status, out, _ = run(capsys, "relations", "--theorem44", "--g", "4")
    data = json.loads(out)
    assert status == 0 and data["verified"]
    assert data["relation"]["m_p1"] == "-1"


def test_relations_counts(capsys):
    data = json.loads(run(capsys, "relations", "--g", "3", "--parts", "1,2")[1])
    assert data["algebraic_count"] == data["expected_count"] == 1


def test_coset_table(capsys):
    data = json.loads(run(capsys, "coset-table")[1])
    assert set(data["grid"]) == {"0", "1", "2", "3"}


def test_spin(capsys):
    data = json.loads(run(capsys, "spin", "--g", "2")[1])
    assert len(data["basis"]) == 4 and data["m2_matches_orthogonal"]


def test_alpha(capsys):
    data = json.loads(run(capsys, "alpha", "--g", "2")[1])
    assert data["a0_odd"]


@pytest.mark.parametrize("argv", [
    ["packet", "--g", "3", "--parts", "2,2"],
    ["packet", "--g", "3", "--parts", "a,b"],
    ["satake", "--g", "2", "--i", "5"],
    ["spin", "--g", "9"],
    ["hecke-poly"],
])
def test_usage_errors_exit_2(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 2 and "error" in err


def test_verify_tables_module_entry():
    proc = subprocess.run([sys.executable, "-m", "siegel_hecke", "verify-tables", "--scope", "table2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["summary"]["fail"] == 0


def test_latex_rendering():
    assert latex_name("tau_p3") == r"\tau_{p,3}"
    from siegel_hecke.poly_core import P_TABLE
    p = P_TABLE.var("p")
    assert latex(p ** 3 - 2 * p.inverse()) == "p^{3} - 2 p^{-1}"
