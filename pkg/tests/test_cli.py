import io
import random
import subprocess
import sys
from pathlib import Path

import pytest

from holant.cli import main
from holant.grid import dump_grid
from holant.instances import random_affine_signature, random_arities, random_dense_signature, random_grid

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"
K4 = str(DATA / "k4_exact_one.grid")


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("method", ["brute", "fkt", "holographic", "auto"])
def test_evaluate_k4(method):
    assert run("evaluate", "--method", method, "--input", K4) == (0, "3\n")


def test_evaluate_auto_reports_method(capsys):
    code, out = run("evaluate", "--input", K4, "--verbose")
    assert code == 0 and out == "3\n"
    assert "method holographic" in capsys.readouterr().err


def test_evaluate_inapplicable(capsys):
    assert run("evaluate", "--method", "arity2", "--input", K4)[0] == 4
    assert "arity" in capsys.readouterr().err


def test_evaluate_with_basis(tmp_path):
    p = tmp_path / "cyc.grid"
    p.write_text("signature e sym 2 1 0 1\nvertex a e\nvertex b e\nedge a.0 b.0\nedge a.1 b.1\n")
    assert run("evaluate", "--method", "holographic", "--basis", "1", "1", "1", "-1", "--input", str(p)) == (0, "2\n")


def test_auto_equals_brute(tmp_path):
    rng = random.Random(5)
    for i in range(12):
        make = random_affine_signature if i % 2 else random_dense_signature
        g = random_grid(random_arities(rng, 8), make, rng)
        p = tmp_path / ("g%d.grid" % i)
        p.write_text(dump_grid(g))
        assert run("evaluate", "--input", str(p)) == run("evaluate", "--method", "brute", "--input", str(p))


def test_parse_error_line_number(tmp_path, capsys):
    p = tmp_path / "bad.grid"
    p.write_text("signature e sym 2 1 0 1\nvertex a e\nedge a.0 a.9 extra\n")
    assert run("evaluate", "--input", str(p))[0] == 2
    assert "line 3" in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["evaluate"], out=io.StringIO())
    assert exc.value.code == 1
    assert run("classify", "--framework", "csp")[0] == 1
    assert run("evaluate", "--input", "/nonexistent/file")[0] == 1


def test_classify():
    code, out = run("classify", "--framework", "pl-holant-c", "--input", str(DATA / "a010b.sigs"))
    assert code == 0 and out.startswith("verdict SharpPHardEvenPlanar\n")
    code, out = run("classify", "--framework", "23reg", "--signature", "[1,2,1]", "--signature", "sym 3 1 0 0 1")
    assert code == 0 and "TractablePlanarOnly" in out and "witness category 5" in out
    assert run("classify", "--framework", "holant-c", "--signature", "[1,0,i]")[0] == 4


def test_classify_deterministic():
    args = ("classify", "--framework", "holant-c", "--signature", "[1,0,0,-1]", "--signature", "[1,0,1]")
    assert run(*args) == run(*args)


def test_verify_gadget():
    code, out = run("verify-gadget", "fig7-g0", "v=2")
    assert code == 0 and "PASS [14,5,2,1]" in out
    code, out = run("verify-gadget", "crossover", "c=17")
    assert code == 0 and out.rstrip().endswith("PASS") and "x 2\n" in out
    assert run("verify-gadget", "crossover", "c=1")[0] == 4
    assert run("verify-gadget", "nope")[0] == 1
    assert run("verify-gadget", "fig7-g0")[0] == 1


def test_synthesize():
    code, out = run("synthesize", "--signature", "[5,0,1]")
    assert code == 0 and "external" in out and "w=5" in out
    assert run("synthesize", "--signature", "[1,1,1]")[0] == 4


def test_transform():
    assert run("transform", "--basis", "1,1,1,-1", "--signature", "[1,0,1]") == (0, "sym 2 2 0 2\n")
    code, out = run("transform", "--basis", "1", "0", "0", "1", "--input", K4)
    assert code == 2  # K4 is not bipartite


def test_pfaffian(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("0 1 2 3\n-1 0 4 5\n-2 -4 0 6\n-3 -5 -6 0\n")
    assert run("pfaffian", "--input", str(p)) == (0, "8\n")
    p.write_text("0 1\n1 0\n")
    assert run("pfaffian", "--input", str(p))[0] == 2


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "holant", "evaluate", "--method", "fkt", "--input", K4],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "3\n"
