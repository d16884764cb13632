import io as _io
import json

import numpy as np
import pytest

from acnet.cli import main
from acnet.io import read_matrix, read_network, write_matrix, write_network


def run(*argv):
    out = _io.StringIO()
    code = main(list(map(str, argv)), out=out)
    return code, out.getvalue()


def test_validate_paper(fixtures):
    code, out = run("validate", fixtures / "paper_example.json")
    assert code == 0
    assert out.strip().endswith("ADMISSIBLE")


def test_validate_identity(fixtures):
    code, out = run("validate", fixtures / "identity3.json")
    assert code == 1
    assert "INADMISSIBLE" in out
    assert "row sums               FAIL" in out


def test_validate_missing(tmp_path):
    assert run("validate", tmp_path / "missing.json")[0] == 2


def test_usage_error():
    assert run("frobnicate")[0] == 2
    assert run("--tol", "-1", "validate", "x")[0] == 2


def test_synthesize_paper(fixtures, tmp_path):
    target = tmp_path / "net.json"
    code, out = run("synthesize", fixtures / "paper_example.json", "-o", target)
    assert code == 0
    assert "nodes 4" in out and "edges 6" in out
    residual = float(out.split("residual ")[1].split()[0])
    assert residual <= 1e-12
    assert len(read_network(target).edges) == 6


def test_synthesize_two_node(fixtures, tmp_path):
    target = tmp_path / "net.json"
    code, out = run("synthesize", fixtures / "two_node.json", "-o", target)
    assert code == 0 and "nodes 2" in out and "edges 1" in out


def test_synthesize_to_stdout(fixtures, capsys):
    code, out = run("synthesize", fixtures / "paper_example.json")
    assert code == 0
    assert json.loads(out)["interior_count"] == 1
    assert "edges 6" in capsys.readouterr().err


def test_synthesize_inadmissible(fixtures, capsys):
    code, _ = run("synthesize", fixtures / "identity3.json", "-o", "unused.json")
    assert code == 1
    assert "row sums" in capsys.readouterr().err


def test_gen_then_synthesize(tmp_path):
    m = tmp_path / "m.json"
    assert run("gen", "--size", 7, "--seed", 3, "-o", m)[0] == 0
    code, out = run("synthesize", m, "-o", tmp_path / "n.json")
    assert code == 0
    assert float(out.split("residual ")[1].split()[0]) <= 1e-8 * np.abs(read_matrix(m)).max()


def test_respond_paper(fixtures, paper_lambda):
    code, out = run("respond", fixtures / "paper_network.json")
    assert code == 0
    doc = json.loads(out)
    m = np.array([complex(*z) for z in doc["entries"]]).reshape(3, 3)
    assert np.abs(m - paper_lambda).max() <= 1e-10


def test_respond_single_edge(fixtures, tmp_path):
    target = tmp_path / "r.json"
    assert run("respond", fixtures / "single_edge.json", "-o", target)[0] == 0
    c = 1 + 1j
    np.testing.assert_array_equal(read_matrix(target), [[c, -c], [-c, c]])


def test_respond_disconnected(fixtures, capsys):
    code, _ = run("respond", fixtures / "disconnected.json")
    assert code == 1
    assert "disconnected" in capsys.readouterr().err


def _currents(out):
    lines = out.split("currents\n")[1].strip().splitlines()
    vals = []
    for line in lines:
        _, re, im = line.split()
        vals.append(complex(float(re), float(im[:-1])))
    return np.array(vals)


def test_solve_paper(fixtures):
    code, out = run("solve", fixtures / "paper_network.json", "--voltages", fixtures / "unit_first.json")
    assert code == 0
    np.testing.assert_allclose(_currents(out), [2, 1, -3], atol=1e-12)


def test_solve_single_edge(fixtures):
    code, out = run("solve", fixtures / "single_edge.json", "--voltages", fixtures / "unit_two.json")
    assert code == 0
    np.testing.assert_allclose(_currents(out), [1 + 1j, -1 - 1j], atol=0)


def test_solve_constant(fixtures, tmp_path):
    v = tmp_path / "v.json"
    v.write_text(json.dumps({"size": 3, "entries": [[2, 1]] * 3}))
    code, out = run("solve", fixtures / "paper_network.json", "--voltages", v)
    assert code == 0
    np.testing.assert_allclose(_currents(out), 0, atol=1e-13)


def test_solve_length_mismatch(fixtures):
    code, _ = run("solve", fixtures / "paper_network.json", "--voltages", fixtures / "unit_two.json")
    assert code == 2


def test_roundtrip_paper(fixtures):
    code, out = run("roundtrip", fixtures / "paper_example.json")
    assert code == 0
    assert float(out.split("residual ")[1].split()[0]) <= 1e-12


def test_gen_two_node(tmp_path):
    m = tmp_path / "m.json"
    run("gen", "--size", 2, "--seed", 11, "-o", m)
    x = read_matrix(m)
    c = x[0, 0]
    np.testing.assert_allclose(x, [[c, -c], [-c, c]], atol=1e-14)


def test_gen_b8_seed7_roundtrip(tmp_path):
    m = tmp_path / "m.json"
    assert run("gen", "--size", 8, "--seed", 7, "-o", m)[0] == 0
    assert run("roundtrip", m)[0] == 0


def test_gen_deterministic():
    assert run("gen", "--size", 5, "--seed", 1) == run("gen", "--size", 5, "--seed", 1)


def test_tol_flag(fixtures):
    code, out = run("--tol", "1e-6", "validate", fixtures / "paper_example.json")
    assert code == 0
    row = next(line for line in out.splitlines() if line.startswith("row sums"))
    assert float(row.split("threshold ")[1]) == pytest.approx(7e-6)
