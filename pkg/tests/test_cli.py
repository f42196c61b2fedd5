import json

import pytest

from monres.cli import main

FILE = """\
vars: 4
I: x1*x2
J: x3*x4
K: x1*x2, x2*x3, x3*x4
P: x2*x4
split S = I + J
"""


@pytest.fixture
def ideal_file(tmp_path):
    path = tmp_path / "ideals.txt"
    path.write_text(FILE)
    return str(path)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_betti(capsys, ideal_file):
    rc, out, err = run(capsys, "betti", ideal_file, "K")
    assert rc == 0
    assert out.splitlines()[0] == "total: 1 3 2"


def test_betti_multigraded(capsys, ideal_file):
    rc, out, _ = run(capsys, "betti", ideal_file, "K", "--multi")
    assert rc == 0
    assert "b[2,(1,1,1,0)] = 1" in out
    assert "b[2,(0,1,1,1)] = 1" in out


def test_taylor_json(capsys, ideal_file, tmp_path):
    out_path = tmp_path / "c.json"
    rc, out, _ = run(capsys, "taylor", ideal_file, "K",
                     "--json", str(out_path))
    assert rc == 0
    assert out.startswith("ranks: 1 3 3 1")
    data = json.loads(out_path.read_text())
    assert data["n"] == 4 and data["field"] == "q"


def test_splitting_name_expands(capsys, ideal_file):
    rc, out, _ = run(capsys, "quasitransverse", ideal_file, "S")
    assert rc == 0
    assert out.splitlines()[0] == "true"


def test_quasitransverse_false_with_witness(capsys, ideal_file):
    rc, out, _ = run(capsys, "quasitransverse", ideal_file, "I", "K")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "false"
    assert lines[1].startswith("witness: ")


def test_genscarf(capsys, ideal_file):
    rc, out, _ = run(capsys, "genscarf", ideal_file, "I", "J")
    assert rc == 0
    assert out.splitlines()[0] == "ranks: 1 2 1"


def test_koszul(capsys, ideal_file):
    rc, out, _ = run(capsys, "koszul", ideal_file, "K")
    assert rc == 0
    assert out.splitlines()[0] == "dims: 1 3 2"


def test_kunneth_ok(capsys, ideal_file):
    rc, out, _ = run(capsys, "kunneth", ideal_file, "I", "J")
    assert rc == 0
    assert out.splitlines()[0] == "iso"


def test_kunneth_hypotheses_unmet(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("vars: 2\nA: x1^2\nB: x2\n")
    rc, out, _ = run(capsys, "kunneth", str(path), "A", "B")
    assert rc == 2
    assert out.startswith("hypotheses unmet")


def test_massey(capsys, ideal_file):
    rc, out, _ = run(capsys, "massey", ideal_file, "I", "J")
    assert rc == 0
    assert out.splitlines()[0] == "true"


def test_golod(capsys, ideal_file):
    rc, out, _ = run(capsys, "golod", ideal_file, "I", "J")
    assert rc == 0
    assert out.splitlines()[0] == "true"


def test_dgverify(capsys, ideal_file):
    rc, out, _ = run(capsys, "dgverify", ideal_file, "K")
    assert rc == 0
    assert "leibniz=ok" in out


def test_unknown_command(capsys, ideal_file):
    with pytest.raises(SystemExit) as exc:
        main(["not-a-command", ideal_file])
    assert exc.value.code == 2
    capsys.readouterr()


def test_unknown_name(capsys, ideal_file):
    rc, _, err = run(capsys, "betti", ideal_file, "NOPE")
    assert rc == 1
    assert "unknown ideal" in err


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("I: x1\n")
    rc, _, err = run(capsys, "betti", str(path), "I")
    assert rc == 1
    assert "line 1" in err


def test_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, "betti", str(tmp_path / "nope.txt"), "I")
    assert rc == 1
    assert "error:" in err


def test_warnings_go_to_stderr(capsys, tmp_path):
    path = tmp_path / "warn.txt"
    path.write_text("vars: 2\nI: x1, x1*x2\n")
    rc, out, err = run(capsys, "betti", str(path), "I")
    assert rc == 0
    assert "auto-minimalized" in err
    assert "auto-minimalized" not in out


def test_gf_field(capsys, ideal_file):
    rc, out, _ = run(capsys, "betti", ideal_file, "K", "--field", "gf:2")
    assert rc == 0
    assert out.splitlines()[0] == "total: 1 3 2"


def test_deterministic_output(capsys, ideal_file):
    rc1, out1, _ = run(capsys, "betti", ideal_file, "K", "--multi")
    rc2, out2, _ = run(capsys, "betti", ideal_file, "K", "--multi")
    assert (rc1, out1) == (rc2, out2)
