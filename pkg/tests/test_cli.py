import json
from pathlib import Path

import pytest

import lpk.cli as cli
from lpk.cli import main
from lpk.monomial import MonomialIdeal, parse_ideal

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"
M2 = str(EXAMPLES / "m2.ideal")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_letterplace_example(capsys):
    code, out, _ = run(capsys, "ideal", "letterplace", "--n", "2", "--poset", "chain:2")
    assert code == 0
    ideal = parse_ideal(out)
    assert len(ideal.generators) == 3


@pytest.mark.parametrize("argv", [
    ["ideal", "letterplace", "--n", "3", "--poset", "prod(chain:2,chain:2)"],
    ["ideal", "coletterplace", "--n", "3", "--poset", "antichain:2"],
    ["ideal", "subideal", "--n", "3", "--poset", "chain:2", "--gens", "1,3;2,2"],
    ["ideal", "quotient", "--n", "2", "--poset", "chain:3", "--map", "shift"],
    ["family", "ferrers", "--param", "lam=3,1"],
    ["family", "det_initial", "--param", "n=2", "--param", "m=2", "--param", "s=2",
     "--param", "e=0,1", "--param", "f=0,1"],
    ["family", "strongly_stable", "--param", "d=2", "--param", "n=3", "--param", "gens=x2*x3"],
    ["dual", "--n", "2", "--poset", "chain:3"],
])
def test_printed_ideals_round_trip(capsys, tmp_path, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    first = parse_ideal(out)
    path = tmp_path / "i.ideal"
    path.write_text(out)
    assert parse_ideal(path.read_text()) == first
    if not first.is_squarefree():
        return
    code, again, _ = run(capsys, "dual", "--ideal", str(path), "--method", "all")
    assert code == 0
    # printing the dual of the dual recovers the ideal
    path.write_text(again)
    code, back, _ = run(capsys, "dual", "--ideal", str(path))
    assert code == 0 and parse_ideal(back) == first


def test_duality_example(capsys):
    code, out, _ = run(capsys, "check", "duality", "--n", "2", "--poset", "prod(chain:2,chain:2)")
    assert code == 0 and out.startswith("PASS")


def test_betti_example(capsys):
    code, out, _ = run(capsys, "betti", "--ideal", M2, "--json")
    assert code == 0
    assert json.loads(out) == {"0,0": 1, "1,2": 3, "2,3": 2}


def test_json_report_schema(capsys):
    code, out, _ = run(capsys, "check", "unseparable", "--ideal", M2, "--json")
    assert code == 1
    rep = json.loads(out)
    assert set(rep) == {"check", "instance", "verdict", "witness"}
    assert rep["verdict"] == "FAIL" and rep["check"] == "unseparable"
    code, out, _ = run(capsys, "check", "unseparable", "--n", "2", "--poset", "chain:2", "--json")
    assert code == 0 and set(json.loads(out)) == {"check", "instance", "verdict"}


@pytest.mark.parametrize("argv", [
    ["check", "cm", "--n", "2", "--poset", "prod(chain:1,antichain:2)"],
    ["check", "fibers", "--n", "2", "--poset", "chain:3", "--map", "shift", "--bistrict"],
    ["check", "regular-seq", "--n", "2", "--poset", "prod(chain:2,chain:2)", "--map", "mult"],
    ["check", "linear-res", "--n", "2", "--poset", "chain:3", "--coletterplace"],
    ["check", "colon-cert", "--n", "3", "--poset", "antichain:2", "--gens", "2,3"],
])
def test_checks_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert out.startswith("PASS")


def test_failed_check_exit_one(capsys):
    code, out, _ = run(capsys, "check", "linear-res", "--n", "2", "--poset", "antichain:2")
    assert code == 1 and out.startswith("FAIL")
    code, out, _ = run(capsys, "check", "unseparable", "--ideal", M2)
    assert code == 1 and out.startswith("FAIL") and "witness" in out


@pytest.mark.parametrize("argv", [
    ["ideal", "letterplace", "--n", "2", "--poset", "chian:2"],
    ["betti", "--ideal", "/nonexistent/file"],
    ["family", "ferrers", "--param", "lam=1,2"],
    ["family", "ferrers", "--param", "lam"],
    ["bogus"],
    ["ideal", "quotient", "--n", "2", "--poset", "antichain:2", "--map", "shift"],
])
def test_input_errors_exit_two(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2


def test_parse_error_has_location(capsys, tmp_path):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars: x y\nx*z\n")
    code, _, err = run(capsys, "betti", "--ideal", str(bad))
    assert code == 2 and "line" in err


def test_internal_contradiction_exit_three(capsys, monkeypatch):
    monkeypatch.setattr(cli, "alexander_dual",
                        lambda ideal, method="transversal": MonomialIdeal.from_strings(["z"], ["z"]))
    code, _, err = run(capsys, "check", "duality", "--n", "2", "--poset", "chain:2")
    assert code == 3 and "bug" in err


def test_globals_after_subcommand(capsys):
    a = run(capsys, "--json", "betti", "--ideal", M2)
    b = run(capsys, "betti", "--ideal", M2, "--json")
    assert a == b


def test_char_flag(capsys, tmp_path):
    rp2 = ["x1*x2*x4", "x1*x2*x5", "x1*x3*x5", "x1*x3*x6", "x1*x4*x6", "x2*x3*x4",
           "x2*x3*x6", "x2*x5*x6", "x3*x4*x5", "x4*x5*x6"]
    path = tmp_path / "rp2.ideal"
    path.write_text("vars: x1 x2 x3 x4 x5 x6\n" + "\n".join(rp2) + "\n")
    _, zero, _ = run(capsys, "betti", "--ideal", str(path), "--char", "0")
    _, two, _ = run(capsys, "betti", "--ideal", str(path), "--char", "2")
    assert zero != two


def test_hilbert(capsys):
    code, out, _ = run(capsys, "hilbert", "--ideal", M2, "--upto", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["H"] == [1, 2, 0, 0] and data["K"] == [1, 0, -3, 2]


def test_export_golden(capsys):
    golden = Path(__file__).parent / "golden"
    for dialect, name in (("m2", "sample.m2"), ("singular", "sample.sing")):
        code, out, _ = run(capsys, "export", "--ideal", str(golden / "sample.ideal"), "--dialect", dialect)
        assert code == 0
        assert out == (golden / name).read_text()


def test_family_sidecar(capsys, tmp_path):
    side = tmp_path / "side.json"
    code, out, _ = run(capsys, "family", "multichain", "--param", "P=chain:2", "--param", "s=2",
                       "--sidecar", str(side))
    assert code == 0
    data = json.loads(side.read_text())
    assert "map" in data and "source_ideal" in data


def test_suite_reproducible(capsys, tmp_path):
    out1 = tmp_path / "a.txt"
    code, first, _ = run(capsys, "suite", "--only", "6,9", "--seed", "7", "--output", str(out1))
    assert code == 0
    code, second, _ = run(capsys, "suite", "--only", "6,9", "--seed", "7")
    assert first == second == out1.read_text()
    assert "criterion 6: PASS" in first and "criterion 9: PASS" in first
