import json

import pytest

from ncgar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_output(capsys):
    code, out, _ = run(capsys, "group", "A2")
    assert code == 0
    assert out == ("system A2\n"
                   "order 6\n"
                   "rank 2\n"
                   "generators (1,2) (2,3)\n"
                   "reflections 3\n"
                   "coxeter element (1,2,3)\n"
                   "length histogram 0:1 1:3 2:2\n")


@pytest.mark.parametrize("desc,order,refl", [
    ("I2(5)", 10, 5), ("B3", 48, 9),
])
def test_group_orders(capsys, desc, order, refl):
    code, out, _ = run(capsys, "group", desc)
    assert code == 0
    assert f"order {order}\n" in out
    assert f"reflections {refl}\n" in out


def test_nc_output(capsys):
    code, out, _ = run(capsys, "nc", "A3")
    assert code == 0
    assert "14 members, lattice OK (196 pairs checked)" in out


def test_nc_alternative_gamma(capsys):
    code, out, _ = run(capsys, "nc", "A2", "--gamma", "(1,3,2)")
    assert code == 0
    assert "gamma (1,3,2)" in out
    assert "5 members, lattice OK" in out


def test_nc_json_roundtrip(capsys, lattice):
    code, out, _ = run(capsys, "nc", "A2", "--json")
    assert code == 0
    payload = json.loads(out[out.index("{"):])
    lat = lattice("A2")
    assert payload["members"] == lat.labels()
    assert [tuple(c) for c in payload["covers"]] == lat.covers
    assert payload["rank"] == lat.rank_of
    assert payload["gamma"] == "(1,2,3)"


def test_nc_dot_file(capsys, tmp_path):
    target = tmp_path / "nc.dot"
    code, out, _ = run(capsys, "nc", "A2", "--dot", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith('digraph "NC(A2)"')
    assert text.count("->") == 6


def test_monoid_eq(capsys):
    code, out, _ = run(capsys, "monoid", "eq", "(1,2,3)", "(1,2)*(2,3)")
    assert code == 0 and out == "true\n"
    code, out, _ = run(capsys, "monoid", "eq", "(1,2,3)", "(2,3)*(1,2)")
    assert code == 0 and out == "false\n"


def test_monoid_nf(capsys):
    code, out, _ = run(capsys, "monoid", "nf", "(1,2)*(1,2)")
    assert code == 0 and out == "(1,2)*(1,2)\n"
    code, out, _ = run(capsys, "monoid", "nf", "(1,2)*(2,3)")
    assert code == 0 and out == "(1,2,3)\n"


def test_monoid_lift(capsys):
    code, out, _ = run(capsys, "monoid", "lift", "(1,2)^-1*(1,2)")
    assert code == 0 and out == "g^-1 * (1,2,3)\n"


def test_monoid_other_system(capsys):
    code, out, _ = run(capsys, "monoid", "nf", "signed:-1 2", "--system", "B2")
    assert code == 0 and out == "signed:-1 2\n"
    # gamma itself in text form: product of the two simple reflections
    code, out, _ = run(capsys, "monoid", "nf", "signed:-1 2*signed:2 1",
                       "--system", "B2")
    assert code == 0 and out == "signed:2 -1\n"


def test_complex_k(capsys):
    code, out, _ = run(capsys, "complex", "k", "A2", "--homology")
    assert code == 0
    assert "cells (1, 4, 3); chi 0" in out
    assert "H0=Z H1=Z H2=0" in out


def test_complex_xplus(capsys):
    code, out, _ = run(capsys, "complex", "xplus", "A2", "--m", "0")
    assert code == 0
    assert "f-vector (1)" in out
    code, out, _ = run(capsys, "complex", "xplus", "A2", "--m", "2",
                       "--homology")
    assert code == 0
    assert "reduced homology H0=0 H1=0 H2=0" in out


def test_complex_xplus_json(capsys):
    code, out, _ = run(capsys, "complex", "xplus", "A2", "--m", "1", "--json")
    assert code == 0
    payload = json.loads(out[out.index("{"):])
    assert len(payload["vertices"]) == 5
    assert len(payload["maximal_faces"]) == 3


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "A2", "--suite", "lattice")
    assert code == 0
    assert out.endswith("result PASS\n")
    assert "ok lattice:member count" in out


def test_input_errors(capsys):
    code, _, err = run(capsys, "group", "Z9")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "nc", "A2", "--gamma", "(1,2)")
    assert code == 2
    code, _, err = run(capsys, "monoid", "nf", "(1,2)^-1")
    assert code == 2
    code, _, err = run(capsys, "complex", "xplus", "A2")
    assert code == 2  # missing --m


def test_unknown_flag_rejected(capsys):
    assert run(capsys, "group", "A2", "--bogus")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_deterministic_stdout(capsys):
    for argv in (["group", "B2"],
                 ["nc", "B2", "--json", "--dot"],
                 ["monoid", "nf", "(1,2)*(2,3)*(1,2)"],
                 ["complex", "k", "A3", "--homology", "--json"]):
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first == second


def test_deterministic_files(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "nc", "B2", "--json", str(a))[0] == 0
    assert run(capsys, "nc", "B2", "--json", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_report_writes_files(capsys, tmp_path):
    code, out, _ = run(capsys, "report", "A2", "--out", str(tmp_path / "rep"))
    assert code == 0
    lines = [l for l in out.splitlines() if l.startswith("wrote ")]
    assert len(lines) == 6
    names = sorted(p.name for p in (tmp_path / "rep").iterdir())
    assert names == ["A2_hasse.png", "A2_homology.csv", "A2_lengths.png",
                     "A2_members.csv", "A2_nc.dot", "A2_nc.json"]
    csv_text = (tmp_path / "rep" / "A2_members.csv").read_text()
    assert csv_text.splitlines()[0] == "index,element,rank"
    assert csv_text.splitlines()[1] == "0,e,0"
