import json
import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from ncalc.cli import main
from ncalc.parser import (Add, Commutator, Cyc, D, Env, Mul, Num, ParseError, Star, Sym, Tr, parse,
                          to_str, tokenize)

DATA = os.path.join(os.path.dirname(__file__), "..", "data")


def test_parse_shapes():
    assert parse("x*y") == Mul((Sym("x"), Sym("y")))
    assert parse("xy") == Sym("xy")
    assert parse("x - y") == Add(((1, Sym("x")), (-1, Sym("y"))))
    assert parse("-x") == Add(((-1, Sym("x")),))
    assert parse("3/4*d(x)") == Mul((Num(__import__("fractions").Fraction(3, 4)), D(Sym("x"))))
    assert parse("[x, y]") == Commutator(Sym("x"), Sym("y"))
    assert parse("cyc(x*y)") == Cyc(Mul((Sym("x"), Sym("y"))))
    assert parse("tr(x)") == Tr(Sym("x"))
    assert parse("star(x1, y1)") == Star(Sym("x1"), Sym("y1"))
    assert parse("x_{1,2,1}") == Sym("x_{1,2,1}")
    assert parse(" ( x ) ") == Sym("x")


@pytest.mark.parametrize("text,line,col", [
    ("x + ", 1, 5),
    ("x $ y", 1, 3),
    ("d(x", 1, 4),
    ("x\n  * * y", 2, 5),
    ("[x y]", 1, 4),
    ("x y", 1, 3),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert (info.value.line, info.value.col) == (line, col)


def test_unknown_symbol():
    with pytest.raises(ParseError) as info:
        parse("x * z", Env(["x", "y"]))
    assert info.value.col == 5 and "unknown symbol" in str(info.value)


def test_tokenize_positions():
    toks = tokenize("a\n b")
    assert [(t.text, t.line, t.col) for t in toks] == [("a", 1, 1), ("b", 2, 2), ("", 2, 3)]


names = st.sampled_from(["x", "y", "z1", "b_2"])
leaves = st.one_of(names.map(Sym), st.fractions(min_value=0, max_value=5, max_denominator=4).map(Num))


def _trees(children):
    return st.one_of(
        st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=2, max_size=3).map(lambda t: Add(tuple(t))),
        st.tuples(st.sampled_from([-1]), children).map(lambda t: Add((t,))),
        st.lists(children, min_size=2, max_size=3).map(lambda f: Mul(tuple(f))),
        st.tuples(children, children).map(lambda p: Commutator(*p)),
        st.tuples(children, children).map(lambda p: Star(*p)),
        children.map(D), children.map(Cyc), children.map(Tr))


def _normal(e):
    """Trees as the parser would build them: no nested Mul, no Add inside a leading Add term."""
    return parse(to_str(e))


@given(st.recursive(leaves, _trees, max_leaves=6))
def test_print_parse_roundtrip(e):
    p = _normal(e)
    assert parse(to_str(p)) == p
    assert to_str(parse(to_str(p))) == to_str(p)


# --------------------------------------------------------------------------
# command line


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_drham(capsys):
    code, out, _ = run(capsys, "drham", "--algebra", os.path.join(DATA, "kx_kxx.json"))
    assert code == 0 and "(1, 0, 1, 0, 1)" in out
    code, out, _ = run(capsys, "--json", "drham", "--algebra", "k[e]/(e^2-e)", "--max-degree", "2")
    data = json.loads(out)
    assert data["dims"] == [1, 0, 1] and data["pieces"]["2,0"]["representatives"] == ["e*d(e)*d(e)"]
    code, out, _ = run(capsys, "--json", "drham", "--free", "2", "--reduce", "x*d(y) - d(y)*x")
    assert json.loads(out)["class"] == "0"


def test_cli_hochschild(capsys):
    code, out, _ = run(capsys, "--json", "hochschild", "--algebra", "dual")
    assert code == 0 and [json.loads(out)[str(p)]["dim"] for p in range(5)] == [2, 1, 1, 1, 1]
    code, out, _ = run(capsys, "--json", "hochschild", "--algebra", "dual", "--cohomology", "--max-degree", "1")
    assert [json.loads(out)[str(p)]["dim"] for p in range(2)] == [2, 1]


def test_cli_moyal_and_rep(capsys):
    code, out, _ = run(capsys, "moyal", "--expr", "star(x1, y1)")
    assert out.strip() == "x1*y1 + (1/2)*t"
    code, out, _ = run(capsys, "--json", "moyal", "--expr", "x1*y1 - y1*x1")
    assert json.loads(out)["result"] == "t"
    code, out, _ = run(capsys, "rep", "--trace", "x*y - y*x")
    assert out.strip() == "0"
    code, out, _ = run(capsys, "--json", "rep", "--gens", "1", "--trace", "x")
    assert json.loads(out)["trace"] == "x_{1,1,1} + x_{1,2,2}"


def test_cli_necklace(capsys):
    code, out, _ = run(capsys, "--json", "necklace", "--bracket", "cyc(x*y)", "cyc(x*x)")
    assert code == 0 and "bracket" in json.loads(out)
    code, out, _ = run(capsys, "--json", "necklace", "--expr", "x*y - y*x")
    assert json.loads(out)["cyclic"] == "0"


def test_cli_weil_and_chern(capsys):
    code, out, _ = run(capsys, "--json", "weil", "--mode", "commutative", "--lie", "sl2", "--max-degree", "3")
    assert json.loads(out)["cohomology"] == [1, 0, 0, 0]
    code, out, _ = run(capsys, "--json", "weil", "--mode", "nc", "--algebra", "kxk", "--max-degree", "3")
    assert json.loads(out)["cohomology"] == [1, 0, 0, 0]
    code, out, _ = run(capsys, "--json", "chern", "--algebra", os.path.join(DATA, "kx_kxx.json"),
                       "--idempotent", os.path.join(DATA, "idempotent_e.json"), "--k", "2")
    data = json.loads(out)
    assert data["ch1"]["class"] == "e*d(e)*d(e)" and data["ch1"]["curvature_agrees"] and data["c0"]["closed"]
    code, out, _ = run(capsys, "--json", "chern", "--algebra", "k[Z/3]",
                       "--invertible", os.path.join(DATA, "z3_generator.json"))
    assert json.loads(out)["c1"] == {"form": "g^2*d(g)", "class": "0", "b_zero": True}


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "--json", "verify", "core", "--caps", "small")
    data = json.loads(out)
    assert code == 0 and data["suite"] == "core" and data["ok"] and all(r["status"] == "pass" for r in data["checks"])


@pytest.mark.parametrize("argv,code,msg", [
    (["moyal", "--expr", "x1 +"], 2, "parse error"),
    (["moyal", "--expr", "q1"], 2, "unknown symbol"),
    (["frobnicate"], 2, ""),
    (["drham"], 2, ""),
    (["--max-dim", "3", "hochschild", "--algebra", "mat2", "--max-degree", "3"], 3, "cap exceeded"),
    (["verify", "nonsense"], 2, ""),
    (["chern", "--algebra", "k[e]/(e^2-e)", "--idempotent", os.path.join(DATA, "z3_generator.json")], 1, "error"),
    (["hochschild", "--algebra", os.path.join(DATA, "z3_generator.json")], 2, "not a structure-constant table"),
    (["hochschild", "--algebra", "no_such_file.json"], 2, "cannot read"),
])
def test_cli_exit_codes(capsys, argv, code, msg):
    from ncalc.errors import max_dim
    before = max_dim()
    got, out, err = run(capsys, *argv)
    assert got == code and msg in err
    assert max_dim() == before


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "ncalc.cli", "moyal", "--expr", "star(x1, y1)"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "x1*y1 + (1/2)*t"
