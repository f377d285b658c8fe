import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import MANY, homogeneous
from cypot.cli import (EXIT_INPUT, EXIT_INTERNAL, EXIT_OK, ParseError, RunConfig, main,
                       parse_matrix, parse_poly, parse_potential, parse_vars, run)
from cypot.ncpoly import GenSet, NcPoly

G = GenSet(["x", "y", "z"])
x, y, z = (NcPoly.gen(i) for i in range(3))


def test_parse_examples():
    assert parse_poly("x*y*z - y*x*z", G) == x * y * z - y * x * z
    assert parse_poly("1/2 x^2", GenSet(["x"])) == Fraction(1, 2) * x * x
    with pytest.raises(ParseError):
        parse_potential("x*y + z", G)


def test_parse_grammar():
    assert parse_poly("2(x + y)z", G) == 2 * x * z + 2 * y * z
    assert parse_poly("-x^3 + -y^3", G) == -(x ** 3) - y ** 3
    assert parse_poly("(xy)^2", G) == x * y * x * y
    assert parse_poly("xyz", G) == x * y * z
    g = GenSet.numbered(3)
    assert parse_poly("x1x2x3 - 3/4 x3^2 x1", g) == x * y * z - Fraction(3, 4) * z * z * x


@pytest.mark.parametrize("text,pos", [("x*q", 2), ("1/ x", 3), ("x + (y", 6), ("x ^ y", 4),
                                       ("", 0), ("x $ y", 2), ("1/0 x", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as e:
        parse_poly(text, G)
    assert e.value.position == pos


def test_parse_vars():
    assert parse_vars("3").names == ("x1", "x2", "x3")
    assert parse_vars("a, b c").names == ("a", "b", "c")
    assert parse_vars(None, "x2 x10 + x1^2 x10").names == ("x1", "x2", "x10")


def test_parse_matrix():
    assert parse_matrix('[[0, "1/2"], [-2, 0]]') == [[0, Fraction(1, 2)], [-2, 0]]
    assert parse_matrix("0 1\n-2 0\n") == [[0, 1], [-2, 0]]
    with pytest.raises(ValueError):
        parse_matrix("[[1, 2]]")


@MANY
@given(homogeneous(n=3))
def test_round_trip(data):
    _, p = data
    assert parse_poly(p.format(G), G).terms == p.terms
    g = GenSet.numbered(3)
    assert parse_poly(p.format(g), g).terms == p.terms


def test_run_sklyanin():
    rep = run(RunConfig(catalog=["sklyanin", "1", "1", "1"], max_degree=6))
    assert rep["verdict"] == "CONSISTENT_UP_TO(6)"
    assert set(rep) == {"input", "parameters", "criterion", "hilbert", "exactness", "hochschild",
                        "quadric", "verdict", "version"}


def test_run_x_cubed():
    rep = run(RunConfig(potential="x^3", vars="x", max_degree=5))
    assert rep["verdict"].startswith("REFUTED(4,")
    assert rep["exactness"]["first_failure"] == [4, 3]


def test_run_quadric_matrix():
    rep = run(RunConfig(matrix="[[0,1],[-2,0]]", checks=["quadric"]))
    q = rep["quadric"]
    assert q["S"] == [["2", "0"], ["0", "1/2"]]
    assert q["nakayama_ok"] and q["gamma_koszul_exact"] and q["ore_hilbert_factorizes"]
    assert q["sigma_verified"] and q["ore_relations_hold"]


def test_run_degenerate_quadric_reported():
    rep = run(RunConfig(matrix="[[1,0],[0,0]]", checks=["quadric"], max_degree=3))
    assert rep["quadric"]["hypothesis_ok"] is False


def test_main_json_deterministic(tmp_path, capsys):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    args = ["--catalog", "cubic_typeA", "1", "1", "1", "--max-degree", "6", "--checks", "all"]
    assert main(args + ["--out", str(out1)]) == EXIT_OK
    assert main(args + ["--out", str(out2)]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()
    rep = json.loads(out1.read_text())
    assert rep["hilbert"]["dims"] == [1, 2, 4, 6, 9, 12, 16]
    assert rep["version"]["schema"] == "1"


def test_main_potential_file_and_text(tmp_path, capsys):
    f = tmp_path / "w.txt"
    f.write_text("x*y*z - y*x*z\n", encoding="utf-8")
    assert main(["--potential", "@" + str(f), "--max-degree", "4", "--format", "text"]) == EXIT_OK
    assert "verdict: CONSISTENT_UP_TO(4)" in capsys.readouterr().out


def test_main_refuted_is_success(capsys):
    assert main(["--catalog", "potencyN", "2", "--max-degree", "5"]) == EXIT_OK


@pytest.mark.parametrize("args", [
    ["--potential", "x*y + z", "--vars", "x,y,z"],
    ["--potential", "x*q*z", "--vars", "x,y,z"],
    ["--catalog", "nope"],
    ["--potential", "x^3", "--checks", "bogus"],
    ["--potential", "x^3", "--max-degree", "2"],
    ["--potential", "@/nonexistent/file"],
    [],
])
def test_main_input_errors(args, capsys):
    assert main(args) == EXIT_INPUT
    err = json.loads(capsys.readouterr().err)
    assert err["error"]["kind"] == "input"


def test_main_internal_error(monkeypatch, capsys):
    import cypot.cli as cli

    def boom(cfg):
        raise AssertionError("invariant")
    monkeypatch.setattr(cli, "run", boom)
    assert main(["--potential", "x^3"]) == EXIT_INTERNAL
    assert json.loads(capsys.readouterr().err)["error"]["kind"] == "internal"
