import io
import json
from fractions import Fraction

import pytest

from apolarity import GF, PolySyntaxError, parse_poly
from apolarity.cli import run
from apolarity.parse import parse_list
from apolarity.ring import format_poly, random_form


def cli(*argv):
    buf = io.StringIO()
    code = run(list(argv), out=buf)
    return code, buf.getvalue()


def cli_json(*argv):
    code, text = cli(*argv)
    assert code == 0, text
    return json.loads(text)


def test_parse_examples():
    F = parse_poly("x0^3 + 3*x0*x1^2 - 1/2 x2")
    assert F.nvars == 3 and F.terms == {(3, 0, 0): 1, (1, 2, 0): 3, (0, 0, 1): Fraction(-1, 2)}
    assert parse_poly("-x0 + 2").terms == {(1,): -1, (0,): 2}
    assert parse_poly("x0*x0").terms == {(2,): 1}
    assert parse_poly("y1^2", nvars=3).side == "y"
    assert parse_poly("7").degree == 0


@pytest.mark.parametrize("text,offset", [("x0 +", 4), ("x0 ^", 4), ("2 * ", 4), ("x0 $ x1", 3),
                                          ("x0 x1", 3), ("1/0*x0", 2)])
def test_parse_errors_report_offset(text, offset):
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly(text)
    assert exc.value.offset == offset


def test_parse_rejects_mixed_and_unknown():
    with pytest.raises(PolySyntaxError):
        parse_poly("x0 + y1")
    with pytest.raises(PolySyntaxError) as exc:
        parse_poly("x0 + x5", nvars=3)
    assert exc.value.offset == 5


@pytest.mark.parametrize("seed", range(10))
def test_format_parse_roundtrip(seed):
    F = random_form(3, 4, seed)
    assert parse_poly(format_poly(F), nvars=4) == F
    G = random_form(2, 3, seed, GF())
    assert parse_poly(format_poly(G), GF(), nvars=3) == G


def test_parse_list():
    gens = parse_list("y0, y1^2, y0*y2")
    assert [g.nvars for g in gens] == [3, 3, 3]


def test_cli_hilbert():
    doc = cli_json("hilbert", "--poly", "x0^3 + x1^3 + x2^3")
    assert doc["command"] == "hilbert" and doc["field"] == "q" and doc["seed"] == 0
    assert doc["results"]["hilbert"] == [1, 3, 3, 1]
    assert "timing" not in doc


def test_cli_deterministic():
    argv = ["cactus-bound", "--poly", "x0*x1*x2 + x1^3", "--seed", "3", "--extra-candidates", "2"]
    assert cli(*argv) == cli(*argv)


def test_cli_timing_opt_in():
    doc = cli_json("hilbert", "--poly", "x0^2", "--timing")
    assert doc["timing"] >= 0


@pytest.mark.parametrize("argv,key", [
    (["annih", "--poly", "x0^3 + x0*x1^2 + x0*x2^2", "--k", "2"], "dim"),
    (["catalecticant", "--poly", "x0^2*x1", "--k", "1"], "rank"),
    (["diff", "--poly", "x0^3 + x0*x1^2", "--l", "x0"], "dim"),
    (["gamma", "--poly", "x0^3 + x0*x1^2", "--l", "x0"], "length"),
    (["cactus-bound", "--poly", "x0^3 + x1^3", "--extra-candidates", "1"], "bound"),
    (["report", "--poly", "x0^3 + x1^3", "--extra-candidates", "1"], "bracket"),
    (["ldiff", "--poly", "x0^3 + x1^3"], "ldiff"),
    (["nd-bound", "--n", "8", "--d", "3"], "nd"),
    (["generic-rank", "--n", "8", "--d", "3"], "value"),
    (["secant-dim", "--n", "2", "--d", "4", "--r", "5"], "defect"),
    (["decompose", "--poly", "x0^3 + x1^3", "--points", "x0, x1"], "success"),
    (["check-apolar", "--poly", "x0^3 + x1^3", "--ideal", "y0*y1"], "apolar"),
    (["empty", "--gens", "y0^2, y1^2", "--tmax", "4"], "certified"),
    (["remark2", "--poly", "x0^3 + x0*x1^2", "--l", "x0", "--e", "1"], "agreement_degree"),
    (["random", "--n", "2", "--d", "3", "--seed", "4"], "poly"),
])
def test_cli_subcommands(argv, key):
    doc = cli_json(*argv)
    assert key in doc["results"], doc["results"]


def test_cli_values():
    assert cli_json("nd-bound", "--n", "8", "--d", "3")["results"]["nd"] == 18
    assert cli_json("generic-rank", "--n", "8", "--d", "3")["results"]["value"] == 19
    assert cli_json("secant-dim", "--n", "2", "--d", "4", "--r", "5")["results"]["defect"] == 1
    assert cli_json("gamma", "--poly", "x0^3 + x0*x1^2 + x0*x2^2", "--l", "x0")["results"]["length"] == 4
    assert cli_json("empty", "--gens", "y0, y1")["results"]["degree"] == 1
    assert cli_json("check-apolar", "--poly", "x0^3", "--ideal", "y0")["results"]["apolar"] is False
    rnd = cli_json("random", "--n", "2", "--d", "3", "--seed", "4")["results"]["poly"]
    assert parse_poly(rnd, nvars=3) == random_form(2, 3, 4)


def test_cli_prime_field():
    doc = cli_json("hilbert", "--poly", "x0^3 + x1^3", "--field", "p:101")
    assert doc["field"] == "p:101" and doc["results"]["hilbert"] == [1, 2, 2, 1]


def test_cli_file_input(tmp_path):
    f = tmp_path / "forms.txt"
    f.write_text("# two forms\nx0^3 + x1^3\n\nx0*x1*x2  # a comment\n")
    doc = cli_json("hilbert", "--file", str(f))
    assert [r["result"]["hilbert"] for r in doc["results"]] == [[1, 2, 2, 1], [1, 3, 3, 1]]


def test_cli_text_output():
    code, text = cli("hilbert", "--poly", "x0^2*x1", "--text")
    assert code == 0 and "hilbert: 1, 2, 2, 1" in text


def test_cli_domain_errors_exit_1(capsys):
    assert cli("hilbert", "--poly", "x0 +")[0] == 1
    assert cli("hilbert", "--poly", "x0^2 + x1")[0] == 1
    assert cli("hilbert", "--poly", "x0^3", "--field", "p:3")[0] == 1
    assert cli("gamma", "--poly", "x0^3", "--l", "x0^2")[0] == 1
    assert cli("hilbert", "--file", "/nonexistent/file")[0] == 1
    assert cli("decompose", "--poly", "x0^3", "--points", "x0, 2*x0")[0] == 1
    assert "error:" in capsys.readouterr().err


def test_cli_usage_errors_exit_2():
    for argv in (["hilbert"], ["bogus"], ["hilbert", "--poly", "x0", "--field", "p:8"],
                 ["annih", "--poly", "x0^2"]):
        with pytest.raises(SystemExit) as exc:
            cli(*argv)
        assert exc.value.code == 2


def test_cli_verify_paper_runs(monkeypatch):
    from apolarity import cli as cli_mod
    from apolarity.verify import Check

    calls = []

    def fake(seed, n_max, out):
        calls.append((seed, n_max))
        out("[1] PASS  stub")
        return [Check("stub", "x", "x", True)]

    monkeypatch.setattr(cli_mod, "verify_paper", fake)
    code, text = cli("verify-paper", "--seed", "5", "--n-max", "3")
    assert code == 0 and calls == [(5, 3)] and "PASS" in text
