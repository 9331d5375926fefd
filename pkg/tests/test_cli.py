"""Command-line interface behaviour and output formats."""

import json

import pytest

from nsmacdonald.cli import main
from nsmacdonald.xpoly import XPolynomial, reverse_alphabet
from nsmacdonald.fillings import f_hhl
from nsmacdonald.compositions import Composition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_both_routes_agree(capsys):
    code, out, _err = run(capsys, "compute", "--mu", "1,0", "--method", "both", "--output", "text")
    assert code == 0
    assert out.splitlines() == ["x1", "routes agree"]


def test_compute_latex(capsys):
    code, out, _err = run(capsys, "compute", "--mu", "0,1", "--method", "hhl", "--output", "latex")
    assert code == 0
    assert out.strip() == f_hhl(Composition((0, 1))).to_latex()
    assert "\\frac" in out and "x_{1}" in out and "x_{2}" in out


def test_verify_eigen_exit_zero(capsys):
    code, _out, err = run(capsys, "verify", "--check", "eigen", "--mu", "0,1")
    assert code == 0
    assert "PASS" in err


def test_verify_positional_check(capsys):
    code, _out, err = run(capsys, "verify", "frozen", "--mu", "2,0")
    assert code == 0
    assert "PASS" in err


def test_json_round_trip(capsys):
    code, out, _err = run(capsys, "compute", "--mu", "0,1", "--method", "hhl", "--output", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["mu"] == [0, 1]
    poly = XPolynomial.from_json(payload["poly"])
    assert poly == f_hhl(Composition((0, 1)))
    assert poly.to_json() == payload["poly"]


def test_convention_E(capsys):
    code, out, _err = run(
        capsys, "compute", "--mu", "1,0", "--method", "hhl", "--convention", "E", "--output", "json"
    )
    assert code == 0
    poly = XPolynomial.from_json(json.loads(out)["poly"])
    assert poly == reverse_alphabet(f_hhl(Composition((0, 1))))


def test_expand_lists_monomials(capsys):
    code, out, _err = run(capsys, "expand", "--mu", "0,1")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    # ascending graded lex: the x_2 monomial (exponents [0,1]) prints first
    assert lines[0].startswith("x^[0, 1]")
    assert lines[1].startswith("x^[1, 0]")


def test_malformed_composition_is_usage_error(capsys):
    code, _out, err = run(capsys, "compute", "--mu", "1,zebra")
    assert code == 2
    assert "malformed" in err


def test_bad_rho_is_usage_error(capsys):
    code, _out, err = run(capsys, "compute", "--mu", "0,1", "--rho", "1,1", "--method", "matrix")
    assert code == 2
    assert "permutation" in err


def test_missing_mu_is_usage_error(capsys):
    code, _out, _err = run(capsys, "compute")
    assert code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_rho_compute(capsys):
    code, out, _err = run(
        capsys, "compute", "--mu", "0,1", "--rho", "2,1", "--method", "matrix", "--output", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert XPolynomial.from_json(payload["poly"]).nvars == 2


def test_verify_cyclic_with_colour(capsys):
    code, _out, err = run(capsys, "verify", "cyclic", "--mu", "0,1", "--i", "2")
    assert code == 0
    assert "PASS" in err


def test_seed_reproducibility(capsys):
    code1, _out, err1 = run(capsys, "verify", "hecke", "--n", "2", "--seed", "9", "--samples", "2")
    code2, _out2, err2 = run(capsys, "verify", "hecke", "--n", "2", "--seed", "9", "--samples", "2")
    assert code1 == code2 == 0
    assert err1 == err2
