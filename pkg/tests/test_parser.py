#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

import json

import pytest
from sympy import Rational, Symbol

from dgt import *
from dgt.parser import load_system, parse, parse_laurent, tokenize


Q = TowerField()
x = Q.gen

SHIFT_SYSTEM = {
    "parameters": ["t"],
    "matrix": [["t", 0, 0], [0, "x", 0], [0, 0, "x + t"]],
    "gammas": [{"kind": "additive", "generators": ["t", "1"]}],
}


def test_parse_expressions():
    X = Symbol("x")
    assert parse("2^-1", ["x"]) == Rational(1, 2)
    assert parse("-x^2 + 3*x", ["x"]) == -X ** 2 + 3 * X
    assert parse("(x + 1) / 2", ["x"]) == (X + 1) / 2
    assert parse_expr("(x+1)/(x-1)", Q) == (x + 1) / (x - 1)
    assert [tok.kind for tok in tokenize("x^2")] == ["name", "op", "integer", "eof"]


def test_parse_errors():
    with pytest.raises(ParseError) as e:
        parse("x++1", ["x"])
    assert e.value.offset == 2
    assert (e.value.line, e.value.column) == (1, 3)

    with pytest.raises(UnknownIdentifier) as e:
        parse("x + y", ["x"])
    assert e.value.offset == 4

    with pytest.raises(ParseError):
        parse("x $ 1", ["x"])
    with pytest.raises(ParseError):
        parse("(x + 1", ["x"])
    with pytest.raises(ParseError):
        parse("", ["x"])
    with pytest.raises(ParseError):
        parse("x^y", ["x", "y"])


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        parse("x/(x - x)", ["x"])
    with pytest.raises(DivisionByZero):
        parse("0^-1", ["x"])


def test_parse_operator():
    assert parse_operator("s^2 - 5*s + 6", Q) == DiffOperator(Q, [6, -5, 1])
    assert parse_operator("x*s - x - 1", Q) == DiffOperator(Q, [-(x + 1), x])

    with pytest.raises(ParseError):
        parse_operator("1/s + 1", Q)
    with pytest.raises(AmbientMismatch):
        parse_operator("s - 1", TowerField(("s", )))


def test_parse_laurent():
    p = parse_laurent("det - 1", 2, Q)
    assert membership(RatMatrix.diag(Q, [2, Q.one / 2]), [p])
    assert parse_laurent("X11*detinv", 2, Q).uses_detinv
    with pytest.raises(UnknownIdentifier):
        parse_laurent("X13", 2, Q)


def test_system_file():
    loaded = SystemFile.from_dict(SHIFT_SYSTEM)
    t = loaded.field.parameter("t")
    X = loaded.field.gen
    assert loaded.system == DiffSystem.diagonal_system(loaded.field, [t, X, X + t])
    assert loaded.group is None
    assert len(loaded.gammas) == 1
    assert loaded.gammas[0].kind == ADDITIVE

    with pytest.raises(ParseError) as e:
        SystemFile.from_dict({"matrix": [["x++1"]]})
    assert e.value.message.startswith("matrix[0][0]")
    with pytest.raises(AmbientMismatch):
        SystemFile.from_dict({"parameters": ["t"]})
    with pytest.raises(AmbientMismatch):
        SystemFile.from_dict({"matrix": [["x"]], "gammas": [{"kind": "cyclic", "generators": ["2"]}]})


def test_system_file_with_group():
    data = {
        "parameters": ["s", "t2"],
        "matrix": [["x", "s^2*x", 0], ["x", "x", 0], [0, 0, "t2"]],
        "group": {
            "S": ["X11-X22", "X12-s^2*X21", "X13", "X23", "X31", "X32"],
            "characters": ["X11-s*X21", "X11+s*X21", "X33"],
        },
    }
    loaded = load_system(data)
    assert loaded.group.components == 1
    assert [str(p) for p in loaded.group.T] == [str(p) for p in loaded.group.S]
    assert criterion_check(loaded.group, loaded.system)


def test_load_from_disk(tmp_path):
    path = tmp_path / "shift.json"
    path.write_text(json.dumps(SHIFT_SYSTEM))
    loaded = SystemFile.load(str(path))
    assert loaded.source == str(path)
    assert loaded.system.is_diagonal

    broken = tmp_path / "broken.json"
    broken.write_text("{")
    with pytest.raises(ParseError):
        load_system(str(broken))

    with pytest.raises(ParseError) as e:
        load_system(str(tmp_path / "missing.json"))
    assert "cannot read" in e.value.message
