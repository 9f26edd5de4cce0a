#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

import numpy as np
import pytest
from sympy import Poly, Rational, Symbol

from dgt import *


Q = TowerField()
x = Q.gen

Qt = TowerField(("t", ))
X = Qt.gen
t = Qt.parameter("t")


def test_arithmetic_is_exact():
    f = (x + 1) / (x - 1)
    assert f * (x - 1) == x + 1
    assert f - 1 == 2 / (x - 1)
    assert (x ** 2).shift(1) == x ** 2 + 2 * x + 1
    assert f.shift(-1) == x / (x - 2)
    assert str(x ** 2 + 1) == "x^2 + 1"


def test_predicates():
    assert (x ** 3 - 2).is_polynomial
    assert not (1 / x).is_polynomial
    assert Q.element(Rational(3, 4)).is_rational_number
    assert t.is_constant and not t.is_rational_number
    assert (x ** 2 / (x + 1)).degree == 2
    assert (X * t - 1).coefficients() == [Qt.element(-1), t]
    assert Qt.constant("t") == t
    with pytest.raises(AmbientMismatch):
        Qt.constant(X + t)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        x / Q.zero
    with pytest.raises(DivisionByZero):
        Q.zero ** -1
    with pytest.raises(DivisionByZero):
        normalize_ratfunc(x, 0, Q)


def test_field_mismatch():
    with pytest.raises(AmbientMismatch):
        x + X
    with pytest.raises(AmbientMismatch):
        Q.element(Symbol("t"))
    with pytest.raises(AmbientMismatch):
        TowerField(("t", "t"))


def test_evaluate_and_specialize():
    assert (x ** 2 + 1).evaluate_at(2) == 5
    with pytest.raises(DivisionByZero):
        (1 / x).evaluate_at(0)

    f = (X + t) / (t - 1)
    assert f.specialize({"t": 3}, Q) == (x + 3) / 2
    with pytest.raises(NotWellDefined) as e:
        (1 / (t - 1)).specialize({"t": 1}, Q)
    assert e.value.parameter == "t"


def test_factorization_over_q():
    unit, factors = factor_poly(2 * x ** 3 - 2 * x)
    assert unit == 2
    assert set(str(f) for f, _ in factors) == {"x", "x - 1", "x + 1"}
    assert all(e == 1 for _, e in factors)


def test_factorization_over_tower():
    unit, factors = factor_poly((X - t) ** 2 * (X ** 2 + t))
    assert unit == 1
    assert sorted((f.degree, e) for f, e in factors) == [(1, 2), (2, 1)]


def test_roots():
    f = x * (x - 3) * (2 * x - 1) * (x ** 2 + 1)
    assert integer_roots(f) == [0, 3]
    assert rational_roots(f) == [0, Rational(1, 2), 3]
    assert integer_roots((X - t) * (X - 2)) == [2]
    with pytest.raises(UnsupportedConstantField):
        rational_roots((X - t) * (X - 2))


def test_number_field():
    y = Symbol("y")
    K = NumberField(Poly(y ** 2 - 2, y))
    g = K.gen
    assert g * g == 2
    assert (g + 1) * (g + 1).inverse() == 1
    assert (g + 1) ** -1 == g - 1
    assert (3 * g + 1).coordinates() == [1, 3]
    assert len(K.roots()) == 2

    with pytest.raises(NotIrreducible):
        NumberField(Poly(y ** 2 - 1, y))


def _random_poly(rng, field, degree, low=-5, high=6):
    coeffs = [int(c) for c in rng.integers(low, high, size=degree + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = 1
    return sum((c * field.gen ** i for i, c in enumerate(coeffs)), field.zero)


def _random_ratfunc(rng, field):
    num = _random_poly(rng, field, int(rng.integers(0, 3)))
    den = _random_poly(rng, field, int(rng.integers(0, 3)), 1, 4)
    return num / den


def test_factorization_reproduces_input():
    rng = np.random.default_rng(3)
    for _ in range(20):
        f = _random_poly(rng, Q, int(rng.integers(1, 6)))
        if f.is_constant:
            continue
        unit, factors = factor_poly(f)
        product = unit
        for factor, e in factors:
            assert factor.leading_coefficient() == 1
            product = product * factor ** e
        assert product == f

    for _ in range(5):
        c = int(rng.integers(1, 4))
        f = (X - c * t) * (X ** 2 + int(rng.integers(1, 4)) * t)
        unit, factors = factor_poly(f)
        product = unit
        for factor, e in factors:
            product = product * factor ** e
        assert product == f


def test_field_axioms():
    rng = np.random.default_rng(5)
    for _ in range(100):
        a, b, c = [_random_ratfunc(rng, Q) for _ in range(3)]
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == Q.zero
        if not a.is_zero:
            assert a * a.inverse() == Q.one
            assert (a / a) == Q.one


def test_normalize_is_idempotent():
    rng = np.random.default_rng(7)
    for _ in range(30):
        num = _random_poly(rng, Q, int(rng.integers(0, 4)))
        den = _random_poly(rng, Q, int(rng.integers(0, 4)), -3, 4)
        if den.is_zero:
            continue
        r = normalize_ratfunc(num, den, Q)
        again = normalize_ratfunc(Q.from_poly(r.num), Q.from_poly(r.den), Q)
        assert again == r
        assert (again.num, again.den) == (r.num, r.den)
        assert r.den.LC() == 1
        assert r.num.gcd(r.den).degree() == 0


def test_integer_roots_are_rational_roots():
    rng = np.random.default_rng(11)
    for _ in range(20):
        f = Q.one
        for _ in range(int(rng.integers(1, 5))):
            p, q = int(rng.integers(-6, 7)), int(rng.choice([1, 1, 2, 3]))
            f = f * (q * x - p)
        f = f * (x ** 2 + int(rng.integers(1, 5)))
        ints = integer_roots(f)
        rats = rational_roots(f)
        assert set(ints) <= set(rats)
        assert all(r.q == 1 for r in rats if r in ints)
        assert set(ints) == set(int(r) for r in rats if r.q == 1)


def test_polynomials_over_number_field():
    from dgt.field import AlgPoly

    y = Symbol("y")
    K = NumberField(Poly(y ** 2 - 2, y))
    g = K.gen
    p = AlgPoly(K, [g, 1])
    assert p.degree == 1
    assert p * p == AlgPoly(K, [2, 2 * g, 1])
    assert p.shift(1) == AlgPoly(K, [g + 1, 1])
    assert (p * p).coeffs == (K.element(2), 2 * g, K.one)
    assert (p - p).is_zero and (p - p).degree == float("-inf")
    assert AlgPoly.from_poly(K, Poly(x.as_expr() ** 2 - 1, x.as_expr())) * g == AlgPoly(K, [-g, 0, g])
    assert (p * (p - 2 * g)).coeffs[0] == -2
