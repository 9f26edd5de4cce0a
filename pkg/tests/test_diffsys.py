#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

from math import comb

import numpy as np
import pytest

from dgt import *


Q = TowerField()
x = Q.gen


def _random_matrix(rng, n, with_x=True):
    while True:
        rows = [[Q.element(int(c)) for c in rng.integers(-3, 4, size=n)] for _ in range(n)]
        if with_x:
            i, j = rng.integers(0, n, size=2)
            rows[i][j] = rows[i][j] + x
        M = RatMatrix(Q, rows)
        if not M.det.is_zero:
            return M


def test_system_requires_invertible_matrix():
    with pytest.raises(SingularInput):
        DiffSystem(Q, [[x, x], [1, 1]])
    with pytest.raises(AmbientMismatch):
        DiffSystem(Q, [[x, 1]])


def test_iterates_and_gauge():
    A = DiffSystem(Q, [[x, 1], [0, 2]])
    assert iterate_system(A, 1) == A.A
    assert iterate_system(A, 2) == A.A.shift(1) * A.A
    T = RatMatrix(Q, [[1, x], [0, 1]])
    B = A.gauge(T)
    assert B.A == T.shift(1) * A.A * T.inverse()


def test_dimension():
    assert system_dimension(DiffSystem.diagonal_system(Q, [x, x])) == 1
    assert system_dimension(DiffSystem.diagonal_system(Q, [x, 2 * x])) == 2
    assert DiffSystem.diagonal_system(Q, [1, 1]).dimension == 1


def test_monomial_basis():
    basis = MonomialBasis(2, 1)
    assert basis.names() == ["1", "X11", "X12", "X21", "X22"]
    assert len(MonomialBasis(2, 2)) == comb(6, 2)
    assert MonomialBasis(2, 2).names()[5] == "X11^2"


def test_sym_power_is_multiplicative():
    rng = np.random.default_rng(3)
    for _ in range(20):
        A, B = _random_matrix(rng, 2), _random_matrix(rng, 2, with_x=False)
        assert sym_power(A * B, 2) == sym_power(A, 2) * sym_power(B, 2)


def test_sym_power_of_diagonal():
    # entries of A Y are 2 Y11, 2 Y12, x Y21, x Y22
    assert sym_power(RatMatrix.diag(Q, [2, x]), 1) == RatMatrix.diag(Q, [1, 2, 2, x, x])
    assert sym_power(RatMatrix.diag(Q, [2, x]), 2).diagonal()[5] == 4


def test_minor_map_cauchy_binet():
    rng = np.random.default_rng(7)
    for _ in range(20):
        A, B = _random_matrix(rng, 3), _random_matrix(rng, 3, with_x=False)
        assert minor_map(A * B, 2) == minor_map(A, 2) * minor_map(B, 2)


def test_minor_map_of_diagonal():
    a, b, c = x, x + 1, Q.element(3)
    assert minor_index_order(3, 2) == ((0, 1), (0, 2), (1, 2))
    assert minor_map(RatMatrix.diag(Q, [a, b, c]), 2) == RatMatrix.diag(Q, [a * b, a * c, b * c])
    assert minor_map(RatMatrix.diag(Q, [a, b, c]), 3) == RatMatrix(Q, [[a * b * c]])
    with pytest.raises(AmbientMismatch):
        minor_map(RatMatrix.diag(Q, [a, b, c]), 4)


def test_companion_form():
    system = DiffSystem.diagonal_system(Q, [2, 3])
    form = companion_form(system, vector=[1, 1])
    assert form.operator == DiffOperator(Q, [6, -5, 1])
    assert [str(v) for v in form.vector] == ["1", "1"]
    gauge = system.gauge(form.transform)
    assert gauge.A == companion_matrix(form.operator)
    assert [str(c) for c in hyper_certificates(form.operator).certificates] == ["2", "3"]


def test_companion_form_search():
    system = DiffSystem(Q, [[x, 1], [0, x + 1]])
    form = companion_form(system)
    assert not form.transform.det.is_zero
    assert system.gauge(form.transform).A == companion_matrix(form.operator)

    with pytest.raises(CyclicVectorNotFound):
        companion_form(DiffSystem.diagonal_system(Q, [2, 2]), vector=[1, 1])


def test_block_decomposition():
    M = RatMatrix(Q, [[1, x, 0], [0, 1, 0], [0, 0, 1]])
    assert block_decomposition(M) == [[0, 1], [2]]
    assert block_decomposition(RatMatrix.identity(Q, 2)) == [[0], [1]]


def test_relation_space_grows_with_m():
    system = DiffSystem(Q, [[x]])
    dims = [relation_space_dimension(system, 1, m) for m in range(3)]
    assert dims[0] == 0
    assert dims == sorted(dims)
    assert build_L_nu_m(system, 1, 2).n == 6


def test_relation_space_small_cases():
    assert relation_space_dimension(DiffSystem(Q, [[1]]), 1, 0) == 1
    L = build_L_nu_m(DiffSystem(Q, [[x]]), 1, 1)
    assert L.A == RatMatrix.diag(Q, [1, x, (x + 1) / x, x + 1])


def test_iterates_compose():
    rng = np.random.default_rng(13)
    for _ in range(5):
        A = DiffSystem(Q, _random_matrix(rng, 2))
        for i in range(1, 3):
            for j in range(1, 3):
                assert iterate_system(A, i + j) == iterate_system(A, i).shift(j) * iterate_system(A, j)


def test_dimension_matches_companion_order():
    for entries in ([2, 3], [x, 2 * x], [x, x + 1]):
        system = DiffSystem.diagonal_system(Q, entries)
        form = companion_form(system, vector=[1, 1])
        assert system_dimension(system) == form.operator.order == 2

    form = companion_form(DiffSystem.diagonal_system(Q, [2, 3]), vector=[1, 1])
    assert system_dimension(DiffSystem(Q, companion_matrix(form.operator))) == 2
