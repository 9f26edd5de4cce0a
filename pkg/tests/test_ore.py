#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

import pytest

from dgt import *
from dgt.context import ExecutionContext


Q = TowerField()
x = Q.gen


def test_operator_normalises_denominators():
    L = DiffOperator(Q, [-(x + 1) / x, 1])
    assert L == DiffOperator(Q, [-(x + 1), x])
    assert str(DiffOperator(Q, [6, -5, 1])) == "s^2 - 5*s + 6"
    with pytest.raises(SingularInput):
        DiffOperator(Q, [0, 1])
    with pytest.raises(AmbientMismatch):
        DiffOperator(Q, [1])


def test_apply():
    L = DiffOperator(Q, [-(x + 1), x])
    assert L.apply(x) == 0
    assert L.apply(Q.one) == -1


def test_hyper_first_order():
    result = hyper_certificates(DiffOperator(Q, [-(x + 1), 1]))
    assert [c.rate for c in result.certificates] == [x + 1]
    assert not result.extension_classes


def test_hyper_constant_coefficients():
    L = DiffOperator(Q, [6, -5, 1])
    result = hyper_certificates(L)
    assert [str(c) for c in result.certificates] == ["2", "3"]
    for c in result.certificates:
        assert verify_certificate(L, c)
    assert verify_certificate(L, Q.element(2))
    assert not verify_certificate(L, Q.element(5))


def test_hyper_algebraic():
    L = DiffOperator(Q, [-1, -1, 1])
    without = hyper_certificates(L, allow_algebraic=False)
    assert without.certificates == []
    assert len(without.extension_classes) == 1
    assert str(without.extension_classes[0].factor.as_expr()).replace("**", "^") == "y^2 - y - 1"

    with ExecutionContext(allow_algebraic=True):
        result = hyper_certificates(L)
    assert len(result.certificates) == 2
    for c in result.certificates:
        assert c.is_algebraic
        assert c.minimal_polynomial == "y^2 - y - 1"
        assert verify_certificate(L, c)
    assert result.certificates[0] != result.certificates[1]


def test_hyper_over_tower():
    Qt = TowerField(("t", ))
    t = Qt.parameter("t")
    result = hyper_certificates(DiffOperator(Qt, [-t, 1]))
    assert [c.rate for c in result.certificates] == [t]


def test_polynomial_solutions():
    L = DiffOperator(Q, [-(x + 1), x])
    assert polynomial_solutions(L) == [x]

    L = DiffOperator(Q, [1, -2, 1])
    solutions = polynomial_solutions(L)
    assert len(solutions) == 2
    assert sorted(s.degree for s in solutions) == [0, 1]
    assert all(L.apply(s).is_zero for s in solutions)


def test_indicial_bounds_polynomial_degree():
    for L in (DiffOperator(Q, [-(x + 1), x]), DiffOperator(Q, [1, -2, 1])):
        data = sigma_bar_form(L)
        bound = max(data.integer_roots + [0])
        assert bound >= 1
        assert indicial_polynomial(L) == data.indicial
        # nothing new at a larger ansatz degree
        assert len(polynomial_solutions(L, bound + 2)) == len(polynomial_solutions(L))


def test_sigma_bar_round_trip():
    L = DiffOperator(Q, [-(x + 1), x])
    data = sigma_bar_form(L)
    expanded = expand_sigma_bar(Q, data.sigma_bar_coeffs)
    assert expanded == [c * data.multiplier for c in L.coefficients]


def test_hyper_bound():
    assert hyper_bound(DiffOperator(Q, [-(x + 1), 1])) >= 1
    assert hyper_bound(DiffOperator(Q, [6, -5, 1])) >= 0


def test_coefficient_bound():
    bound = coefficient_bound(DiffSystem(Q, [[x]]), 1)
    assert int(bound) == 8
    assert bound.size == 2

    with ExecutionContext(companion_limit=1):
        with pytest.raises(TooLarge) as e:
            coefficient_bound(DiffSystem.diagonal_system(Q, [2, x]), 1)
    assert e.value.l == 1


def test_coefficient_bound_of_diagonal_system():
    bound = coefficient_bound(DiffSystem.diagonal_system(Q, [2, x]), 1)
    assert bound.size == 5
    assert bound.mu == 10
    assert [s.l for s in bound.steps] == [1, 2, 3, 4, 5]
    assert all(set(s.blocks) == {1} for s in bound.steps)
    assert int(bound) >= 0


def _block_forms(system, bound):
    sym = sym_power(system, 1)
    for step in bound.steps:
        M = minor_map(sym, step.l).inverse().transpose()
        blocks = block_decomposition(M)
        assert [len(b) for b in blocks] == list(step.blocks)
        forms = []
        for indices, vector in zip(blocks, step.vectors):
            block = DiffSystem(Q, M.submatrix(indices, indices))
            forms.append(companion_form(block, vector=[Q.element(v) for v in vector]))
        yield step, forms


def test_coefficient_bound_is_the_max_over_blocks():
    for system in (DiffSystem(Q, [[x]]), DiffSystem.diagonal_system(Q, [2, x])):
        bound = coefficient_bound(system, 1)
        for step, forms in _block_forms(system, bound):
            assert step.t == max(f.transform.inverse().max_degree() for f in forms)
            assert step.N == max(hyper_bound(f.operator) for f in forms)
        size, mu = bound.size, bound.mu
        assert int(bound) == max(2 * size * mu * s.t + 2 * size * mu * (mu - 1) * s.N for s in bound.steps)


def test_certificates_within_hyper_bound():
    operators = [
        DiffOperator(Q, [-(x + 1), 1]),
        DiffOperator(Q, [-(x + 1), x]),
        DiffOperator(Q, [-2 * (x + 3), x - 1]),
        DiffOperator(Q, [6, -5, 1]),
        companion_form(DiffSystem.diagonal_system(Q, [x, 2 * x]), vector=[1, 1]).operator,
    ]
    for system in (DiffSystem(Q, [[x]]), DiffSystem.diagonal_system(Q, [2, x])):
        for _, forms in _block_forms(system, coefficient_bound(system, 1)):
            operators.extend(f.operator for f in forms)

    found = 0
    for L in operators:
        bound = hyper_bound(L)
        for c in hyper_certificates(L).certificates:
            assert c.degree <= bound
            found += 1
    assert found >= len(operators)

    L = DiffOperator(Q, [-1, -1, 1])
    with ExecutionContext(allow_algebraic=True):
        certificates = hyper_certificates(L).certificates
    assert certificates
    assert all(c.degree <= hyper_bound(L) for c in certificates)


def test_relation_space_grows_evenly_past_the_bound():
    for system, expected in ((DiffSystem(Q, [[1]]), [1, 2, 3]),
                             (DiffSystem.diagonal_system(Q, [1, 2]), [3, 6, 9])):
        N = int(coefficient_bound(system, 1))
        assert N == 0
        dims = [relation_space_dimension(system, 1, m) for m in range(N, N + 3)]
        assert dims == expected
        assert dims[2] - dims[1] == dims[1] - dims[0]

    system = DiffSystem(Q, [[x]])
    assert [relation_space_dimension(system, 1, m) for m in range(3)] == [0, 0, 0]
