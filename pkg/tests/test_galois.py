#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

import pytest

from dgt import *


Q = TowerField()
x = Q.gen

F = TowerField(("s", "t2"))
X = F.gen
s = F.parameter("s")
t2 = F.parameter("t2")

BLOCK_S = ["X11-X22", "X12-s^2*X21", "X13", "X23", "X31", "X32"]
BLOCK_CHARS = ["X11-s*X21", "X11+s*X21", "X33"]


def _block_system():
    return DiffSystem(F, [[X, s ** 2 * X, 0], [X, X, 0], [0, 0, t2]])


def _block_group():
    return GroupData(3, BLOCK_S, BLOCK_S, BLOCK_CHARS, 1, F)


def test_laurent_polynomials():
    p = LaurentPoly("det - 1", 2, Q)
    assert str(p) == "X11*X22 - X12*X21 - 1"
    assert not p.uses_detinv
    assert not membership(RatMatrix.diag(Q, [1, 2]), [p])
    assert membership(RatMatrix.diag(Q, [2, Q.one / 2]), [p])

    q = LaurentPoly("X11*detinv", 2, Q)
    assert q.uses_detinv
    assert evaluate_laurent(q, RatMatrix.diag(Q, [x, 2])) == Q.one / 2
    with pytest.raises(SingularInput):
        evaluate_laurent(q, RatMatrix(Q, [[1, 1], [1, 1]]))
    with pytest.raises(AmbientMismatch):
        evaluate_laurent(q, RatMatrix.identity(Q, 3))
    with pytest.raises(AmbientMismatch):
        LaurentPoly("X11 + y", 2, Q)

    assert entry_names(2) == ["X11", "X12", "X21", "X22"]
    assert entry_names(10)[1] == "X1_2"


def test_det_names_in_group_strings():
    group = GroupData(2, ["det - 1"], ["det - 1"], [], 1, Q)
    assert membership(RatMatrix.identity(Q, 2), group.S)
    assert evaluate_laurent(LaurentPoly("det", 2, Q), RatMatrix.identity(Q, 2)) == 1
    assert evaluate_laurent(LaurentPoly("det*detinv", 2, Q), RatMatrix.diag(Q, [x, 3])) == 1

    p = LaurentPoly("s*det - X11", 2, F)
    assert evaluate_laurent(p, RatMatrix.diag(F, [X, 2])) == (2 * s - 1) * X


def test_characters_must_be_trivial_at_identity():
    with pytest.raises(AmbientMismatch):
        GroupData(2, [], ["X12", "X21"], ["2*X11"], 1, Q)
    with pytest.raises(AmbientMismatch):
        GroupData(2, [], [], [], 0, Q)


def test_block_system_characters():
    A = _block_system()
    group = _block_group()
    assert evaluate_laurent(group.characters[0], A) == X * (1 - s)
    assert evaluate_laurent(group.characters[1], A) == X * (1 + s)
    assert evaluate_laurent(group.characters[2], A) == t2


def test_block_system_group_is_the_galois_group():
    verdict = criterion_check(_block_group(), _block_system())
    assert verdict
    assert verdict.to_dict()["note"] == CONDITIONAL
    assert "failing_condition" not in verdict.to_dict()


def test_full_torus():
    torus = GroupData(2, ["X12", "X21"], ["X12", "X21"], ["X11", "X22"], 1, Q)
    verdict = criterion_check(torus, DiffSystem.diagonal_system(Q, [x, x]))
    assert not verdict
    assert verdict.condition == "b"
    assert verdict.relation == [1, -1]
    assert verify_relation([x, x], verdict.relation, verdict.witness, 1)
    failing = verdict.to_dict()["failing_condition"]
    assert failing["relation"] == [1, -1]

    assert criterion_check(torus, DiffSystem.diagonal_system(Q, [2, x]))


def test_connected_and_general_criterion_agree():
    torus = GroupData(2, ["X12", "X21"], ["X12", "X21"], ["X11", "X22"], 1, Q)
    for entries in ([x, x], [2, x], [x, x + 1], [-1, x * x]):
        system = DiffSystem.diagonal_system(Q, entries)
        assert bool(criterion_check(torus, system)) == bool(connected_criterion(torus.T, torus.characters, system))


def test_two_components():
    group = GroupData(1, ["X11^2-1"], ["X11-1"], [], 2, Q)
    assert criterion_check(group, DiffSystem(Q, [[-1]]))

    verdict = criterion_check(group, DiffSystem(Q, [[1]]))
    assert not verdict
    assert verdict.condition == "a"
    assert verdict.index == 1
    assert verdict.to_dict()["failing_condition"] == {"condition": "a", "index": 1}


def test_not_in_group():
    group = GroupData(1, ["X11^2-1"], ["X11-1"], [], 2, Q)
    with pytest.raises(NotInGroup):
        criterion_check(group, DiffSystem(Q, [[2]]))
    with pytest.raises(NotInGroup):
        connected_criterion([LaurentPoly("X12", 2, Q)], [], DiffSystem(Q, [[1, 1], [0, 1]]))


def test_diagonal_groups():
    group = galois_group_diagonal([Q.element(-1), x, x - 1])
    assert group.lattice == IntLattice(3, [[2, 0, 0], [0, 1, -1]])
    assert group.dimension == 1

    group = galois_group_diagonal([x, x + 1, Q.element(3)])
    assert group.lattice.basis_list() == [[1, -1, 0]]
    assert group.dimension == 2

    assert galois_group_diagonal([x * (x + 1)]).dimension == 1


def test_dimension_is_gauge_invariant():
    system = DiffSystem(Q, [[x, 1], [0, 2]])
    T = RatMatrix(Q, [[1, x], [0, 1]])
    assert system_dimension(system.gauge(T)) == system_dimension(system)
