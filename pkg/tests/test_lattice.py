#!/usr/bin/env python
# -*- coding: utf-8 -*-
#

import itertools

import numpy as np
import pytest

from dgt import *


def _box(m, radius=2):
    return itertools.product(range(-radius, radius + 1), repeat=m)


def test_hermite_basis_is_canonical():
    assert IntLattice(3, [[2, 4, 6], [1, 2, 3]]) == IntLattice(3, [[1, 2, 3]])
    assert IntLattice(2, [[1, 1], [1, -1]]).basis_list() == [[1, 1], [0, 2]]
    assert IntLattice(2, [[0, 0]]).is_zero
    assert IntLattice.full(3).is_full
    # coprime pivots combine through the extended gcd
    assert IntLattice(2, [[6, 1], [10, 0]]).basis_list() == [[2, 2], [0, 5]]


def test_kernel_small_cases():
    assert kernel_lattice([[1, 1]]) == IntLattice(2, [[1, -1]])
    assert kernel_lattice([[2, 0]], 2) == IntLattice(2, [[0, 1]])
    assert kernel_lattice([], 3) == IntLattice.full(3)


def test_kernel_matches_brute_force():
    rng = np.random.default_rng(11)
    for _ in range(20):
        rows, cols = rng.integers(1, 3), rng.integers(1, 5)
        matrix = rng.integers(-3, 4, size=(rows, cols)).tolist()
        lattice = kernel_lattice(matrix, cols)
        for v in _box(cols):
            in_kernel = all(sum(a * b for a, b in zip(row, v)) == 0 for row in matrix)
            assert member(v, lattice) == in_kernel


def test_saturation():
    assert saturate(IntLattice(2, [[2, 0]])) == IntLattice(2, [[1, 0]])
    assert IntLattice(2, [[2, 0], [0, 3]]).saturation_index() == 6
    assert IntLattice(3, [[1, 1, 0]]).is_saturated()

    rng = np.random.default_rng(5)
    for _ in range(15):
        gens = rng.integers(-4, 5, size=(2, 3)).tolist()
        lattice = IntLattice(3, gens)
        sat = lattice.saturate()
        assert sat.contains_lattice(lattice)
        for v in _box(3):
            multiple_in = any(member([k * c for c in v], lattice) for k in range(1, 7))
            if multiple_in:
                assert member(v, sat)


def test_compare():
    a = IntLattice(2, [[2, 0]])
    b = IntLattice(2, [[1, 0]])
    assert compare(a, b) == SUBSET
    assert compare(b, a) == SUPERSET
    assert compare(a, IntLattice(2, [[-2, 0]])) == EQUAL
    assert compare(b, IntLattice(2, [[0, 1]])) == INCOMPARABLE
    with pytest.raises(AmbientMismatch):
        compare(a, IntLattice(3))


def test_intersection_and_slices():
    assert IntLattice(2, [[2, 0]]).intersection(IntLattice(2, [[3, 0]])) == IntLattice(2, [[6, 0]])
    assert IntLattice.full(2).congruence_slice([1, 0], 2) == IntLattice(2, [[2, 0], [0, 1]])
    assert IntLattice.full(2).intersect_kernel([[1, 1]]) == IntLattice(2, [[1, -1]])
    assert (IntLattice(2, [[2, 0]]) + IntLattice(2, [[3, 0]])) == IntLattice(2, [[1, 0]])


def test_membership():
    lattice = IntLattice(3, [[2, 0, 0], [0, 1, -1]])
    assert [4, 1, -1] in lattice
    assert [1, 0, 0] not in lattice
    with pytest.raises(AmbientMismatch):
        lattice.member([1, 2])
