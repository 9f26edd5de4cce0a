# -*- coding: utf-8 -*-
#
# Integer lattices in Z^m.  Bases are kept in row Hermite normal form:
# pivots strictly to the right going down, positive, with the entries above
# each pivot reduced into [0, pivot).

from __future__ import division

import logging

from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from .utils import AmbientMismatch

logger = logging.getLogger(__name__)

EQUAL = "equal"
SUBSET = "subset"          # L1 strictly inside L2
SUPERSET = "superset"      # L2 strictly inside L1
INCOMPARABLE = "incomparable"


def _as_int_rows(rows):
    return [[int(v) for v in row] for row in rows]


def hermite_rows(rows, ncols):
    """Row HNF of the integer matrix ``rows``, zero rows dropped."""
    m = _as_int_rows(rows)
    p = 0
    for col in range(ncols):
        if p >= len(m):
            break
        for i in range(p + 1, len(m)):
            b = m[i][col]
            if b == 0:
                continue
            a = m[p][col]
            if a == 0:
                m[p], m[i] = m[i], m[p]
                continue
            x, y, g = igcdex(a, b)
            ag, bg = a // g, b // g
            top = [x * u + y * v for u, v in zip(m[p], m[i])]
            bottom = [-bg * u + ag * v for u, v in zip(m[p], m[i])]
            m[p], m[i] = top, bottom
        pivot = m[p][col]
        if pivot == 0:
            continue
        if pivot < 0:
            m[p] = [-v for v in m[p]]
            pivot = -pivot
        for k in range(p):
            q = m[k][col] // pivot
            if q:
                m[k] = [u - q * v for u, v in zip(m[k], m[p])]
        p += 1
    return [row for row in m[:p] if any(row)]


class IntLattice(object):
    """Z-sublattice of Z^m with a canonical HNF basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, generators=()):
        self.ambient_dim = int(ambient_dim)
        generators = _as_int_rows(generators)
        for g in generators:
            if len(g) != self.ambient_dim:
                raise AmbientMismatch("vector %s is not in Z^%d" % (g, self.ambient_dim))
        self.basis = tuple(tuple(int(v) for v in row) for row in hermite_rows(generators, self.ambient_dim))

    @classmethod
    def zero(cls, m):
        return cls(m)

    @classmethod
    def full(cls, m):
        return cls(m, [[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @property
    def rank(self):
        return len(self.basis)

    @property
    def is_zero(self):
        return not self.basis

    @property
    def is_full(self):
        return self.rank == self.ambient_dim and all(self.basis[i][i] == 1 for i in range(self.rank))

    def basis_list(self):
        return [list(row) for row in self.basis]

    def __eq__(self, other):
        return isinstance(other, IntLattice) and \
            (self.ambient_dim, self.basis) == (other.ambient_dim, other.basis)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return "IntLattice(%d, %s)" % (self.ambient_dim, self.basis_list())

    def __contains__(self, vector):
        return self.member(vector)

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch("lattices in Z^%d and Z^%d" % (self.ambient_dim, other.ambient_dim))

    def member(self, vector):
        vector = [int(v) for v in vector]
        if len(vector) != self.ambient_dim:
            raise AmbientMismatch("vector %s is not in Z^%d" % (vector, self.ambient_dim))
        for row in self.basis:
            col = next(j for j, v in enumerate(row) if v)
            if any(vector[:col]):
                return False
            q, r = divmod(vector[col], row[col])
            if r:
                return False
            if q:
                vector = [u - q * v for u, v in zip(vector, row)]
        return not any(vector)

    def contains_lattice(self, other):
        self._check(other)
        return all(self.member(row) for row in other.basis)

    def compare(self, other):
        """Exact comparison: EQUAL, SUBSET (self < other), SUPERSET or INCOMPARABLE."""
        self._check(other)
        if self == other:
            return EQUAL
        if other.contains_lattice(self):
            return SUBSET
        if self.contains_lattice(other):
            return SUPERSET
        return INCOMPARABLE

    def __add__(self, other):
        self._check(other)
        return IntLattice(self.ambient_dim, self.basis_list() + other.basis_list())

    def intersect_kernel(self, matrix):
        """{v in L : matrix * v = 0}."""
        if not self.basis or not matrix:
            return self
        # E * B^T, one column per basis vector
        products = [[sum(e * b for e, b in zip(erow, brow)) for brow in self.basis] for erow in matrix]
        coefficients = kernel_lattice(products, self.rank)
        return IntLattice(self.ambient_dim, [self.combine(c) for c in coefficients.basis])

    def congruence_slice(self, weights, modulus=2):
        """{v in L : weights . v = 0 mod modulus}."""
        if not self.basis:
            return self
        residues = [sum(w * b for w, b in zip(weights, brow)) for brow in self.basis]
        solutions = kernel_lattice([residues + [modulus]], self.rank + 1)
        return IntLattice(self.ambient_dim, [self.combine(c[:-1]) for c in solutions.basis])

    def intersection(self, other):
        self._check(other)
        return _intersect_general(self, other)

    def combine(self, coefficients):
        return [sum(c * row[j] for c, row in zip(coefficients, self.basis)) for j in range(self.ambient_dim)]

    def orthogonal_rows(self):
        """Rows spanning {d : B d = 0}; the lattice's annihilator."""
        return kernel_lattice(self.basis_list(), self.ambient_dim).basis_list()

    def saturate(self):
        return saturate(self)

    def is_saturated(self):
        return self == saturate(self)

    def saturation_index(self):
        """[saturate(L) : L], the product of the invariant factors."""
        if not self.basis:
            return 1
        index = 1
        for d in invariant_factors(Matrix(self.basis_list())):
            if d:
                index *= abs(int(d))
        return index


def _intersect_general(first, second):
    # v = c.B1 = d.B2  <=>  (c, -d) in ker [B1^T | -B2^T]
    m = first.ambient_dim
    if first.is_zero or second.is_zero:
        return IntLattice.zero(m)
    columns = first.basis_list() + [[-v for v in row] for row in second.basis_list()]
    matrix = [[col[j] for col in columns] for j in range(m)]
    solutions = kernel_lattice(matrix, len(columns))
    return IntLattice(m, [first.combine(s[:first.rank]) for s in solutions.basis])


def kernel_lattice(matrix, ncols=None):
    """{d in Z^ncols : matrix * d = 0}."""
    matrix = _as_int_rows(matrix)
    if ncols is None:
        if not matrix:
            raise AmbientMismatch("cannot infer the width of an empty matrix")
        ncols = len(matrix[0])
    nrows = len(matrix)
    if nrows == 0:
        return IntLattice.full(ncols)
    # echelon of [M^T | I]: rows whose M^T part vanishes span the kernel
    augmented = [[matrix[i][j] for i in range(nrows)] + [1 if k == j else 0 for k in range(ncols)]
                 for j in range(ncols)]
    echelon = hermite_rows(augmented, nrows + ncols)
    kernel = [row[nrows:] for row in echelon if not any(row[:nrows])]
    return IntLattice(ncols, kernel)


def saturate(lattice):
    """{v : l v in L for some l > 0}."""
    return kernel_lattice(lattice.orthogonal_rows(), lattice.ambient_dim) if lattice.basis \
        else IntLattice.zero(lattice.ambient_dim)


def member(vector, lattice):
    return lattice.member(vector)


def compare(first, second):
    return first.compare(second)
