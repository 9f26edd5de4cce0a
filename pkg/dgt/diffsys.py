# -*- coding: utf-8 -*-
#
# Difference systems sigma(Y) = A Y over a TowerField(x).

import itertools
import logging
from collections import namedtuple
from math import comb

from cached_property import cached_property

from .context import ExecutionContext
from .field import RatFunc
from .linalg import IncrementalEchelon, RatMatrix, as_sparse_vector
from .utils import AmbientMismatch, CyclicVectorNotFound, SingularInput, lru_cache

logger = logging.getLogger(__name__)

CompanionForm = namedtuple("CompanionForm", ["transform", "operator", "vector"])


class DiffSystem(object):
    """sigma(Y) = A Y with A invertible over field(x)."""

    def __init__(self, field, matrix):
        if not isinstance(matrix, RatMatrix):
            matrix = RatMatrix(field, matrix)
        if not matrix.is_square:
            raise AmbientMismatch("system matrix must be square, got %dx%d" % matrix.shape)
        if matrix.det.is_zero:
            raise SingularInput("system matrix is not invertible: %s" % matrix.to_strings())
        self.field = field
        self.A = matrix

    @classmethod
    def diagonal_system(cls, field, entries):
        return cls(field, RatMatrix.diag(field, entries))

    @property
    def n(self):
        return self.A.nrows

    def __eq__(self, other):
        return isinstance(other, DiffSystem) and self.A == other.A

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.A)

    def __repr__(self):
        return "DiffSystem(%s)" % self.A.to_strings()

    @property
    def is_diagonal(self):
        return self.A.is_diagonal

    def diagonal(self):
        if not self.is_diagonal:
            raise AmbientMismatch("system is not diagonal")
        return self.A.diagonal()

    def shift(self, k=1):
        return DiffSystem(self.field, self.A.shift(k))

    def gauge(self, transform):
        """The equivalent system sigma(T) A T^-1 for Z = T Y."""
        if not isinstance(transform, RatMatrix):
            transform = RatMatrix(self.field, transform)
        return DiffSystem(self.field, transform.shift(1) * self.A * transform.inverse())

    def iterate(self, i):
        return iterate_system(self, i)

    @cached_property
    def dimension(self):
        return system_dimension(self)


def iterate_system(system, i):
    """A_i = sigma^(i-1)(A) ... sigma(A) A."""
    if i < 1:
        raise AmbientMismatch("iterates start at i=1, got %d" % i)
    result = system.A
    for _ in range(i - 1):
        result = result.shift(1) * system.A
    return result


class MonomialBasis(object):
    """Monomials of degree <= nu in the n^2 entries X11, X12, ..., Xnn.

    Graded lexicographic: increasing total degree, and within one degree
    X11 > X12 > ... > Xnn.
    """

    def __init__(self, n, nu):
        self.n = n
        self.nu = nu
        self.exponents = _monomial_exponents(n, nu)

    def __len__(self):
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def index(self, exponent):
        return self._positions[exponent]

    @cached_property
    def _positions(self):
        return dict((e, i) for i, e in enumerate(self.exponents))

    def names(self):
        variables = ["X%d%d" % (i + 1, j + 1) for i in range(self.n) for j in range(self.n)]
        result = []
        for exponent in self.exponents:
            parts = []
            for name, e in zip(variables, exponent):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append("%s^%d" % (name, e))
            result.append("*".join(parts) or "1")
        return result


@lru_cache(maxsize=64)
def _monomial_exponents(n, nu):
    size = n * n
    result = []
    for degree in range(nu + 1):
        level = [e for e in itertools.product(range(degree + 1), repeat=size) if sum(e) == degree]
        level.sort(reverse=True)
        result.extend(level)
    if len(result) != comb(size + nu, nu):
        raise AssertionError("monomial count mismatch")
    return tuple(result)


def _linear_forms(A):
    # entry (i, j) of A Y as {index of Y_kj: A_ik}
    n = A.nrows
    forms = []
    for i in range(n):
        for j in range(n):
            forms.append(dict((k * n + j, A.rows[i][k].value) for k in range(n) if not A.rows[i][k].is_zero))
    return forms


def _multiply(poly, form):
    result = {}
    for exponent, c in poly.items():
        for var, a in form.items():
            e = list(exponent)
            e[var] += 1
            e = tuple(e)
            value = result.get(e, 0) + c * a
            if value:
                result[e] = value
            else:
                result.pop(e, None)
    return result


def sym_power(system, nu):
    """Sym_nu(A): monomials of A Y expressed in the monomials of Y."""
    A = system.A if isinstance(system, DiffSystem) else system
    if nu < 1:
        raise AmbientMismatch("nu must be >= 1, got %d" % nu)
    field = A.field
    K = field.function_field
    basis = MonomialBasis(A.nrows, nu)
    forms = _linear_forms(A)
    size = len(basis)
    rows = []
    for exponent in basis:
        poly = {tuple([0] * len(exponent)): K.one}
        for var, e in enumerate(exponent):
            for _ in range(e):
                poly = _multiply(poly, forms[var])
        row = [field.zero] * size
        for mono, c in poly.items():
            row[basis.index(mono)] = RatFunc(field, c)
        rows.append(row)
    return RatMatrix(field, rows)


@lru_cache(maxsize=64)
def minor_index_order(n, l):
    """Index sets of size l ordered by their minimum, then recursively the rest."""
    return tuple(itertools.combinations(range(n), l))


def minor_map(Z, l):
    """Phi_{n,l}(Z): all l x l minors of Z in minor_index_order."""
    Z = Z.A if isinstance(Z, DiffSystem) else Z
    n = Z.nrows
    if not 1 <= l <= n:
        raise AmbientMismatch("minor size %d outside 1..%d" % (l, n))
    if Z.det.is_zero:
        raise SingularInput("minor map of a singular matrix")
    order = minor_index_order(n, l)
    if Z.is_diagonal:
        diagonal = Z.diagonal()
        rows = []
        for I in order:
            row = []
            for J in order:
                if I != J:
                    row.append(Z.field.zero)
                    continue
                value = Z.field.one
                for i in I:
                    value = value * diagonal[i]
                row.append(value)
            rows.append(row)
        return RatMatrix(Z.field, rows)
    return RatMatrix(Z.field, [[Z.submatrix(I, J).det for J in order] for I in order])


def system_dimension(system):
    """dim([A]): rank over field(x) of vec(A_0 = I), vec(A_1), ..., vec(A_{n^2}).

    Stops at the first iterate in the span of the earlier ones; every later
    iterate stays in that span.
    """
    field = system.field
    echelon = IncrementalEchelon(field)
    current = RatMatrix.identity(field, system.n)
    for i in range(system.n * system.n + 1):
        if not echelon.add(as_sparse_vector(current)):
            logger.debug("iterate A_%d is dependent, dim = %d", i, echelon.rank)
            break
        current = current.shift(1) * system.A if i else system.A
    return echelon.rank


def _candidate_vectors(field, n):
    yield [field.one] + [field.zero] * (n - 1)
    x = field.gen
    yield [x ** k for k in range(n)]
    rng = ExecutionContext.get_rng()
    for _ in range(ExecutionContext.get_cyclic_retries()):
        yield [field.element(int(c)) for c in rng.integers(-5, 6, size=n)]


def _krylov_rows(system, vector):
    rows = [list(vector)]
    for _ in range(system.n):
        rows.append(list((RatMatrix(system.field, [rows[-1]]).shift(1) * system.A).rows[0]))
    return rows


def companion_form(system, vector=None):
    """Reduce B to a scalar operator through a cyclic row vector.

    Returns ``CompanionForm(T, L, v)`` with rows t1 = v, t_{i+1} = sigma(t_i) B,
    so that sigma(T) B T^-1 is the companion matrix of L.
    """
    from .ore import DiffOperator

    field = system.field
    n = system.n
    candidates = [list(vector)] if vector is not None else _candidate_vectors(field, n)
    attempts = 0
    for candidate in candidates:
        attempts += 1
        candidate = [field.element(c) for c in candidate]
        rows = _krylov_rows(system, candidate)
        T = RatMatrix(field, rows[:n])
        if T.det.is_zero:
            logger.debug("vector %s is not cyclic", [str(c) for c in candidate])
            continue
        # t_{n+1} = sum c_j t_j, and L = sigma^n - sum c_j sigma^(j-1)
        coords = RatMatrix(field, [rows[n]]) * T.inverse()
        coefficients = [-c for c in coords.rows[0]] + [field.one]
        logger.debug("cyclic vector %s after %d attempts", [str(c) for c in candidate], attempts)
        return CompanionForm(T, DiffOperator(field, coefficients), tuple(candidate))
    raise CyclicVectorNotFound(attempts)


def companion_matrix(operator):
    """Companion matrix of a monic-normalised sigma^n + a_{n-1} sigma^{n-1} + ... + a_0."""
    field = operator.field
    n = operator.order
    lead = operator.coefficients[-1]
    rows = [[field.one if j == i + 1 else field.zero for j in range(n)] for i in range(n - 1)]
    rows.append([-(c / lead) for c in operator.coefficients[:-1]])
    return RatMatrix(field, rows)


def block_decomposition(matrix):
    """Index sets of the connected diagonal blocks of a square matrix."""
    n = matrix.nrows
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(n):
            if i != j and not matrix.rows[i][j].is_zero:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def build_L_nu_m(system, nu, m):
    """Block diagonal ((x+1)/x)^j Sym_nu(A), j = 0..m."""
    if m < 0:
        raise AmbientMismatch("m must be >= 0, got %d" % m)
    field = system.field
    sym = sym_power(system, nu)
    ratio = (field.gen + 1) / field.gen
    blocks = [sym * (ratio ** j) for j in range(m + 1)]
    return DiffSystem(field, RatMatrix.block_diag(field, blocks))


def relation_space_dimension(system, nu, m):
    """(m+1) l' - dim([L^nu_m(A)]) with l' = C(n^2+nu, nu)."""
    size = comb(system.n * system.n + nu, nu)
    return (m + 1) * size - system_dimension(build_L_nu_m(system, nu, m))
