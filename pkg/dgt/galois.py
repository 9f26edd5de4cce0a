# -*- coding: utf-8 -*-
#
# Group data, Laurent polynomials in the matrix entries, and the Galois
# group criterion for sigma(Y) = A Y.

import logging
from collections import OrderedDict, namedtuple

import six
import sympy
from sympy import Poly, Symbol
from sympy.polys.polyerrors import CoercionFailed, GeneratorsError, PolynomialError

from .diffsys import DiffSystem, iterate_system
from .field import render
from .linalg import RatMatrix
from .multlattice import z_lattice
from .utils import AmbientMismatch, NotInGroup, SingularInput, lru_cache

logger = logging.getLogger(__name__)

DETINV = Symbol("detinv")
DET = Symbol("det")

CONDITIONAL = "conditional on supplied group data"

DiagonalGaloisGroup = namedtuple("DiagonalGaloisGroup", ["lattice", "dimension"])


@lru_cache(maxsize=16)
def entry_symbols(n):
    fmt = "X%d%d" if n < 10 else "X%d_%d"
    return tuple(Symbol(fmt % (i + 1, j + 1)) for i in range(n) for j in range(n))


def entry_names(n):
    return [str(s) for s in entry_symbols(n)]


def _laurent_namespace(n, field):
    names = {p: Symbol(p) for p in field.parameters}
    names.update((str(s), s) for s in entry_symbols(n))
    names.update({str(DET): DET, str(DETINV): DETINV})
    return names


class LaurentPoly(object):
    """Polynomial in the entries X_ij and detinv = det(X)^-1.

    The name ``det`` is accepted in the input and expands to det(X).
    """

    def __init__(self, expr, n, field):
        symbols = entry_symbols(n)
        if isinstance(expr, six.string_types):
            expr = sympy.sympify(expr, locals=_laurent_namespace(n, field))
        else:
            expr = sympy.sympify(expr)
        if DET in expr.free_symbols:
            expr = expr.subs(DET, sympy.Matrix(n, n, symbols).det())
        try:
            self.poly = Poly(sympy.expand(expr), *(symbols + (DETINV, )), domain=field.constant_domain)
        except (CoercionFailed, GeneratorsError, PolynomialError):
            raise AmbientMismatch("%s is not a Laurent polynomial in the entries of a %dx%d matrix"
                                  % (render(expr), n, n))
        self.n = n
        self.field = field

    @property
    def uses_detinv(self):
        return any(m[-1] for m in self.poly.monoms())

    def is_zero(self):
        return self.poly.is_zero

    def evaluate(self, matrix):
        return evaluate_laurent(self, matrix)

    def specialize(self, assignments, target):
        gens = self.poly.gens
        expr = sympy.Integer(0)
        for monom, coeff in self.poly.terms():
            value = self.field.element(coeff).specialize(assignments, target).as_expr()
            expr += value * sympy.Mul(*[g ** k for g, k in zip(gens, monom)])
        return LaurentPoly(expr, self.n, target)

    def __str__(self):
        return render(self.poly.as_expr())

    def __repr__(self):
        return "LaurentPoly(%s)" % self


def _matrix_of(obj):
    if isinstance(obj, DiffSystem):
        return obj.A
    if not isinstance(obj, RatMatrix):
        raise AmbientMismatch("expected a matrix, got %r" % (obj, ))
    return obj


def evaluate_laurent(p, matrix):
    """p(M) with detinv -> 1/det(M)."""
    M = _matrix_of(matrix)
    if M.nrows != p.n or M.ncols != p.n:
        raise AmbientMismatch("%dx%d matrix for a polynomial in %dx%d entries" % (M.nrows, M.ncols, p.n, p.n))
    field = M.field
    entries = [e for row in M.rows for e in row]
    detinv = None
    if p.uses_detinv:
        if M.det.is_zero:
            raise SingularInput("det^-1 at a singular matrix")
        detinv = M.det.inverse()
    total = field.zero
    for monom, coeff in p.poly.terms():
        term = field.element(coeff)
        for e, k in zip(entries, monom[:-1]):
            if k:
                term = term * e ** k
        if monom[-1]:
            term = term * detinv ** monom[-1]
        total = total + term
    return total


def membership(matrix, polys):
    """True iff every polynomial vanishes at the matrix."""
    return all(evaluate_laurent(p, matrix).is_zero for p in polys)


class GroupData(object):
    """Defining data of H: S for H, T for H°, characters of H° and [H : H°]."""

    def __init__(self, n, S, T, characters, components, field):
        if components < 1:
            raise AmbientMismatch("component count must be >= 1, got %d" % components)
        self.n = n
        self.field = field
        self.S = [p if isinstance(p, LaurentPoly) else LaurentPoly(p, n, field) for p in S]
        self.T = [p if isinstance(p, LaurentPoly) else LaurentPoly(p, n, field) for p in T]
        self.characters = [p if isinstance(p, LaurentPoly) else LaurentPoly(p, n, field) for p in characters]
        self.components = int(components)
        identity = RatMatrix.identity(field, n)
        for chi in self.characters:
            if evaluate_laurent(chi, identity) != 1:
                raise AmbientMismatch("character %s is not 1 at the identity" % chi)

    def specialize(self, assignments, target):
        def spec(polys):
            return [p.specialize(assignments, target) for p in polys]

        return GroupData(self.n, spec(self.S), spec(self.T), spec(self.characters), self.components, target)

    def to_dict(self):
        return OrderedDict([
            ("n", self.n),
            ("S", [str(p) for p in self.S]),
            ("T", [str(p) for p in self.T]),
            ("characters", [str(p) for p in self.characters]),
            ("components", self.components),
        ])


class GaloisVerdict(object):
    """Outcome of the criterion; failing data is present iff is_group is False."""

    def __init__(self, is_group, condition=None, index=None, relation=None, witness=None):
        self.is_group = is_group
        self.condition = condition
        self.index = index
        self.relation = relation
        self.witness = witness

    @classmethod
    def from_lattice(cls, lattice):
        if lattice.is_zero:
            return cls(True)
        relation = list(lattice.basis[0])
        return cls(False, "b", relation=relation, witness=lattice.witness(relation))

    def to_dict(self):
        result = OrderedDict([("is_group", self.is_group), ("note", CONDITIONAL)])
        if not self.is_group:
            failing = OrderedDict([("condition", self.condition)])
            if self.condition == "a":
                failing["index"] = self.index
            else:
                failing["relation"] = self.relation
                failing["witness"] = str(self.witness)
            result["failing_condition"] = failing
        return result

    def __bool__(self):
        return self.is_group

    __nonzero__ = __bool__

    def __repr__(self):
        return "GaloisVerdict(%s)" % dict(self.to_dict())


def connected_criterion(T, characters, system):
    """H connected: the Galois group iff chi_1(A), ..., chi_l(A) are multiplicatively sigma-independent."""
    A = _matrix_of(system)
    if not membership(A, T):
        raise NotInGroup("A does not lie in the identity component")
    if not characters:
        return GaloisVerdict(True)
    values = [evaluate_laurent(chi, A) for chi in characters]
    logger.debug("character values %s", [str(v) for v in values])
    return GaloisVerdict.from_lattice(z_lattice(values, 1))


def criterion_check(group, system):
    """(a) A_i outside H° for 0 < i < l and (b) chi(A_l) sigma^l-independent."""
    if not isinstance(system, DiffSystem):
        system = DiffSystem(group.field, system)
    if not membership(system.A, group.S):
        raise NotInGroup("A does not lie in H")
    ell = group.components
    if ell == 1:
        return connected_criterion(group.T, group.characters, system)
    iterate = system.A
    for i in range(1, ell):
        if membership(iterate, group.T):
            logger.debug("A_%d lies in the identity component", i)
            return GaloisVerdict(False, "a", index=i)
        iterate = iterate.shift(1) * system.A
    if not group.characters:
        return GaloisVerdict(True)
    values = [evaluate_laurent(chi, iterate_system(system, ell)) for chi in group.characters]
    return GaloisVerdict.from_lattice(z_lattice(values, ell))


def galois_group_diagonal(values):
    """Character lattice Z(a_1, ..., a_n; 1) and the dimension of the torus it cuts out."""
    values = list(values)
    lattice = z_lattice(values, 1)
    return DiagonalGaloisGroup(lattice, len(values) - lattice.rank)
