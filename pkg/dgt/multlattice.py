# -*- coding: utf-8 -*-
#
# Multiplicative structure of rational functions under the shift:
# shift-orbit decompositions, the relation lattices Z(a_1, ..., a_m; l),
# relations among constants, and radicals of subgroups of Q*.

from __future__ import division

import logging
from collections import OrderedDict

import sympy
from sympy import Poly, Rational, factorint
from sympy.polys.domains import QQ

from .field import AlgExt, RatFunc, factor_poly, render
from .lattice import IntLattice, kernel_lattice
from .utils import AmbientMismatch, DivisionByZero, UnsupportedConstantField

logger = logging.getLogger(__name__)

ADDITIVE = "additive"
MULTIPLICATIVE = "multiplicative"


class OrbitDecomposition(object):
    """a = constant * sigma^l(witness)/witness * prod rep^e."""

    def __init__(self, value, ell, constant, orbit_terms, witness):
        self.value = value
        self.ell = ell
        self.constant = constant
        self.orbit_terms = orbit_terms
        self.witness = witness

    def exponent(self, rep):
        for r, e in self.orbit_terms:
            if r == rep:
                return e
        return 0

    def reconstruct(self):
        result = self.constant * self.witness.shift(self.ell) / self.witness
        for rep, e in self.orbit_terms:
            result = result * rep ** e
        return result

    def __repr__(self):
        return "OrbitDecomposition(%s: %s, %s, f=%s)" % (
            self.value, self.constant, [(str(r), e) for r, e in self.orbit_terms], self.witness)


def _sample_point(field, expr):
    """First deterministic parameter point where ``expr``'s denominator survives."""
    symbols = field.symbols
    den = sympy.denom(sympy.together(expr))
    for attempt in range(128):
        point = dict((s, (attempt + 2) ** (i + 1) + i) for i, s in enumerate(symbols))
        if den.subs(point) != 0:
            return point
    raise UnsupportedConstantField("no sample point for %s" % render(expr))


def _floor_of(field, value):
    expr = value.as_expr()
    if not expr.is_Rational:
        expr = expr.subs(_sample_point(field, expr))
    return int(sympy.floor(expr))


def orbit_representative(f, ell):
    """Canonical member of f's orbit under x -> x + k*ell and the shift j with f = rep(x + j*ell).

    The representative has -(subleading coefficient)/(ell * deg) in [0, 1).
    """
    if ell == 0 or f.degree < 1:
        return f, 0
    coefficients = f.coefficients()
    d = len(coefficients) - 1
    s = -coefficients[d - 1] / (ell * d)
    k = _floor_of(f.field, s)
    return f.shift(k * ell), -k


def _telescope(rep, j, ell):
    """w with sigma^ell(w)/w = rep(x + j*ell)/rep(x)."""
    field = rep.field
    if j == 0:
        return field.one
    if j > 0:
        result = field.one
        for i in range(j):
            result = result * rep.shift(i * ell)
        return result
    result = field.one
    for i in range(j, 0):
        result = result * rep.shift(i * ell)
    return field.one / result


def _factored(a):
    """Unit and monic irreducible factors of a with signed exponents."""
    field = a.field
    num = factor_poly(a.num)
    factors = [(field.from_poly(f), e) for f, e in num.factors]
    den = a.den
    if den.degree() > 0:
        factors += [(field.from_poly(f), -e) for f, e in factor_poly(den).factors]
    return field.element(num.unit), factors


def shift_orbit_decompose(a, ell):
    if a.is_zero:
        raise DivisionByZero("orbit decomposition of zero")
    if ell < 0:
        raise AmbientMismatch("shift step must be >= 0, got %d" % ell)
    field = a.field
    unit, factors = _factored(a)
    terms = OrderedDict()
    witness = field.one
    for f, e in factors:
        rep, j = orbit_representative(f, ell)
        if j:
            logger.debug("%s lies in the orbit of %s at shift %d", f, rep, j)
        terms[rep] = terms.get(rep, 0) + e
        witness = witness * _telescope(rep, j, ell) ** e
    orbit_terms = sorted([(r, e) for r, e in terms.items() if e],
                         key=lambda item: (item[0].degree, sympy.default_sort_key(item[0].as_expr())))
    return OrbitDecomposition(a, ell, unit, orbit_terms, witness)


def _to_expr(value):
    if isinstance(value, AlgExt):
        raise UnsupportedConstantField("relations among algebraic numbers are not supported: %s" % value)
    if isinstance(value, RatFunc):
        return value.as_expr()
    return sympy.sympify(value)


def _valuations(values):
    """Exponent vectors of nonzero constants on primes and parameter irreducibles.

    Returns (keys, rows, signs): rows[i][k] is the exponent of keys[k] in
    values[i], signs[i] is 1 for a negative sign.
    """
    table = []
    signs = []
    for value in values:
        expr = sympy.cancel(_to_expr(value))
        if expr == 0:
            raise DivisionByZero("zero has no multiplicative relations")
        exponents = {}
        sign = 0
        content = Rational(1)
        for part, power in ((sympy.numer(expr), 1), (sympy.denom(expr), -1)):
            if part.free_symbols:
                coeff, factors = Poly(part, *sorted(part.free_symbols, key=str), domain=QQ).factor_list()
                content = content * Rational(coeff) ** power
                for factor, e in factors:
                    fexpr = factor.as_expr()
                    if factor.LC() < 0:
                        fexpr = -fexpr
                        if e % 2:
                            sign ^= 1
                    key = sympy.expand(fexpr)
                    exponents[key] = exponents.get(key, 0) + power * e
            else:
                content = content * Rational(part) ** power
        if content < 0:
            sign ^= 1
            content = -content
        for p, e in factorint(content.p).items():
            exponents[p] = exponents.get(p, 0) + e
        for p, e in factorint(content.q).items():
            exponents[p] = exponents.get(p, 0) - e
        table.append(exponents)
        signs.append(sign)
    keys = sorted(set(k for row in table for k in row), key=lambda k: (not isinstance(k, int), str(k)))
    rows = [[row.get(k, 0) for k in keys] for row in table]
    return keys, rows, signs


def const_mult_relation_lattice(*constants):
    """{d : prod eta_i^d_i = 1} for nonzero constants of Q or a parameter tower."""
    constants = _flatten(constants)
    m = len(constants)
    if m == 0:
        return IntLattice.zero(0)
    keys, rows, signs = _valuations(constants)
    matrix = [[rows[i][k] for i in range(m)] for k in range(len(keys))]
    lattice = kernel_lattice(matrix, m) if matrix else IntLattice.full(m)
    return lattice.congruence_slice(signs, 2)


def _flatten(values):
    if len(values) == 1 and isinstance(values[0], (list, tuple)):
        return list(values[0])
    return list(values)


class ZLattice(IntLattice):
    """Relation lattice that can produce a witness for each of its members."""

    __slots__ = ("decompositions", "ell")

    def __init__(self, ambient_dim, generators, decompositions, ell):
        super(ZLattice, self).__init__(ambient_dim, generators)
        self.decompositions = decompositions
        self.ell = ell

    def witness(self, vector):
        """f with prod a_i^d_i = sigma^l(f)/f."""
        if not self.member(vector):
            raise AmbientMismatch("%s is not a relation" % list(vector))
        field = self.decompositions[0].value.field
        result = field.one
        for d, dec in zip(vector, self.decompositions):
            if d:
                result = result * dec.witness ** int(d)
        return result

    def witnesses(self):
        return [(list(row), self.witness(row)) for row in self.basis]


def verify_relation(values, vector, witness, ell):
    """prod a_i^d_i * f == sigma^l(f), exactly."""
    field = witness.field
    product = field.one
    for a, d in zip(values, vector):
        if d:
            product = product * a ** int(d)
    return product * witness == witness.shift(ell)


def orbit_exponent_matrix(decompositions):
    reps = []
    for dec in decompositions:
        for rep, _ in dec.orbit_terms:
            if rep not in reps:
                reps.append(rep)
    return reps, [[dec.exponent(rep) for dec in decompositions] for rep in reps]


def z_lattice(values, ell=1):
    """Z(a_1, ..., a_m; l) = {d : prod a_i^d_i = sigma^l(f)/f for some f}."""
    values = list(values)
    if not values:
        return ZLattice(0, [], [], ell)
    field = values[0].field
    values = [field.element(a) for a in values]
    decompositions = [shift_orbit_decompose(a, ell) for a in values]
    constants = const_mult_relation_lattice([dec.constant for dec in decompositions])
    reps, matrix = orbit_exponent_matrix(decompositions)
    lattice = constants.intersect_kernel(matrix)
    logger.debug("z-lattice over %d orbits: %s", len(reps), lattice.basis_list())
    return ZLattice(len(values), lattice.basis_list(), decompositions, ell)


def is_mult_sigma_independent(values, ell=1):
    return z_lattice(values, ell).is_zero


class FGSubgroupData(object):
    """Finitely generated subgroup of G_a or G_m given by generators."""

    def __init__(self, kind, generators, field=None):
        if kind not in (ADDITIVE, MULTIPLICATIVE):
            raise AmbientMismatch("unknown group kind %r" % kind)
        generators = list(generators)
        if field is not None:
            generators = [field.element(g) for g in generators]
        if kind == MULTIPLICATIVE:
            for g in generators:
                if (isinstance(g, RatFunc) and g.is_zero) or g == 0:
                    raise DivisionByZero("multiplicative generators must be nonzero")
        self.kind = kind
        self.generators = tuple(generators)
        self.field = field

    @property
    def is_additive(self):
        return self.kind == ADDITIVE

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "FGSubgroupData(%s, %s)" % (self.kind, [str(g) for g in self.generators])

    def to_dict(self):
        return OrderedDict([("kind", self.kind), ("generators", [render(_to_expr(g)) for g in self.generators])])


def radical_subgroup(group):
    """Generators of {alpha in Q* : alpha^l in group for some l > 0}."""
    if group.kind != MULTIPLICATIVE:
        raise AmbientMismatch("radicals are taken in the multiplicative group")
    values = [_to_expr(g) for g in group.generators]
    if any(not v.is_Rational for v in values):
        raise UnsupportedConstantField("radicals are computed for subgroups of Q*")
    keys, rows, _ = _valuations(values)
    generators = []
    if keys:
        saturated = IntLattice(len(keys), rows).saturate()
        for row in saturated.basis:
            value = Rational(1)
            for p, e in zip(keys, row):
                value = value * Rational(p) ** e
            generators.append(value)
    generators.append(Rational(-1))
    return FGSubgroupData(MULTIPLICATIVE, generators)


def power_in_group(alpha, group):
    """Least l > 0 with alpha^l in the multiplicative group, or None."""
    values = [_to_expr(g) for g in group.generators]
    keys, rows, signs = _valuations(values + [_to_expr(alpha)])
    r = len(values)
    # sum c_j v(g_j) - l v(alpha) = 0 and sum c_j s_j - l s(alpha) + 2 z = 0
    matrix = [[rows[j][k] for j in range(r)] + [-rows[r][k], 0] for k in range(len(keys))]
    matrix.append(signs[:r] + [-signs[r], 2])
    solutions = kernel_lattice(matrix, r + 2)
    step = 0
    for row in solutions.basis:
        step = sympy.igcd(step, row[r])
    return int(step) or None


def relation_lattice(group):
    """Integer relations among the generators: sum d_i g_i = 0 or prod g_i^d_i = 1."""
    generators = list(group.generators)
    m = len(generators)
    if group.kind == MULTIPLICATIVE:
        if all(not isinstance(g, RatFunc) or g.is_constant for g in generators):
            return const_mult_relation_lattice(generators)
        return z_lattice(generators, 0)
    exprs = [_to_expr(g) for g in generators]
    if not exprs:
        return IntLattice.zero(0)
    denominator = sympy.Integer(1)
    for e in exprs:
        denominator = sympy.lcm(denominator, sympy.denom(sympy.together(e)))
    numerators = [sympy.expand(sympy.cancel(e * denominator)) for e in exprs]
    symbols = sorted(set().union(*[n.free_symbols for n in numerators]), key=str)
    coordinates = []
    for n in numerators:
        if symbols:
            coordinates.append(Poly(n, *symbols, domain=QQ).as_dict())
        else:
            coordinates.append({(): Rational(n)} if n != 0 else {})
    monomials = sorted(set(k for c in coordinates for k in c))
    matrix = []
    for mono in monomials:
        row = [Rational(c.get(mono, 0)) for c in coordinates]
        scale = sympy.ilcm(1, *[v.q for v in row])
        matrix.append([int(v * scale) for v in row])
    if not matrix:
        return IntLattice.full(m)
    return kernel_lattice(matrix, m)


def relation_guard_groups(values, ell=1):
    """Groups on which a specialization must be injective to keep Z(a; l).

    The multiplicative group of the orbit constants and the additive group
    generated by 1 and the roots of the linear orbit representatives.
    """
    values = list(values)
    field = values[0].field
    decompositions = [shift_orbit_decompose(field.element(a), ell) for a in values]
    constants = FGSubgroupData(MULTIPLICATIVE, [dec.constant for dec in decompositions], field)
    roots = [field.one]
    for dec in decompositions:
        for rep, _ in dec.orbit_terms:
            if rep.degree == 1:
                root = -rep.coefficients()[0]
                if root not in roots:
                    roots.append(root)
            elif any(not c.is_rational_number for c in rep.coefficients()):
                raise UnsupportedConstantField("nonlinear parametric orbit %s" % rep)
    return [constants, FGSubgroupData(ADDITIVE, roots, field)]
