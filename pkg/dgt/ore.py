# -*- coding: utf-8 -*-
#
# Scalar difference operators L = a_n(x) s^n + ... + a_0(x), where s is the
# shift x -> x+1: sigma-bar form, indicial polynomial, polynomial and
# hypergeometric solutions, and the degree bounds built on them.

from __future__ import division

import functools
import itertools
import logging
from collections import namedtuple
from math import comb

import sympy
from cached_property import cached_property
from sympy import CRootOf, Poly, Symbol
from sympy.polys.matrices import DomainMatrix
from tqdm import tqdm

from .context import ExecutionContext
from .diffsys import DiffSystem, block_decomposition, companion_form, minor_map, sym_power
from .field import (
    AlgExt,
    AlgPoly,
    NumberField,
    THETA,
    factor_poly,
    integer_roots,
    render,
)
from .utils import AmbientMismatch, SingularInput, TooLarge, UnsupportedConstantField, lru_cache

logger = logging.getLogger(__name__)

Y = Symbol("y")

ExtensionClass = namedtuple("ExtensionClass", ["p", "q", "factor"])
HyperResult = namedtuple("HyperResult", ["certificates", "extension_classes"])
BoundStep = namedtuple("BoundStep", ["l", "size", "t", "N", "blocks", "vectors"])


class DiffOperator(object):
    """L = sum a_i s^i with polynomial coefficients, a_n a_0 != 0."""

    def __init__(self, field, coefficients):
        coefficients = [field.element(c) for c in coefficients]
        if len(coefficients) < 2:
            raise AmbientMismatch("operator must have order >= 1")
        if coefficients[0].is_zero or coefficients[-1].is_zero:
            raise SingularInput("leading and trailing coefficients must be nonzero")
        denominator = functools.reduce(lambda a, b: a.lcm(b), [c.den for c in coefficients])
        scale = field.from_poly(denominator)
        self.field = field
        self.coefficients = tuple(c * scale for c in coefficients)

    @classmethod
    def from_system(cls, system, vector=None):
        return companion_form(system, vector).operator

    @property
    def order(self):
        return len(self.coefficients) - 1

    @cached_property
    def polys(self):
        return [self.field.to_poly(c) for c in self.coefficients]

    def apply(self, f):
        f = self.field.element(f)
        result = self.field.zero
        for i, a in enumerate(self.coefficients):
            result = result + a * f.shift(i)
        return result

    def __eq__(self, other):
        return isinstance(other, DiffOperator) and self.coefficients == other.coefficients

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "DiffOperator(%s)" % self

    def __str__(self):
        terms = []
        for i in range(self.order, -1, -1):
            a = self.coefficients[i]
            if a.is_zero:
                continue
            shift = "" if i == 0 else ("s" if i == 1 else "s^%d" % i)
            coefficient = "(%s)" % a if a.as_expr().is_Add else str(a)
            if not shift:
                terms.append(coefficient)
            elif a.is_one:
                terms.append(shift)
            else:
                terms.append("%s*%s" % (coefficient, shift))
        return " + ".join(terms).replace("+ -", "- ")


class IndicialData(object):
    """sigma-bar coefficients of c(x) L, their top degree rho and Ind(L)."""

    def __init__(self, sigma_bar_coeffs, rho, indicial, multiplier):
        self.sigma_bar_coeffs = sigma_bar_coeffs
        self.rho = rho
        self.indicial = indicial
        self.multiplier = multiplier

    @property
    def integer_roots(self):
        return integer_roots(self.indicial)


@lru_cache(maxsize=128)
def _sigma_bar_power(x, domain, i):
    """sigma-bar^i = (x(s-1))^i expanded in the s-basis."""
    one = Poly(1, x, domain=domain)
    xp = Poly(x, x, domain=domain)
    powers = [one]
    for _ in range(i):
        nxt = [Poly(0, x, domain=domain)] * (len(powers) + 1)
        for j, s in enumerate(powers):
            nxt[j + 1] = nxt[j + 1] + xp * s.shift(1)
            nxt[j] = nxt[j] - xp * s
        powers = nxt
    return tuple(powers)


def _sigma_bar(polys, x, domain, minimal=True):
    remainder = list(polys)
    n = len(remainder) - 1
    one = Poly(1, x, domain=domain)
    abar = [None] * (n + 1)
    multiplier = one
    for i in range(n, -1, -1):
        expansion = _sigma_bar_power(x, domain, i)
        b = expansion[i]
        r = remainder[i]
        if minimal:
            h = one if r.is_zero else b.exquo(b.gcd(r))
        else:
            h = b
        if h != one:
            remainder = [h * c for c in remainder]
            for j in range(i + 1, n + 1):
                abar[j] = h * abar[j]
            multiplier = h * multiplier
        a = remainder[i].exquo(b)
        abar[i] = a
        for j in range(i + 1):
            remainder[j] = remainder[j] - a * expansion[j]
    if any(not c.is_zero for c in remainder):
        raise AssertionError("sigma-bar reduction left a remainder")
    return abar, multiplier


def _indicial_from(abar, domain, rho=None):
    if rho is None:
        rho = max(a.degree() for a in abar if not a.is_zero)
    expr = sympy.Add(*[a.nth(rho) * Y ** i for i, a in enumerate(abar) if not a.is_zero])
    return Poly(expr, Y, domain=domain), rho


def sigma_bar_form(operator):
    """Write c(x) L as sum abar_i sigma-bar^i with sigma-bar = x(s - 1)."""
    field = operator.field
    abar, multiplier = _sigma_bar(operator.polys, field.x, field.constant_domain)
    indicial, rho = _indicial_from(abar, field.constant_domain)
    return IndicialData([field.from_poly(a) for a in abar], rho, indicial, field.from_poly(multiplier))


def indicial_polynomial(operator):
    return sigma_bar_form(operator).indicial


def expand_sigma_bar(field, abar):
    """sum abar_i sigma-bar^i back in the s-basis, as coefficient RatFuncs."""
    x, domain = field.x, field.constant_domain
    result = [Poly(0, x, domain=domain)] * len(abar)
    for i, a in enumerate(abar):
        a = field.to_poly(a)
        for j, s in enumerate(_sigma_bar_power(x, domain, i)):
            result[j] = result[j] + a * s
    return [field.from_poly(c) for c in result]


def _ansatz_nullspace(columns, domain):
    """Nullspace of the linear map given column-wise as sparse dicts."""
    keys = sorted(set(k for col in columns for k in col))
    if not keys:
        return [[domain.one if i == j else domain.zero for i in range(len(columns))] for j in range(len(columns))]
    rows = [[col.get(k, domain.zero) for col in columns] for k in keys]
    null = DomainMatrix(rows, (len(keys), len(columns)), domain).nullspace()
    return [row for row in null.to_list() if any(row)]


def _coefficient_list(poly, domain):
    if poly.is_zero:
        return []
    return [domain.convert(c) for c in reversed(poly.rep.to_list())]


def _rational_solutions(polys, x, domain, degree):
    """Polynomials of degree <= ``degree`` with sum polys[i] * Q(x+i) = 0."""
    columns = []
    for k in range(degree + 1):
        image = Poly(0, x, domain=domain)
        for i, a in enumerate(polys):
            if not a.is_zero:
                image = image + a * Poly((x + i) ** k, x, domain=domain)
        columns.append(dict((j, c) for j, c in enumerate(_coefficient_list(image, domain)) if c))
    solutions = []
    for vector in _ansatz_nullspace(columns, domain):
        expr = sympy.Add(*[domain.to_sympy(c) * x ** k for k, c in enumerate(vector)])
        solutions.append(Poly(expr, x, domain=domain).monic())
    return solutions


def polynomial_solutions(operator, degree=None):
    """Basis of the polynomial solutions of L over the constant field."""
    field = operator.field
    if degree is None:
        degree = max(integer_roots(indicial_polynomial(operator)) + [0])
    if degree < 0:
        return []
    logger.debug("polynomial ansatz of degree %d for %s", degree, operator)
    solutions = _rational_solutions(operator.polys, field.x, field.constant_domain, degree)
    return [field.from_poly(q) for q in solutions]


class Certificate(object):
    """r = beta * p/q * Q(x+1)/Q(x).

    For rational beta the certificate is the RatFunc ``rate``; for an
    algebraic beta it is carried symbolically over ``extension`` and
    ``conjugate`` picks the root of the minimal polynomial used to render it.
    """

    def __init__(self, field, beta, p, q, Q, extension=None, conjugate=None):
        self.field = field
        self.beta = beta
        self.p = p
        self.q = q
        self.Q = Q
        self.extension = extension
        self.conjugate = conjugate

    @property
    def is_algebraic(self):
        return self.extension is not None

    @cached_property
    def rate(self):
        if self.is_algebraic:
            return None
        f = self.field
        Q = f.from_poly(self.Q)
        return f.element(self.beta) * f.from_poly(self.p) / f.from_poly(self.q) * Q.shift(1) / Q

    @property
    def degree(self):
        if not self.is_algebraic:
            return self.rate.degree
        p, q = self.p.degree(), self.q.degree()
        return max(p, q) if self.Q.degree <= 0 else max(p + self.Q.degree, q + self.Q.degree)

    @property
    def minimal_polynomial(self):
        if not self.is_algebraic:
            return None
        return render(self.extension.modulus.as_expr().subs(THETA, Y))

    def as_expr(self):
        if not self.is_algebraic:
            return self.rate.as_expr()
        x = self.field.x
        root = CRootOf(self.extension.modulus.as_expr().subs(THETA, Y), self.conjugate)
        Q0 = self.Q.as_expr(x, root)
        Q1 = self.Q.shift(1).as_expr(x, root)
        beta = self.beta.as_expr().subs(THETA, root)
        expr = beta * self.p.as_expr() / self.q.as_expr()
        if self.Q.degree > 0:
            expr = expr * Q1 / Q0
        return expr

    def __eq__(self, other):
        if not isinstance(other, Certificate):
            return NotImplemented
        if self.is_algebraic != other.is_algebraic:
            return False
        if not self.is_algebraic:
            return self.rate == other.rate
        if self.extension != other.extension or self.conjugate != other.conjugate:
            return False
        return _same_algebraic_rate(self, other)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if not self.is_algebraic:
            return hash(self.rate)
        return hash((self.extension, self.conjugate))

    def __repr__(self):
        return "Certificate(%s)" % self

    def __str__(self):
        return render(self.as_expr())

    def sort_key(self):
        return (self.is_algebraic, self.degree, str(self))


def _same_algebraic_rate(a, b):
    # beta1 p1 q2 Q1(x+1) Q2(x) == beta2 p2 q1 Q2(x+1) Q1(x)
    left = a.Q.shift(1) * b.Q * a.p * b.q * a.beta
    right = b.Q.shift(1) * a.Q * b.p * a.q * b.beta
    return (left - right).is_zero


def _monic_divisors(poly):
    """All monic divisors of ``poly`` in increasing degree."""
    x = poly.gen
    one = Poly(1, x, domain=poly.get_domain())
    if poly.degree() <= 0:
        return [one]
    factors = factor_poly(poly).factors
    divisors = []
    for exponents in itertools.product(*[range(e + 1) for _, e in factors]):
        d = one
        for (f, _), e in zip(factors, exponents):
            if e:
                d = d * f ** e
        divisors.append(d)
    divisors.sort(key=lambda d: (d.degree(), sympy.default_sort_key(d.as_expr())))
    return divisors


def _candidate_pairs(operator):
    polys = operator.polys
    n = operator.order
    x = operator.field.x
    a_n = polys[-1].shift(1 - n)
    ps = _monic_divisors(polys[0])
    qs = _monic_divisors(a_n)
    size = len(ps) * len(qs)
    limit = ExecutionContext.get_candidate_limit()
    if size > limit:
        raise TooLarge(size, limit)
    return [(p, q) for p in ps for q in qs]


def _shifted_product(poly, start, stop):
    result = Poly(1, poly.gen, domain=poly.get_domain())
    for j in range(start, stop):
        result = result * poly.shift(j)
    return result


def _p_q_polys(operator, p, q):
    """P_i = a_i prod_{j<i} p(x+j) prod_{i<=j<n} q(x+j)."""
    n = operator.order
    return [a * _shifted_product(p, 0, i) * _shifted_product(q, i, n) for i, a in enumerate(operator.polys)]


def _f_pq(P, domain):
    degree = max(c.degree() for c in P if not c.is_zero)
    expr = sympy.Add(*[c.nth(degree) * Y ** i for i, c in enumerate(P) if not c.is_zero])
    return Poly(expr, Y, domain=domain)


def _iter_pairs(operator, desc):
    pairs = _candidate_pairs(operator)
    return tqdm(pairs, desc=desc, disable=not ExecutionContext.get_progress())


def _scaled(P, beta):
    return [c * Poly(beta ** i, c.gen, domain=c.get_domain()) for i, c in enumerate(P)]


def _coordinate_operators(P, ext):
    """Split sum theta^i P_i s^i into sum_e theta^e L_e with L_e over Q."""
    x = P[0].gen
    coordinates = [ext.gen ** i for i in range(len(P))]
    operators = []
    for e in range(ext.degree):
        operators.append([c * Poly(coordinates[i].coordinates()[e], x, domain=c.get_domain())
                          for i, c in enumerate(P)])
    return operators


def _algebraic_integer_roots(P, ext):
    x = P[0].gen
    domain = P[0].get_domain()
    parts = []
    for coordinate in _coordinate_operators(P, ext):
        if all(c.is_zero for c in coordinate):
            parts.append(None)
            continue
        abar, _ = _sigma_bar(coordinate, x, domain, minimal=False)
        parts.append(abar)
    rho = max(a.degree() for abar in parts if abar for a in abar if not a.is_zero)
    gcd = None
    for abar in parts:
        if abar is None:
            continue
        ind, _ = _indicial_from(abar, domain, rho)
        if ind.is_zero:
            continue
        gcd = ind if gcd is None else gcd.gcd(ind)
    if gcd is None:
        raise AssertionError("indicial polynomial vanished")
    return integer_roots(gcd) if gcd.degree() > 0 else []


def _algebraic_solutions(P, ext, degree):
    x = P[0].gen
    powers = [ext.gen ** i for i in range(len(P))]
    basis = [ext.gen ** e for e in range(ext.degree)]
    columns = []
    for k in range(degree + 1):
        for w in basis:
            image = AlgPoly(ext, [])
            for i, c in enumerate(P):
                if c.is_zero:
                    continue
                term = AlgPoly.from_poly(ext, c * Poly((x + i) ** k, x, domain=c.get_domain()))
                image = image + term * (powers[i] * w)
            column = {}
            for b, coefficient in enumerate(image.coeffs):
                for a, value in enumerate(coefficient.coordinates()):
                    if value:
                        column[(b, a)] = sympy.polys.domains.QQ.convert(value)
            columns.append(column)
    solutions = []
    for vector in _ansatz_nullspace(columns, sympy.polys.domains.QQ):
        coeffs = []
        for k in range(degree + 1):
            value = ext.zero
            for e, w in enumerate(basis):
                c = vector[k * ext.degree + e]
                if c:
                    value = value + w * sympy.Rational(c.numerator, c.denominator)
            coeffs.append(value)
        solutions.append(AlgPoly(ext, coeffs))
    return solutions


def hyper_certificates(operator, allow_algebraic=None):
    """Certificates of the hypergeometric solutions of L.

    Irreducible factors of degree >= 2 of f_{p,q} are either solved over
    Q[theta]/(factor) (``allow_algebraic``) or returned untouched as
    extension classes.
    """
    field = operator.field
    if allow_algebraic is None:
        allow_algebraic = ExecutionContext.get_allow_algebraic()
    if not field.is_rational and not ExecutionContext.get_tower_hyper():
        raise UnsupportedConstantField("hypergeometric solutions over %r are disabled" % field)
    domain = field.constant_domain
    certificates = []
    classes = []
    for p, q in _iter_pairs(operator, "hyper"):
        P = _p_q_polys(operator, p, q)
        f = _f_pq(P, domain)
        if f.degree() < 1:
            continue
        for factor, _ in factor_poly(f).factors:
            if factor.degree() == 1:
                beta = -factor.TC()
                if beta == 0:
                    continue
                scaled = _scaled(P, beta)
                degree = max(integer_roots(indicial_polynomial(_RawOperator(field, scaled))) + [0])
                for Q in _rational_solutions(scaled, field.x, domain, degree):
                    logger.debug("certificate from p=%s q=%s beta=%s", p.as_expr(), q.as_expr(), beta)
                    certificates.append(Certificate(field, beta, p, q, Q))
            elif allow_algebraic and field.is_rational:
                ext = NumberField(factor)
                degree = max(_algebraic_integer_roots(P, ext) + [0])
                for Q in _algebraic_solutions(P, ext, degree):
                    for conjugate in range(ext.degree):
                        certificates.append(Certificate(field, ext.gen, p, q, Q, ext, conjugate))
            else:
                logger.debug("unexplored extension class %s for p=%s q=%s",
                             factor.as_expr(), p.as_expr(), q.as_expr())
                classes.append(ExtensionClass(p, q, factor))
    unique = []
    for c in certificates:
        if c not in unique:
            unique.append(c)
    unique.sort(key=Certificate.sort_key)
    return HyperResult(unique, classes)


class _RawOperator(object):
    """Coefficient Polys that skip the DiffOperator invariants."""

    def __init__(self, field, polys):
        self.field = field
        self.polys = polys


def verify_certificate(operator, rate):
    """sum_i a_i prod_{j<i} r(x+j) == 0, exactly."""
    field = operator.field
    if isinstance(rate, AlgExt):
        one = Poly(1, field.x, domain=field.constant_domain)
        rate = Certificate(field, rate, one, one, AlgPoly(rate.ext, [1]), rate.ext, 0)
    if isinstance(rate, Certificate) and rate.is_algebraic:
        if rate.beta.is_zero:
            return False
        P = _p_q_polys(operator, rate.p, rate.q)
        total = AlgPoly(rate.extension, [])
        for i, c in enumerate(P):
            total = total + rate.Q.shift(i) * c * rate.beta ** i
        return total.is_zero
    if isinstance(rate, Certificate):
        rate = rate.rate
    rate = field.element(rate)
    if rate.is_zero:
        return False
    total = field.zero
    product = field.one
    for i, a in enumerate(operator.coefficients):
        total = total + a * product
        product = product * rate.shift(i)
    return total.is_zero


def hyper_bound(operator):
    """N(L) = max Z(prod Ind(L_{p,q,beta})) u {0} + max(deg a_n, deg a_0)."""
    field = operator.field
    domain = field.constant_domain
    roots = set([0])
    for p, q in _iter_pairs(operator, "hyper-bound"):
        P = _p_q_polys(operator, p, q)
        f = _f_pq(P, domain)
        if f.degree() < 1:
            continue
        for factor, _ in factor_poly(f).factors:
            if factor.degree() == 1:
                beta = -factor.TC()
                if beta == 0:
                    continue
                scaled = _scaled(P, beta)
                roots.update(integer_roots(indicial_polynomial(_RawOperator(field, scaled))))
            elif field.is_rational:
                roots.update(_algebraic_integer_roots(P, NumberField(factor)))
            else:
                raise UnsupportedConstantField("f_{p,q} factor %s needs an algebraic extension of %r"
                                               % (render(factor.as_expr()), field))
    polys = operator.polys
    return max(roots) + max(polys[-1].degree(), polys[0].degree())


def coefficient_bound(system, nu):
    """Degree bound for generators of the nu-maximal ideals of sigma(Y) = A Y.

    N = max_l 2 l' mu t_l + 2 l' mu (mu - 1) N_l with mu = max_l C(l', l),
    where t_l and N_l come from the companion forms of the diagonal blocks
    of Phi_{l',l}(Sym_nu(A))^{-t}: each is the maximum over the blocks of
    that step, so N is the maximum over all blocks of all steps.
    """
    field = system.field
    if not field.is_rational:
        raise UnsupportedConstantField("coefficient bounds need a system over Q(x)")
    sym = sym_power(system, nu)
    size = sym.nrows
    limit = ExecutionContext.get_companion_limit()
    mu = max(comb(size, l) for l in range(1, size + 1))
    steps = []
    for l in range(1, size + 1):
        width = comb(size, l)
        if width > limit:
            raise TooLarge(width, limit, l)
        M = minor_map(sym, l).inverse().transpose()
        t_l, N_l, blocks, vectors = 0, 0, [], []
        for indices in block_decomposition(M):
            block = DiffSystem(field, M.submatrix(indices, indices))
            form = companion_form(block)
            t_l = max(t_l, form.transform.inverse().max_degree())
            N_l = max(N_l, hyper_bound(form.operator))
            blocks.append(len(indices))
            vectors.append(tuple(str(v) for v in form.vector))
        logger.debug("l=%d: t_l=%d N_l=%d over %d blocks", l, t_l, N_l, len(blocks))
        steps.append(BoundStep(l, width, t_l, N_l, tuple(blocks), tuple(vectors)))
    bound = max(2 * size * mu * s.t + 2 * size * mu * (mu - 1) * s.N for s in steps)
    return CoefficientBound(bound, size, mu, steps)


class CoefficientBound(object):

    def __init__(self, N, size, mu, steps):
        self.N = N
        self.size = size
        self.mu = mu
        self.steps = steps

    def __int__(self):
        return self.N

    def __repr__(self):
        return "CoefficientBound(N=%d, l'=%d, mu=%d)" % (self.N, self.size, self.mu)
