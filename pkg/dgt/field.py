# -*- coding: utf-8 -*-
#
# Exact scalars and rational functions: Q, pure transcendental towers
# Q(u1, ..., ur), rational functions in the distinguished variable x over a
# tower, and simple algebraic extensions Q[theta]/(m).

from __future__ import division

import logging
from collections import namedtuple

import six
import sympy
from cached_property import cached_property
from sympy import CRootOf, Poly, Rational, Symbol, sympify
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import CoercionFailed, NotInvertible as SympyNotInvertible

from .utils import (
    AmbientMismatch,
    DivisionByZero,
    NotIrreducible,
    NotWellDefined,
    UnsupportedConstantField,
    lru_cache,
    wrap_dgt_exc,
)

logger = logging.getLogger(__name__)

Factorization = namedtuple("Factorization", ["unit", "factors"])


def render(expr):
    """Render a sympy expression with '^' for powers, the cli's grammar."""
    return sympy.sstr(expr).replace("**", "^")


@lru_cache(maxsize=256)
def _function_field(symbols):
    return QQ.frac_field(*symbols)


class TowerField(object):
    """Q(u1)...(ur)(x), the rational function field the systems live in.

    ``parameters`` are the transcendental constants, ``variable`` is the
    distinguished variable on which the shift acts.
    """

    def __init__(self, parameters=(), variable="x"):
        parameters = tuple(parameters)
        if len(set(parameters)) != len(parameters):
            raise AmbientMismatch("duplicate parameter names: %s" % (parameters, ))
        if variable in parameters:
            raise AmbientMismatch("variable %s collides with a parameter" % variable)
        self.parameters = parameters
        self.variable = variable
        self.x = Symbol(variable)
        self.symbols = tuple(Symbol(name) for name in parameters)
        self.function_field = _function_field((self.x, ) + self.symbols)
        self.ring = self.function_field.field.ring
        if parameters:
            self.constant_domain = _function_field(self.symbols)
        else:
            self.constant_domain = QQ

    def __eq__(self, other):
        return isinstance(other, TowerField) and \
            (self.parameters, self.variable) == (other.parameters, other.variable)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.parameters, self.variable))

    def __repr__(self):
        return "TowerField(%r, %r)" % (self.parameters, self.variable)

    @property
    def is_rational(self):
        return not self.parameters

    def element(self, value):
        if isinstance(value, RatFunc):
            if value.field == self:
                return value
            value = value.as_expr()
        elif isinstance(value, AlgExt):
            raise UnsupportedConstantField("algebraic element %s is not in %r" % (value, self))
        expr = sympify(value)
        try:
            return RatFunc(self, self.function_field.from_sympy(expr))
        except (CoercionFailed, TypeError, ValueError):
            raise AmbientMismatch("%s is not an element of %r" % (expr, self))

    def parameter(self, name):
        return self.element(Symbol(name))

    @cached_property
    def gen(self):
        return RatFunc(self, self.function_field.from_sympy(self.x))

    @cached_property
    def one(self):
        return RatFunc(self, self.function_field.one)

    @cached_property
    def zero(self):
        return RatFunc(self, self.function_field.zero)

    def restrict(self, dropped):
        """The tower left over when the parameters in ``dropped`` are assigned."""
        return TowerField([p for p in self.parameters if p not in dropped], self.variable)

    def extend(self, names):
        return TowerField(self.parameters + tuple(n for n in names if n not in self.parameters), self.variable)

    def to_poly(self, f, gen=None):
        """Sympy Poly in ``gen`` (default x) over the constant domain."""
        f = self.element(f)
        if not f.is_polynomial:
            raise AmbientMismatch("%s is not a polynomial in %s" % (f, self.variable))
        expr = f.as_expr()
        if gen is not None:
            expr = expr.subs(self.x, gen)
        return Poly(expr, gen if gen is not None else self.x, domain=self.constant_domain)

    def from_poly(self, poly):
        return self.element(poly.as_expr().subs(poly.gen, self.x))

    def constant(self, value):
        c = self.element(value)
        if not c.is_constant:
            raise AmbientMismatch("%s depends on %s" % (c, self.variable))
        return c

    def constant_of(self, f):
        """Constant-domain element of a RatFunc free of x."""
        return self.constant_domain.from_sympy(self.element(f).as_expr())


class RatFunc(object):
    """Element of a TowerField, kept reduced with a canonical denominator."""

    __slots__ = ("field", "value", "__weakref__")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _new(self, value):
        return RatFunc(self.field, value)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise AmbientMismatch("%r vs %r" % (self.field, other.field))
            return other
        return self.field.element(other)

    @property
    def numer(self):
        return self.value.numer

    @property
    def denom(self):
        return self.value.denom

    @property
    def num(self):
        """Numerator as a Poly in x, scaled so that ``den`` is monic."""
        den = Poly(self.denom.as_expr(), self.field.x, domain=self.field.constant_domain)
        return Poly(self.numer.as_expr() / den.LC(), self.field.x, domain=self.field.constant_domain)

    @property
    def den(self):
        return Poly(self.denom.as_expr(), self.field.x, domain=self.field.constant_domain).monic()

    @property
    def degree(self):
        if not self.value:
            return float("-inf")
        return max(self.numer.degree(0), self.denom.degree(0))

    @property
    def is_zero(self):
        return not self.value

    @property
    def is_one(self):
        return self.value == self.field.function_field.one

    @property
    def is_polynomial(self):
        return self.denom.degree(0) <= 0

    @property
    def is_constant(self):
        return self.numer.degree(0) <= 0 and self.denom.degree(0) <= 0

    @property
    def is_rational_number(self):
        return self.is_constant and self.as_expr().is_Rational

    def as_expr(self):
        return self.value.as_expr()

    def as_rational(self):
        expr = self.as_expr()
        if not expr.is_Rational:
            raise UnsupportedConstantField("%s is not a rational number" % render(expr))
        return Rational(expr)

    def coefficients(self):
        """Coefficients in x, lowest degree first, as constant RatFuncs."""
        if not self.is_polynomial:
            raise AmbientMismatch("%s is not a polynomial in %s" % (self, self.field.variable))
        if self.is_zero:
            return []
        field = self.field.function_field.field
        numer, denom = self.numer, self.denom
        return [self._new(field.new(numer.coeff_wrt(0, k), denom)) for k in range(numer.degree(0) + 1)]

    def leading_coefficient(self):
        return self.coefficients()[-1]

    def shift(self, k=1):
        """sigma^k: x -> x + k."""
        if k == 0 or self.is_constant:
            return self
        ring = self.field.ring
        x = ring.gens[0]
        numer = self.numer.compose(x, x + k)
        denom = self.denom.compose(x, x + k)
        return self._new(self.field.function_field.field.new(numer, denom))

    @wrap_dgt_exc
    def evaluate_at(self, point):
        ring = self.field.ring
        denom = self.denom.subs(ring.gens[0], point)
        if not denom:
            raise DivisionByZero("%s has a pole at %s=%s" % (self, self.field.variable, point))
        numer = self.numer.subs(ring.gens[0], point)
        return self._new(self.field.function_field.field.new(numer, denom))

    def specialize(self, assignments, target):
        """Substitute rational values for parameters; result lives in ``target``."""
        ring = self.field.ring
        numer, denom = self.numer, self.denom
        for name in self.field.parameters:
            if name not in assignments:
                continue
            gen = ring.gens[1 + self.field.parameters.index(name)]
            value = QQ.convert(assignments[name])
            denom = denom.subs(gen, value)
            if not denom:
                raise NotWellDefined(name, str(self))
            numer = numer.subs(gen, value)
        return target.element(numer.as_expr() / denom.as_expr())

    def __bool__(self):
        return bool(self.value)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (six.integer_types, Rational)) or \
                (hasattr(other, "is_Number") and other.is_Number):
            return self.value == self.field.element(other).value
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.value))

    def __neg__(self):
        return self._new(-self.value)

    def __pos__(self):
        return self

    def __add__(self, other):
        return self._new(self.value + self._coerce(other).value)

    def __radd__(self, other):
        return self._coerce(other) + self

    def __sub__(self, other):
        return self._new(self.value - self._coerce(other).value)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return self._new(self.value * self._coerce(other).value)

    def __rmul__(self, other):
        return self._coerce(other) * self

    @wrap_dgt_exc
    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.value:
            raise DivisionByZero("division of %s by zero" % self)
        return self._new(self.value / other.value)

    __div__ = __truediv__

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    __rdiv__ = __rtruediv__

    @wrap_dgt_exc
    def __pow__(self, n):
        if n < 0 and not self.value:
            raise DivisionByZero("zero to a negative power")
        return self._new(self.value ** int(n))

    def inverse(self):
        return self.field.one / self

    def __repr__(self):
        return "RatFunc(%s)" % self

    def __str__(self):
        return render(self.as_expr())


@wrap_dgt_exc
def normalize_ratfunc(num, den, field):
    """num/den reduced with a monic denominator."""
    den = field.element(den)
    if den.is_zero:
        raise DivisionByZero("zero denominator")
    return field.element(num) / den


def _monic_factors(poly):
    coeff, factors = poly.factor_list()
    result = []
    lcs = sympy.Integer(1)
    for factor, exponent in factors:
        lcs = lcs * factor.LC() ** exponent
        result.append((factor.monic(), exponent))
    result.sort(key=lambda item: (item[0].degree(), sympy.default_sort_key(item[0].as_expr())))
    return sympy.cancel(coeff * lcs), result


def factor_poly(p, field=None):
    """Factor p into monic irreducibles over its constant field.

    ``p`` is a Poly (any single generator) or a polynomial RatFunc of
    ``field``; the factors come back in the same representation.
    """
    if isinstance(p, RatFunc):
        field = field or p.field
        if p.is_zero:
            raise DivisionByZero("cannot factor the zero polynomial")
        unit, factors = _monic_factors(field.to_poly(p))
        return Factorization(field.element(unit), [(field.from_poly(f), e) for f, e in factors])
    if p.is_zero:
        raise DivisionByZero("cannot factor the zero polynomial")
    unit, factors = _monic_factors(p)
    return Factorization(unit, factors)


def _linear_roots(f):
    if f.is_zero:
        raise DivisionByZero("the zero polynomial has every root")
    roots = []
    for factor, _ in factor_poly(f).factors:
        if factor.degree() == 1:
            roots.append(sympy.cancel(-factor.TC()))
    return roots


def field_roots(f):
    """Roots of f lying in its coefficient field, without multiplicity."""
    return sorted(set(_linear_roots(f)), key=sympy.default_sort_key)


def integer_roots(f):
    """Z(f): the integer zeroes of f."""
    if isinstance(f, RatFunc):
        f = f.field.to_poly(f)
    return sorted(int(r) for r in _linear_roots(f) if r.is_Integer)


def rational_roots(f):
    if isinstance(f, RatFunc):
        f = f.field.to_poly(f)
    if f.get_domain() not in (sympy.ZZ, QQ):
        raise UnsupportedConstantField("rational roots need coefficients in Q, got %s" % f.get_domain())
    return sorted(Rational(r) for r in _linear_roots(f))


THETA = Symbol("theta")
ALG_X = Symbol("xi")


class NumberField(object):
    """Q[theta]/(m) for a monic irreducible m over Q."""

    def __init__(self, minimal_polynomial):
        m = Poly(minimal_polynomial.as_expr().subs(minimal_polynomial.gen, THETA), THETA, domain=QQ) \
            if isinstance(minimal_polynomial, Poly) else Poly(sympify(minimal_polynomial), THETA, domain=QQ)
        if m.degree() < 1:
            raise NotIrreducible("constant modulus %s" % m.as_expr())
        _, factors = factor_poly(m)
        if len(factors) != 1 or factors[0][1] != 1:
            raise NotIrreducible("%s is reducible over Q" % render(m.as_expr()))
        self.modulus = m.monic()
        self.degree = m.degree()

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "NumberField(%s)" % render(self.modulus.as_expr())

    def minimal_polynomial(self, gen):
        return Poly(self.modulus.as_expr().subs(THETA, gen), gen, domain=QQ)

    def element(self, value):
        if isinstance(value, AlgExt):
            return value
        poly = Poly(sympify(value), THETA, domain=QQ)
        return AlgExt(self, poly.rem(self.modulus))

    @cached_property
    def gen(self):
        return self.element(THETA)

    @cached_property
    def one(self):
        return self.element(1)

    @cached_property
    def zero(self):
        return self.element(0)

    def roots(self):
        """The conjugates of theta, rendered exactly."""
        expr = self.modulus.as_expr()
        return [CRootOf(expr, i) for i in range(self.degree)]


def adjoin_root(m):
    return NumberField(m)


class AlgExt(object):
    __slots__ = ("ext", "poly")

    def __init__(self, ext, poly):
        self.ext = ext
        self.poly = poly

    def _coerce(self, other):
        if isinstance(other, AlgExt):
            if other.ext != self.ext:
                raise AmbientMismatch("%r vs %r" % (self.ext, other.ext))
            return other
        return self.ext.element(other)

    def coordinates(self):
        """Coefficients in the power basis 1, theta, ..., theta^(d-1)."""
        coeffs = list(reversed(self.poly.all_coeffs())) if not self.poly.is_zero else []
        coeffs += [0] * (self.ext.degree - len(coeffs))
        return [Rational(c) for c in coeffs]

    @property
    def is_zero(self):
        return self.poly.is_zero

    def __bool__(self):
        return not self.poly.is_zero

    __nonzero__ = __bool__

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (AmbientMismatch, CoercionFailed, TypeError, sympy.SympifyError):
            return NotImplemented
        return self.poly == other.poly

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ext, self.poly))

    def __neg__(self):
        return AlgExt(self.ext, -self.poly)

    def __add__(self, other):
        return AlgExt(self.ext, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __sub__(self, other):
        return AlgExt(self.ext, self.poly - self._coerce(other).poly)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return AlgExt(self.ext, (self.poly * self._coerce(other).poly).rem(self.ext.modulus))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise DivisionByZero("inverse of zero in %r" % self.ext)
        try:
            return AlgExt(self.ext, self.poly.invert(self.ext.modulus))
        except SympyNotInvertible:
            raise DivisionByZero("%s is not invertible" % self)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    __div__ = __truediv__

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        n = int(n)
        base = self if n >= 0 else self.inverse()
        result = self.ext.one
        for _ in range(abs(n)):
            result = result * base
        return result

    def as_expr(self):
        return self.poly.as_expr()

    def __repr__(self):
        return "AlgExt(%s mod %s)" % (self, render(self.ext.modulus.as_expr()))

    def __str__(self):
        return render(self.as_expr())


class AlgPoly(object):
    """Polynomial in x with coefficients in Q[theta]/(m).

    Backed by a Poly in (theta, x) over Q whose theta-degree stays below
    deg m; products are reduced with ``Poly.rem``.
    """

    __slots__ = ("ext", "poly")

    def __init__(self, ext, coeffs=(), poly=None):
        if poly is None:
            expr = sympy.Add(*[ext.element(c).as_expr() * ALG_X ** i for i, c in enumerate(coeffs)])
            poly = Poly(expr, THETA, ALG_X, domain=QQ)
        self.ext = ext
        self.poly = poly.rem(self._modulus(ext))

    @staticmethod
    @lru_cache(maxsize=32)
    def _modulus(ext):
        return Poly(ext.modulus.as_expr(), THETA, ALG_X, domain=QQ)

    @classmethod
    def from_poly(cls, ext, poly):
        """Lift a Poly in x over Q."""
        return cls(ext, poly=Poly(poly.as_expr().subs(poly.gen, ALG_X), THETA, ALG_X, domain=QQ))

    def _lift(self, other):
        if isinstance(other, AlgPoly):
            if other.ext != self.ext:
                raise AmbientMismatch("%r vs %r" % (self.ext, other.ext))
            return other
        if isinstance(other, Poly):
            return AlgPoly.from_poly(self.ext, other)
        return AlgPoly(self.ext, [other])

    @property
    def coeffs(self):
        """AlgExt coefficients, lowest degree first."""
        if self.poly.is_zero:
            return ()
        by_x = Poly(self.poly.as_expr(), ALG_X, domain=QQ[THETA])
        return tuple(self.ext.element(c) for c in reversed(by_x.all_coeffs()))

    @property
    def is_zero(self):
        return self.poly.is_zero

    @property
    def degree(self):
        return self.poly.degree(ALG_X) if not self.poly.is_zero else float("-inf")

    def __eq__(self, other):
        return isinstance(other, AlgPoly) and self.ext == other.ext and self.poly == other.poly

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.poly)

    def __add__(self, other):
        return AlgPoly(self.ext, poly=self.poly + self._lift(other).poly)

    def __neg__(self):
        return AlgPoly(self.ext, poly=-self.poly)

    def __sub__(self, other):
        return AlgPoly(self.ext, poly=self.poly - self._lift(other).poly)

    def __mul__(self, other):
        return AlgPoly(self.ext, poly=self.poly * self._lift(other).poly)

    __rmul__ = __mul__

    def shift(self, k=1):
        """p(x + k)."""
        return AlgPoly(self.ext, poly=Poly(self.poly.as_expr().subs(ALG_X, ALG_X + k), THETA, ALG_X, domain=QQ))

    def as_expr(self, x, root=THETA):
        return self.poly.as_expr().subs({ALG_X: x, THETA: root}, simultaneous=True)
