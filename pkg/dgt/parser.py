# -*- coding: utf-8 -*-
#
# Expression grammar for rational functions, operators in s and Laurent
# polynomials, plus the JSON system files the cli reads.
#
#   expr   := term (('+' | '-') term)*
#   term   := factor (('*' | '/') factor)*
#   factor := '-' factor | base ('^' ['-'] integer)?
#   base   := integer | name | '(' expr ')'

import io
import json
import logging
import re
from collections import namedtuple

import six
import sympy
from sympy import Integer, Symbol
from sympy.polys.polyerrors import BasePolynomialError, CoercionFailed

from .diffsys import DiffSystem
from .field import TowerField
from .galois import DET, DETINV, GroupData, LaurentPoly, entry_names
from .multlattice import ADDITIVE, MULTIPLICATIVE, FGSubgroupData
from .utils import AmbientMismatch, DivisionByZero, ParseError, UnknownIdentifier

logger = logging.getLogger(__name__)

SHIFT = "s"

Token = namedtuple("Token", ["kind", "text", "offset"])

_TOKEN_RE = re.compile(r"\s*(?:(?P<integer>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))")

INTEGER = "integer"
NAME = "name"
OP = "op"
EOF = "eof"


def tokenize(text):
    tokens = []
    pos = 0
    length = len(text)
    while pos < length:
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError("unexpected character %r" % text[offset], text, offset)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token(EOF, "", length))
    return tokens


class Parser(object):
    """Recursive descent over the token list; names outside ``names`` are rejected."""

    def __init__(self, text, names):
        self.text = text
        self.names = dict((n, Symbol(n)) for n in names)
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def _advance(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _error(self, message, token=None):
        token = token or self.current
        return ParseError(message, self.text, token.offset)

    def _accept(self, *ops):
        token = self.current
        if token.kind == OP and token.text in ops:
            self.pos += 1
            return token
        return None

    def parse(self):
        if self.current.kind == EOF:
            raise self._error("empty expression")
        result = self.expr()
        if self.current.kind != EOF:
            raise self._error("unexpected %r" % self.current.text)
        return result

    def expr(self):
        result = self.term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return result
            right = self.term()
            result = result + right if token.text == "+" else result - right

    def term(self):
        result = self.factor()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return result
            right = self.factor()
            if token.text == "*":
                result = result * right
            else:
                if sympy.cancel(right) == 0:
                    raise DivisionByZero("division by zero at offset %d" % token.offset)
                result = result / right

    def factor(self):
        if self._accept("-"):
            return -self.factor()
        base = self.base()
        if self._accept("^"):
            negative = self._accept("-") is not None
            token = self.current
            if token.kind != INTEGER:
                raise self._error("exponent must be an integer")
            self._advance()
            exponent = int(token.text)
            if negative:
                if sympy.cancel(base) == 0:
                    raise DivisionByZero("negative power of zero at offset %d" % token.offset)
                exponent = -exponent
            base = base ** exponent
        return base

    def base(self):
        token = self.current
        if token.kind == INTEGER:
            self._advance()
            return Integer(token.text)
        if token.kind == NAME:
            self._advance()
            if token.text not in self.names:
                raise UnknownIdentifier("unknown identifier %r" % token.text, self.text, token.offset)
            return self.names[token.text]
        if self._accept("("):
            result = self.expr()
            if self._accept(")") is None:
                raise self._error("expected ')'")
            return result
        if token.kind == EOF:
            raise self._error("unexpected end of input")
        raise self._error("unexpected %r" % token.text)


def parse(text, names):
    """Sympy expression for ``text`` over the given identifiers."""
    return Parser(text, names).parse()


def _field_names(field):
    return list(field.parameters) + [field.variable]


def parse_expr(text, field):
    """RatFunc of ``field`` for ``text``."""
    return field.element(parse(text, _field_names(field)))


def parse_operator(text, field):
    """Operator sum a_i(x) s^i, with s standing for the shift."""
    from .ore import DiffOperator

    if SHIFT in _field_names(field):
        raise AmbientMismatch("the name %r is reserved for the shift in operators" % SHIFT)
    expr = parse(text, _field_names(field) + [SHIFT])
    try:
        poly = sympy.Poly(sympy.expand(expr), Symbol(SHIFT), domain=field.function_field)
    except (BasePolynomialError, CoercionFailed):
        raise ParseError("operator is not a polynomial in %s" % SHIFT, text, 0)
    coefficients = [field.element(c) for c in reversed(poly.all_coeffs())]
    return DiffOperator(field, coefficients)


def parse_laurent(text, n, field):
    names = list(field.parameters) + entry_names(n) + [str(DETINV), str(DET)]
    return LaurentPoly(parse(text, names), n, field)


def _parse_at(text, field, where):
    if not isinstance(text, six.string_types):
        text = str(text)
    try:
        return parse_expr(text, field)
    except ParseError as e:
        e.message = "%s: %s" % (where, e.message)
        raise


class SystemFile(object):
    """A system file: tower, matrix, optional group data and guard groups."""

    def __init__(self, field, system, group=None, gammas=(), source=None):
        self.field = field
        self.system = system
        self.group = group
        self.gammas = list(gammas)
        self.source = source

    @classmethod
    def from_dict(cls, data, source=None):
        if "matrix" not in data:
            raise AmbientMismatch("system file has no matrix")
        field = TowerField(data.get("parameters", ()), data.get("variable", "x"))
        rows = [[_parse_at(entry, field, "matrix[%d][%d]" % (i, j)) for j, entry in enumerate(row)]
                for i, row in enumerate(data["matrix"])]
        system = DiffSystem(field, rows)
        group = None
        if data.get("group"):
            block = data["group"]
            n = system.n

            def laurent(key):
                return [parse_laurent(str(text), n, field) for text in block.get(key, ())]

            S = laurent("S")
            T = laurent("T") if "T" in block else S
            group = GroupData(n, S, T, laurent("characters"), int(block.get("components", 1)), field)
        gammas = []
        for block in data.get("gammas", ()):
            kind = block.get("kind", MULTIPLICATIVE)
            if kind not in (ADDITIVE, MULTIPLICATIVE):
                raise AmbientMismatch("unknown group kind %r" % kind)
            generators = [_parse_at(g, field, "gammas") for g in block.get("generators", ())]
            gammas.append(FGSubgroupData(kind, generators, field))
        logger.debug("loaded a %dx%d system over %r", system.n, system.n, field)
        return cls(field, system, group, gammas, source)

    @classmethod
    def load(cls, path):
        try:
            with io.open(path, encoding="utf-8") as f:
                data = json.load(f)
        except (IOError, OSError) as e:
            raise ParseError("cannot read %s: %s" % (path, e.strerror or e))
        except ValueError as e:
            raise ParseError("invalid JSON in %s: %s" % (path, e))
        return cls.from_dict(data, path)


def load_system(path_or_dict):
    if isinstance(path_or_dict, dict):
        return SystemFile.from_dict(path_or_dict)
    return SystemFile.load(path_or_dict)
