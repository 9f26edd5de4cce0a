# -*- coding: utf-8 -*-
#
# Specializations of the tower parameters to rational numbers and the
# checks that tell whether a specialization keeps the Galois group.

import itertools
import logging
from collections import OrderedDict, namedtuple

import sympy
from sympy import Poly, Rational

from .diffsys import DiffSystem, system_dimension
from .field import RatFunc, factor_poly, render
from .galois import CONDITIONAL, GroupData, criterion_check, galois_group_diagonal
from .linalg import RatMatrix
from .multlattice import (
    ADDITIVE,
    MULTIPLICATIVE,
    FGSubgroupData,
    relation_guard_groups,
    relation_lattice,
    verify_relation,
)
from .utils import AmbientMismatch, NotInvertible, UnsupportedConstantField

logger = logging.getLogger(__name__)

PRESERVED = "preserved"
DEGENERATED = "degenerated"
UNDETERMINED = "undetermined"

BASIC_OPEN_NOTE = "in basic open set => good; failure is inconclusive"

RankGuard = namedtuple("RankGuard", ["minor", "rows", "cols", "rank"])


def _rational(value):
    try:
        result = sympy.sympify(value)
    except (sympy.SympifyError, TypeError):
        raise AmbientMismatch("cannot read %r as a number" % (value, ))
    if not result.is_Rational:
        raise UnsupportedConstantField("specialization targets must be rational, got %s" % render(result))
    return Rational(result)


class SpecializationMap(object):
    """phi: parameter -> rational number, one value per tower parameter."""

    def __init__(self, assignments, field=None):
        self.assignments = OrderedDict((str(k), _rational(v)) for k, v in dict(assignments).items())
        self.field = field
        if field is not None:
            self._check(field)

    @classmethod
    def from_strings(cls, items, field=None):
        assignments = OrderedDict()
        for item in items:
            if "=" not in item:
                raise AmbientMismatch("assignment %r is not of the form name=value" % item)
            name, value = item.split("=", 1)
            assignments[name.strip()] = value.strip()
        return cls(assignments, field)

    def _check(self, field):
        unknown = [k for k in self.assignments if k not in field.parameters]
        if unknown:
            raise AmbientMismatch("unknown parameters %s" % unknown)
        missing = [p for p in field.parameters if p not in self.assignments]
        if missing:
            raise AmbientMismatch("parameters %s are not assigned" % missing)

    def target(self, field):
        self._check(field)
        return field.restrict(list(self.assignments))

    def __call__(self, obj):
        return apply_spec(obj, self)

    def __repr__(self):
        return "SpecializationMap(%s)" % ", ".join("%s=%s" % item for item in self.assignments.items())

    def to_dict(self):
        return OrderedDict((k, str(v)) for k, v in self.assignments.items())


def _specialize_poly(poly, phi):
    field = phi.field
    if field is None:
        raise AmbientMismatch("specializing a Poly needs the map's field")
    target = phi.target(field)
    coeffs = [field.element(c).specialize(phi.assignments, target).as_expr() for c in poly.all_coeffs()]
    return Poly(coeffs, poly.gen, domain=target.constant_domain)


def apply_spec(obj, phi):
    """phi(obj) for field elements, matrices, systems, polynomials, groups and group data.

    A vanishing denominator raises NotWellDefined, a singular phi(A) raises
    NotInvertible.
    """
    if isinstance(obj, (list, tuple)):
        return [apply_spec(item, phi) for item in obj]
    if isinstance(obj, RatFunc):
        return obj.specialize(phi.assignments, phi.target(obj.field))
    if isinstance(obj, RatMatrix):
        return obj.specialize(phi.assignments, phi.target(obj.field))
    if isinstance(obj, DiffSystem):
        target = phi.target(obj.field)
        matrix = obj.A.specialize(phi.assignments, target)
        if matrix.det.is_zero:
            raise NotInvertible("phi(A) is singular for %r" % phi)
        return DiffSystem(target, matrix)
    if isinstance(obj, Poly):
        return _specialize_poly(obj, phi)
    if isinstance(obj, FGSubgroupData):
        if obj.field is None:
            raise AmbientMismatch("group generators carry no field")
        target = phi.target(obj.field)
        return FGSubgroupData(obj.kind, [g.specialize(phi.assignments, target) for g in obj.generators], target)
    if isinstance(obj, GroupData):
        return obj.specialize(phi.assignments, phi.target(obj.field))
    raise AmbientMismatch("cannot specialize %r" % (obj, ))


class InjectivityResult(object):

    def __init__(self, group, injective, witness=None, source=None, image=None, reason=None):
        self.group = group
        self.injective = injective
        self.witness = witness
        self.source = source
        self.image = image
        self.reason = reason

    def __bool__(self):
        return self.injective

    __nonzero__ = __bool__

    def to_dict(self):
        result = OrderedDict([("group", self.group.to_dict()), ("injective", self.injective)])
        if not self.injective:
            result["witness"] = self.witness
            if self.reason:
                result["reason"] = self.reason
        return result


def _new_relation(image, source):
    for row in image.basis:
        if not source.member(row):
            return list(row)
    return None


def is_injective_on(phi, group):
    """phi is injective on the group iff it creates no new integer relation among the generators."""
    field = group.field
    target = phi.target(field)
    images = [g.specialize(phi.assignments, target) for g in group.generators]
    if group.kind == MULTIPLICATIVE:
        vanishing = [i for i, g in enumerate(images) if g.is_zero]
        if vanishing:
            witness = [1 if i == vanishing[0] else 0 for i in range(len(images))]
            return InjectivityResult(group, False, witness, reason="generator maps to 0")
    source = relation_lattice(group)
    image = relation_lattice(FGSubgroupData(group.kind, images, target))
    if image == source:
        return InjectivityResult(group, True, source=source, image=image)
    witness = _new_relation(image, source)
    logger.debug("phi %r creates the relation %s on %r", phi, witness, group)
    return InjectivityResult(group, False, witness, source, image)


class BasicOpenResult(object):

    def __init__(self, results):
        self.results = list(results)

    @property
    def member(self):
        return all(r.injective for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.injective]

    def __bool__(self):
        return self.member

    __nonzero__ = __bool__

    def to_dict(self):
        return OrderedDict([
            ("member", self.member),
            ("note", BASIC_OPEN_NOTE),
            ("groups", [r.to_dict() for r in self.results]),
        ])


def basic_open_membership(phi, groups):
    return BasicOpenResult(is_injective_on(phi, g) for g in groups)


class PreservationReport(object):
    """Symbolic against specialized Galois group of a diagonal system."""

    def __init__(self, phi, symbolic, specialized, witness=None, witness_f=None, verified=None,
                 basic_open=None):
        self.phi = phi
        self.well_defined = True
        self.symbolic_lattice = symbolic.lattice
        self.specialized_lattice = specialized.lattice
        self.dims = (symbolic.dimension, specialized.dimension)
        self.verdict = PRESERVED if symbolic.lattice == specialized.lattice else DEGENERATED
        self.witness = witness
        self.witness_f = witness_f
        self.verified = verified
        self.monotone = specialized.lattice.contains_lattice(symbolic.lattice)
        self.basic_open = basic_open

    @property
    def preserved(self):
        return self.verdict == PRESERVED

    def to_dict(self):
        result = OrderedDict([
            ("assignments", self.phi.to_dict()),
            ("well_defined", self.well_defined),
            ("verdict", self.verdict),
            ("witness", self.witness),
        ])
        if self.witness is not None:
            result["witness_f"] = str(self.witness_f)
            result["verified"] = self.verified
        result["symbolic_lattice"] = self.symbolic_lattice.basis_list()
        result["specialized_lattice"] = self.specialized_lattice.basis_list()
        result["dims"] = list(self.dims)
        result["monotone"] = self.monotone
        result["basic_open"] = self.basic_open.to_dict() if self.basic_open is not None else None
        return result


def preservation_report(system, phi):
    if not system.is_diagonal:
        raise AmbientMismatch("preservation reports are exact for diagonal systems only")
    values = system.diagonal()
    symbolic = galois_group_diagonal(values)
    specialized_system = apply_spec(system, phi)
    specialized_values = specialized_system.diagonal()
    specialized = galois_group_diagonal(specialized_values)

    witness = witness_f = verified = None
    if symbolic.lattice != specialized.lattice:
        witness = _new_relation(specialized.lattice, symbolic.lattice)
        if witness is not None:
            witness_f = specialized.lattice.witness(witness)
            verified = verify_relation(specialized_values, witness, witness_f, 1)

    try:
        basic_open = basic_open_membership(phi, relation_guard_groups(values, 1))
    except UnsupportedConstantField as e:
        logger.info("no basic open check: %s", e)
        basic_open = None

    report = PreservationReport(phi, symbolic, specialized, witness, witness_f, verified, basic_open)
    if not report.monotone:
        logger.warning("specialized lattice %s misses symbolic relations %s",
                       specialized.lattice.basis_list(), symbolic.lattice.basis_list())
    return report


def integer_root_guard(f):
    """Additive group of 1, lc(f) and the non-integer roots of f.

    A specialization injective on it keeps the integer roots of f; f must
    split into linear factors over its tower.
    """
    field = f.field
    factorization = factor_poly(f)
    generators = [field.one]
    if f.leading_coefficient() != field.one:
        generators.append(f.leading_coefficient())
    for factor, _ in factorization.factors:
        if factor.degree != 1:
            raise UnsupportedConstantField("%s does not split over %r" % (f, field))
        root = -factor.coefficients()[0]
        if root.is_rational_number and root.as_rational().is_Integer:
            continue
        if root not in generators:
            generators.append(root)
    return FGSubgroupData(ADDITIVE, generators, field)


def rank_guard(matrix):
    """A nonzero maximal minor of the matrix with its row and column indices."""
    r = matrix.rank
    if r == 0:
        return RankGuard(matrix.field.one, (), (), 0)
    for rows in itertools.combinations(range(matrix.nrows), r):
        for cols in itertools.combinations(range(matrix.ncols), r):
            minor = matrix.submatrix(rows, cols).det
            if not minor.is_zero:
                return RankGuard(minor, rows, cols, r)
    raise AssertionError("rank %d without a nonzero minor" % r)


def preserves_rank(matrix, phi):
    return apply_spec(matrix, phi).rank == matrix.rank


class CriterionReport(object):

    def __init__(self, phi, before, after):
        self.phi = phi
        self.before = before
        self.after = after

    @property
    def verdict(self):
        if not self.before.is_group:
            return UNDETERMINED
        return PRESERVED if self.after.is_group else DEGENERATED

    def to_dict(self):
        return OrderedDict([
            ("assignments", self.phi.to_dict()),
            ("verdict", self.verdict),
            ("note", CONDITIONAL),
            ("before", self.before.to_dict()),
            ("after", self.after.to_dict()),
        ])


def criterion_report(system, group, phi):
    """Criterion verdict before and after phi for general systems with group data."""
    before = criterion_check(group, system)
    after = criterion_check(apply_spec(group, phi), apply_spec(system, phi))
    return CriterionReport(phi, before, after)


def dimension_consistent(system, phi):
    """dim([A]) and dim([phi(A)]) agree."""
    return system_dimension(system) == system_dimension(apply_spec(system, phi))
