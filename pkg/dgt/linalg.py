# -*- coding: utf-8 -*-
#
# Exact matrices over a TowerField(x).  Dense storage of RatFunc entries,
# heavy lifting (rank, det, inverse, nullspace) delegated to sympy's
# DomainMatrix over the function field.

import logging

from cached_property import cached_property
from sympy.polys.matrices import DomainMatrix

from .field import RatFunc
from .utils import AmbientMismatch, SingularInput

logger = logging.getLogger(__name__)


class RatMatrix(object):
    """Immutable matrix of RatFunc over a single TowerField."""

    def __init__(self, field, rows):
        self.field = field
        self.rows = tuple(tuple(field.element(e) for e in row) for row in rows)
        widths = set(len(row) for row in self.rows)
        if len(widths) > 1:
            raise AmbientMismatch("ragged matrix rows: %s" % sorted(widths))
        self.nrows = len(self.rows)
        self.ncols = widths.pop() if widths else 0

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[field.one if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[field.zero] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, field, entries):
        entries = [field.element(e) for e in entries]
        n = len(entries)
        return cls(field, [[entries[i] if i == j else field.zero for j in range(n)] for i in range(n)])

    @classmethod
    def block_diag(cls, field, blocks):
        size = sum(b.nrows for b in blocks)
        rows = [[field.zero] * size for _ in range(size)]
        offset = 0
        for block in blocks:
            for i in range(block.nrows):
                for j in range(block.ncols):
                    rows[offset + i][offset + j] = block.rows[i][j]
            offset += block.nrows
        return cls(field, rows)

    @classmethod
    def from_domain(cls, field, dm):
        K = field.function_field
        return cls(field, [[RatFunc(field, K.convert(e)) for e in row] for row in dm.to_list()])

    def to_domain(self):
        return DomainMatrix([[e.value for e in row] for row in self.rows],
                            (self.nrows, self.ncols), self.field.function_field)

    @property
    def shape(self):
        return self.nrows, self.ncols

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def entries(self):
        for row in self.rows:
            for e in row:
                yield e

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.field == other.field and self.rows == other.rows

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "RatMatrix(%s)" % self.to_strings()

    def to_strings(self):
        return [[str(e) for e in row] for row in self.rows]

    def _check_shape(self, other, op):
        if self.field != other.field:
            raise AmbientMismatch("%r vs %r" % (self.field, other.field))
        if op == "mul" and self.ncols != other.nrows or op == "add" and self.shape != other.shape:
            raise AmbientMismatch("shape mismatch %s vs %s" % (self.shape, other.shape))

    def __add__(self, other):
        self._check_shape(other, "add")
        return RatMatrix(self.field, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        self._check_shape(other, "add")
        return RatMatrix(self.field, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return RatMatrix(self.field, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, RatMatrix):
            c = self.field.element(other)
            return RatMatrix(self.field, [[c * a for a in r] for r in self.rows])
        self._check_shape(other, "mul")
        zero = self.field.zero
        result = []
        # sparse-aware product: diagonal and block systems are the common case
        for r in self.rows:
            out = [zero] * other.ncols
            for k, a in enumerate(r):
                if a.is_zero:
                    continue
                for j, b in enumerate(other.rows[k]):
                    if not b.is_zero:
                        out[j] = out[j] + a * b
            result.append(out)
        return RatMatrix(self.field, result)

    def __rmul__(self, other):
        return self * other

    def transpose(self):
        return RatMatrix(self.field, [self.column(j) for j in range(self.ncols)])

    @property
    def T(self):
        return self.transpose()

    def shift(self, k=1):
        """Entrywise sigma^k."""
        return RatMatrix(self.field, [[e.shift(k) for e in row] for row in self.rows])

    def apply(self, func):
        return RatMatrix(self.field, [[func(e) for e in row] for row in self.rows])

    def submatrix(self, rows, cols):
        return RatMatrix(self.field, [[self.rows[i][j] for j in cols] for i in rows])

    @property
    def is_zero(self):
        return all(e.is_zero for e in self.entries())

    @property
    def is_diagonal(self):
        return self.is_square and all(
            e.is_zero for i, row in enumerate(self.rows) for j, e in enumerate(row) if i != j)

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    @property
    def is_polynomial(self):
        return all(e.is_polynomial for e in self.entries())

    @cached_property
    def det(self):
        if not self.is_square:
            raise AmbientMismatch("determinant of a %dx%d matrix" % self.shape)
        if self.nrows == 0:
            return self.field.one
        if self.is_diagonal:
            result = self.field.one
            for e in self.diagonal():
                result = result * e
            return result
        return RatFunc(self.field, self.to_domain().det())

    @cached_property
    def rank(self):
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return self.to_domain().rank()

    def inverse(self):
        if self.det.is_zero:
            raise SingularInput("matrix is singular: %s" % self.to_strings())
        if self.is_diagonal:
            return RatMatrix.diag(self.field, [e.inverse() for e in self.diagonal()])
        return RatMatrix.from_domain(self.field, self.to_domain().inv())

    def nullspace(self):
        """Basis of {v : M v = 0}, as a list of tuples."""
        if self.ncols == 0:
            return []
        if self.nrows == 0:
            return list(RatMatrix.identity(self.field, self.ncols).rows)
        null = RatMatrix.from_domain(self.field, self.to_domain().nullspace())
        return [row for row in null.rows if any(not e.is_zero for e in row)]

    def specialize(self, assignments, target):
        return RatMatrix(target, [[e.specialize(assignments, target) for e in row] for row in self.rows])

    def max_degree(self):
        return max([e.degree for e in self.entries() if not e.is_zero] or [0])


class IncrementalEchelon(object):
    """Row echelon form built one vector at a time.

    Vectors are sparse dicts ``{column: FracElement}``; ``add`` reports
    whether the vector was independent of everything added before.
    """

    def __init__(self, field):
        self.field = field
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vector):
        vector = dict((k, v) for k, v in vector.items() if v)
        while vector:
            col = min(c for c in vector if c in self.pivots) if any(c in self.pivots for c in vector) else None
            if col is None:
                break
            factor = vector[col]
            for k, v in self.pivots[col].items():
                value = vector.get(k, 0) - factor * v
                if value:
                    vector[k] = value
                else:
                    vector.pop(k, None)
        return vector

    def add(self, vector):
        vector = self.reduce(vector)
        if not vector:
            return False
        col = min(vector)
        lead = vector[col]
        row = dict((k, v / lead) for k, v in vector.items())
        # keep earlier pivot rows reduced in the new pivot column
        for pivot_col, pivot_row in self.pivots.items():
            factor = pivot_row.get(col)
            if factor:
                for k, v in row.items():
                    value = pivot_row.get(k, 0) - factor * v
                    if value:
                        pivot_row[k] = value
                    else:
                        pivot_row.pop(k, None)
        self.pivots[col] = row
        return True


def as_sparse_vector(matrix):
    """Row-major vec(M) as a sparse dict of FracElements."""
    ncols = matrix.ncols
    return dict((i * ncols + j, e.value) for i, row in enumerate(matrix.rows)
                for j, e in enumerate(row) if not e.is_zero)