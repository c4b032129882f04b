"""Immutable dense matrices over an exact scalar field."""

from fractions import Fraction

from .exact import RatFun, format_rational, is_symbolic

__all__ = ["ExactMatrix", "format_entry"]


def format_entry(x):
    if is_symbolic(x):
        if isinstance(x, RatFun) and x.is_constant():
            return format_rational(x.constant_value())
        return str(x)
    return format_rational(x)


class ExactMatrix:
    """Row-major rectangular matrix.  Entries are Fractions or symbolic
    values from :mod:`gencesaro.exact`; nothing is ever rounded."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data):
        data = [list(r) for r in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if any(len(r) != self.cols for r in data):
            raise ValueError("ragged matrix rows")
        self.entries = tuple(
            Fraction(x) if isinstance(x, int) else x for r in data for x in r)

    @classmethod
    def from_function(cls, rows, cols, fn):
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls.from_function(n, n, lambda i, j: Fraction(int(i == j)))

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls.from_function(n, n, lambda i, j: values[i] if i == j else Fraction(0))

    @property
    def shape(self):
        return self.rows, self.cols

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self):
        return ExactMatrix.from_function(self.cols, self.rows, lambda i, j: self[j, i])

    def leading(self, k):
        """Upper-left k x k block."""
        return ExactMatrix.from_function(k, k, lambda i, j: self[i, j])

    def map(self, fn):
        return ExactMatrix([[fn(x) for x in self.row(i)] for i in range(self.rows)])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.entries[j::other.cols] for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.append([_dot(r, c) for c in cols])
        return ExactMatrix(out)

    def __add__(self, other):
        self._same_shape(other)
        return ExactMatrix.from_function(self.rows, self.cols, lambda i, j: self[i, j] + other[i, j])

    def __sub__(self, other):
        self._same_shape(other)
        return ExactMatrix.from_function(self.rows, self.cols, lambda i, j: self[i, j] - other[i, j])

    def __neg__(self):
        return self.map(lambda x: -x)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def apply(self, vector):
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return [_dot(self.row(i), vector) for i in range(self.rows)]

    def is_square(self):
        return self.rows == self.cols

    def is_symmetric(self):
        return self.is_square() and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i))

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.entries, other.entries))

    __hash__ = None

    def to_strings(self):
        return [[format_entry(x) for x in self.row(i)] for i in range(self.rows)]

    def __repr__(self):
        return f"ExactMatrix({self.to_strings()!r})"


def _dot(a, b):
    acc = Fraction(0)
    for x, y in zip(a, b):
        if x == 0 or y == 0:
            continue
        acc = acc + x * y
    return acc
