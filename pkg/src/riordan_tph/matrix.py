"""Small exact dense matrices over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Matrix:
    """Immutable dense matrix of :class:`fractions.Fraction`."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(_frac(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self._rows = rows
        self._ncols = ncols
        self._check()

    def _check(self) -> None:
        pass

    @classmethod
    def from_function(cls, nrows: int, ncols: int, fn: Callable[[int, int], object]):
        return cls([[fn(i, j) for j in range(ncols)] for i in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int):
        return cls.from_function(n, n, lambda i, j: int(i == j))

    @classmethod
    def diagonal(cls, values: Sequence):
        n = len(values)
        return cls.from_function(n, n, lambda i, j: values[i] if i == j else 0)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self._rows), self._ncols

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"{type(self).__name__}({[[str(v) for v in r] for r in self._rows]})"

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    @property
    def T(self) -> Matrix:
        m, n = self.shape
        return Matrix([[self._rows[i][j] for i in range(m)] for j in range(n)], m)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self._ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)],
                      self._ncols)

    def __matmul__(self, other: Matrix) -> Matrix:
        m, k = self.shape
        k2, n = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(n)]
        out = []
        for r in self._rows:
            nz = [(t, v) for t, v in enumerate(r) if v]
            out.append([sum((v * c[t] for t, v in nz), Fraction(0)) for c in cols])
        return Matrix(out, n)

    def apply(self, vec: Sequence) -> list[Fraction]:
        """Matrix-vector product."""
        if len(vec) != self._ncols:
            raise ValueError("vector length does not match column count")
        v = [_frac(x) for x in vec]
        return [sum((a * b for a, b in zip(r, v) if a), Fraction(0)) for r in self._rows]

    def leading(self, n: int, m: int | None = None) -> Matrix:
        """Top-left ``n x m`` block (``m`` defaults to ``n``)."""
        m = n if m is None else m
        return Matrix([r[:m] for r in self._rows[:n]], m)

    def is_lower_triangular(self) -> bool:
        return all(v == 0 for i, r in enumerate(self._rows) for v in r[i + 1:])

    def is_symmetric(self) -> bool:
        m, n = self.shape
        return m == n and all(self._rows[i][j] == self._rows[j][i]
                              for i in range(n) for j in range(i))


class TriMatrix(Matrix):
    """Square lower-triangular matrix."""

    __slots__ = ()

    def _check(self) -> None:
        m, n = self.shape
        if m != n:
            raise ValueError("TriMatrix must be square")
        if not self.is_lower_triangular():
            raise ValueError("TriMatrix has nonzero entries above the diagonal")

    @property
    def n(self) -> int:
        return len(self._rows)

    def __matmul__(self, other):
        out = Matrix.__matmul__(self, other)
        if isinstance(other, TriMatrix):
            return TriMatrix(out.rows, out.shape[1])
        return out

    def inverse(self) -> TriMatrix:
        """Inverse by forward substitution; diagonal entries must be nonzero."""
        n = self.n
        r = self._rows
        if any(r[i][i] == 0 for i in range(n)):
            raise ZeroDivisionError("singular triangular matrix")
        inv = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            inv[j][j] = 1 / r[j][j]
            for i in range(j + 1, n):
                acc = sum((r[i][k] * inv[k][j] for k in range(j, i) if r[i][k]), Fraction(0))
                inv[i][j] = -acc / r[i][i]
        return TriMatrix(inv, n)


class SymMatrix(Matrix):
    """Square symmetric matrix."""

    __slots__ = ()

    def _check(self) -> None:
        if not self.is_symmetric():
            raise ValueError("SymMatrix is not symmetric")

    @property
    def n(self) -> int:
        return len(self._rows)


def first_difference(a: Matrix, b: Matrix):
    """First ``(i, j, a_ij, b_ij)`` where the matrices differ, or None."""
    if a.shape != b.shape:
        return ("shape", a.shape, b.shape)
    for i, (ra, rb) in enumerate(zip(a.rows, b.rows)):
        for j, (x, y) in enumerate(zip(ra, rb)):
            if x != y:
                return (i, j, x, y)
    return None
