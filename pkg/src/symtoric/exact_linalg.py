"""Exact integer linear algebra on dense matrices.

Determinants use fraction-free Bareiss elimination, adjugates come from
signed cofactors, and the Smith normal form routine returns the full
decomposition U @ M @ V == S with unimodular transform witnesses.
Everything runs on Python's arbitrary-precision integers; no floating
point appears anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "DimensionError",
    "IntegerMatrix",
    "SmithDecomposition",
    "determinant",
    "adjugate",
    "smith_normal_form",
]


class DimensionError(ValueError):
    """A matrix or vector has the wrong shape for the requested operation."""


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix with entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntegerMatrix":
        data = [tuple(row) for row in rows]
        ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise DimensionError("rows have unequal lengths")
            for entry in row:
                if not isinstance(entry, int) or isinstance(entry, bool):
                    raise TypeError(f"non-integer entry {entry!r}")
        flat = tuple(entry for row in data for entry in row)
        return cls(len(data), ncols, flat)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector length {len(vector)} != {self.cols} columns")
        return tuple(
            sum(self.at(i, j) * vector[j] for j in range(self.cols))
            for i in range(self.rows)
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            left = self.row(i)
            for j in range(other.cols):
                out.append(sum(left[k] * other.at(k, j) for k in range(self.cols)))
        return IntegerMatrix(self.rows, other.cols, tuple(out))


@dataclass(frozen=True)
class SmithDecomposition:
    """Smith normal form S of a matrix M with witnesses U @ M @ V == S.

    U and V are unimodular, S is diagonal with nonnegative entries, and
    each diagonal entry divides the next.  ``invariant_factors`` lists the
    diagonal of S (nonzero entries first, then any zeros).
    """

    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix
    invariant_factors: tuple[int, ...]


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination.

    The 0x0 determinant is 1 (empty product), matching the convention
    that the trivial cone has trivial parallelotope volume.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division: Bareiss guarantees prev divides the product
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(m: IntegerMatrix) -> IntegerMatrix:
    """Adjugate matrix: m @ adjugate(m) == determinant(m) * identity."""
    if m.rows != m.cols:
        raise DimensionError(f"adjugate needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return m
    if n == 1:
        return IntegerMatrix.from_rows([[1]])
    rows = m.to_rows()
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:i] + row[i + 1 :] for k, row in enumerate(rows) if k != j]
            cof = determinant(IntegerMatrix.from_rows(minor))
            out[i][j] = -cof if (i + j) % 2 else cof
    return IntegerMatrix.from_rows(out)


def smith_normal_form(m: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form over the integers, deterministically.

    Pivot rule: the entry of smallest nonzero absolute value in the
    remaining submatrix, ties broken by lowest (row, col) position.  Row
    and column operations are mirrored into U and V, so U @ M @ V == S
    holds exactly on return.
    """
    nrows, ncols = m.rows, m.cols
    s = m.to_rows()
    u = IntegerMatrix.identity(nrows).to_rows()
    v = IntegerMatrix.identity(ncols).to_rows()

    def swap_rows(a: int, b: int) -> None:
        s[a], s[b] = s[b], s[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a: int, b: int) -> None:
        for row in s:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def negate_row(a: int) -> None:
        s[a] = [-x for x in s[a]]
        u[a] = [-x for x in u[a]]

    def add_row(src: int, dst: int, k: int) -> None:
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src: int, dst: int, k: int) -> None:
        for row in s:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    limit = min(nrows, ncols)
    for t in range(limit):
        while True:
            pivot = None
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    val = abs(s[i][j])
                    if val and (best is None or val < best):
                        best, pivot = val, (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            if s[t][t] < 0:
                negate_row(t)
            p = s[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if s[i][t]:
                    add_row(t, i, -(s[i][t] // p))
                    if s[i][t]:
                        clean = False
            for j in range(t + 1, ncols):
                if s[t][j]:
                    add_col(t, j, -(s[t][j] // p))
                    if s[t][j]:
                        clean = False
            if not clean:
                # a remainder smaller than the pivot appeared; re-pivot
                continue
            offender = None
            for i in range(t + 1, nrows):
                if any(s[i][j] % p for j in range(t + 1, ncols)):
                    offender = i
                    break
            if offender is None:
                break
            # pull the non-divisible row up so the next pivot shrinks
            add_row(offender, t, 1)
    diag = tuple(s[i][i] for i in range(limit))
    return SmithDecomposition(
        U=IntegerMatrix.from_rows(u),
        S=IntegerMatrix.from_rows(s),
        V=IntegerMatrix.from_rows(v),
        invariant_factors=diag,
    )
