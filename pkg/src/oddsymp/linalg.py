"""Exact rational matrices with fraction-free (Bareiss) elimination."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

__all__ = ["ExactMatrix", "kernel_and_rank", "rank", "SparseEchelon"]


@dataclass(frozen=True)
class ExactMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None) -> ExactMatrix:
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("empty matrix needs an explicit column count")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, size: int) -> ExactMatrix:
        return cls.from_rows(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)], size
        )

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def apply(self, vector: Sequence) -> tuple[Fraction, ...]:
        if len(vector) != self.ncols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in self.rows)

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        if self.ncols != len(other.rows):
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows)) if other.rows else []
        return ExactMatrix.from_rows(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.rows],
            other.ncols,
        )

    def transpose(self) -> ExactMatrix:
        if not self.rows:
            return ExactMatrix((), 0) if self.ncols == 0 else ExactMatrix.zeros(self.ncols, 0)
        return ExactMatrix(tuple(zip(*self.rows)), len(self.rows))


def _integer_rows(M: ExactMatrix) -> list[list[int]]:
    out = []
    for row in M.rows:
        scale = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * scale) for x in row])
    return out


def _bareiss(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """
    Fraction-free forward elimination in place.

    Pivot choice is deterministic: columns left to right, first row with a
    nonzero entry.
    """
    nrows = len(rows)
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        src = next((i for i in range(r, nrows) if rows[i][c]), None)
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        p = rows[r][c]
        for i in range(r + 1, nrows):
            a = rows[i][c]
            ri = rows[i]
            pr = rows[r]
            for j in range(c, ncols):
                ri[j] = (p * ri[j] - a * pr[j]) // prev
        prev = p
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def kernel_and_rank(M: ExactMatrix) -> tuple[int, list[tuple[Fraction, ...]]]:
    """
    Exact rank and a kernel basis of ``M``.

    Kernel vectors are indexed by free columns in increasing order, each with
    a 1 in its own free column and primitive integer entries.
    """
    ncols = M.ncols
    echelon, pivots = _bareiss(_integer_rows(M), ncols)
    rnk = len(pivots)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r in range(rnk - 1, -1, -1):
            c = pivots[r]
            row = echelon[r]
            s = sum((row[j] * x[j] for j in range(c + 1, ncols) if row[j]), Fraction(0))
            x[c] = -s / row[c]
        scale = lcm(*(v.denominator for v in x))
        ints = [int(v * scale) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        basis.append(tuple(Fraction(v // g) for v in ints))
    return rnk, basis


def rank(M: ExactMatrix) -> int:
    return len(_bareiss(_integer_rows(M), M.ncols)[1])


class SparseEchelon:
    """
    Incrementally built echelon basis of a span of sparse exact vectors.

    Vectors are dicts mapping a sortable key to a nonzero rational.  Each
    stored row is monic at its smallest key, and no stored row has support on
    another row's pivot smaller than its own.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector: dict) -> dict:
        v = {k: Fraction(x) for k, x in vector.items() if x}
        done = set()
        while True:
            todo = [k for k in v if k in self.rows and k not in done]
            if not todo:
                return v
            key = min(todo)
            c = v[key]
            for k, x in self.rows[key].items():
                y = v.get(k, 0) - c * x
                if y:
                    v[k] = y
                else:
                    v.pop(k, None)
            done.add(key)

    def add(self, vector: dict) -> bool:
        """Insert ``vector``; return True when it enlarged the span."""
        v = self.reduce(vector)
        if not v:
            return False
        key = min(v)
        c = v[key]
        self.rows[key] = {k: x / c for k, x in v.items()}
        return True

    def basis(self) -> list[dict]:
        return [self.rows[k] for k in sorted(self.rows)]
