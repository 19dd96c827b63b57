"""
Schubert cells of isotropic grassmannians and flag manifolds on ``C^N``.

Cells are counted through their reduced row-echelon matrices: pivots are 1,
everything right of a pivot or below a pivot is 0, entries below a position
opposed to a pivot are fixed by isotropy, and the rest are free affine
coordinates.  For ``N`` odd the first column is the kernel vector ``e_0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Sequence, Union

from .combinatorics import (
    Alphabet, AdmissibleIndex, SignedPermutation, admissible_indices,
    alphabet_for, bruhat_leq, enumerate_weyl_even, enumerate_weyl_odd,
    format_letter, index_leq, rank_function,
)

__all__ = [
    "CellState", "EchelonPattern", "IntPolynomial", "IncidenceCondition",
    "echelon_pattern", "cell_dimension", "poincare_polynomial",
    "odd_flag_poincare_product", "even_flag_poincare_product",
    "isotropic_grassmannian_dim", "flag_manifold_dim", "schubert_divisor",
    "ambient_hyperplane_index", "hyperplane_interval", "variety_contains",
    "incidence_conditions", "cells",
]

CellLabel = Union[AdmissibleIndex, SignedPermutation]


class CellState(enum.Enum):
    ONE = "1"
    ZERO = "0"
    FREE = "*"
    DETERMINED = "•"


@dataclass(frozen=True)
class EchelonPattern:
    pivots: tuple[int, ...]
    alphabet: Alphabet
    grid: tuple[tuple[CellState, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.pivots)

    @property
    def cols(self) -> int:
        return self.alphabet.size

    def count(self, state: CellState) -> int:
        return sum(row.count(state) for row in self.grid)

    @property
    def free_count(self) -> int:
        return self.count(CellState.FREE)

    @property
    def determined_count(self) -> int:
        return self.count(CellState.DETERMINED)

    def render(self) -> str:
        return "\n".join(" ".join(s.value for s in row) for row in self.grid)


def echelon_pattern(pivots: Sequence[int], alphabet: Alphabet | int) -> EchelonPattern:
    """
    State grid of the echelon matrix with the given pivot columns, in row order.

    Works for grassmannian cells (increasing pivots) and flag cells (pivots
    in window order) alike.
    """
    alph = alphabet_for(alphabet) if isinstance(alphabet, int) else alphabet
    pivots = tuple(int(p) for p in pivots)
    if len(set(pivots)) != len(pivots):
        raise ValueError(f"duplicate pivots in {pivots}")
    for p in pivots:
        if p not in alph.letters:
            raise ValueError(f"pivot {p} outside {alph.start}..{alph.stop}")
        if alph.bar(p) in pivots:
            raise ValueError(f"opposed pivots {p} and {alph.bar(p)}")

    grid = []
    for r, p in enumerate(pivots):
        above = pivots[:r]
        row = []
        for c in alph.letters:
            if c == p:
                state = CellState.ONE
            elif c > p or c in above:
                state = CellState.ZERO
            elif any(alph.bar(q) == c for q in above):
                state = CellState.DETERMINED
            else:
                state = CellState.FREE
            row.append(state)
        grid.append(tuple(row))
    return EchelonPattern(pivots, alph, tuple(grid))


def _flag_alphabet(w: SignedPermutation) -> Alphabet:
    if w.odd and w.in_odd_interval:
        return alphabet_for(2 * w.n + 1)
    return w.alphabet


def cell_dimension(cell: CellLabel) -> int:
    """Number of free entries of the cell's echelon matrix."""
    if isinstance(cell, AdmissibleIndex):
        return echelon_pattern(cell.entries, cell.alphabet).free_count
    if isinstance(cell, SignedPermutation):
        return echelon_pattern(cell.window, _flag_alphabet(cell)).free_count
    raise TypeError(f"not a cell label: {cell!r}")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in ``q`` with integer coefficients, constant term first."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_exponents(cls, exponents) -> IntPolynomial:
        exps = list(exponents)
        c = [0] * (max(exps, default=-1) + 1)
        for e in exps:
            c[e] += 1
        return cls(tuple(c))

    @classmethod
    def q_integer(cls, a: int) -> IntPolynomial:
        """``(q^a - 1)/(q - 1) = 1 + q + ... + q^(a-1)``."""
        return cls((1,) * a)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q):
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (size - len(self.coeffs))
        b = other.coeffs + (0,) * (size - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPolynomial(tuple(out))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            coef = str(c) if (c != 1 or e == 0) else ""
            terms.append(coef + mono)
        return " + ".join(terms) or "0"


def isotropic_grassmannian_dim(k: int, N: int) -> int:
    """``dim G_w(k, N)``: ``k(N-k) - C(k,2)`` in both parities."""
    return k * (N - k) - comb(k, 2)


def flag_manifold_dim(N: int) -> int:
    n = N // 2
    return n * n if N % 2 == 0 else n * (n + 1)


def cells(space: str, N: int, k: int | None = None) -> list[CellLabel]:
    """Cell labels of ``G_w(k, N)`` (``space="grass"``) or ``F_w(N)`` (``"flag"``)."""
    if space == "grass":
        if k is None:
            raise ValueError("grassmannian needs k")
        top = N // 2 + (N % 2)
        if not 1 <= k <= top:
            raise ValueError(f"k must lie in 1..{top} for N={N}")
        return list(admissible_indices(k, N))
    if space == "flag":
        n = N // 2
        if n < 1:
            raise ValueError("N must be at least 2")
        return list(enumerate_weyl_odd(n) if N % 2 else enumerate_weyl_even(n))
    raise ValueError(f"unknown space {space!r}")


def poincare_polynomial(space: str, N: int, k: int | None = None) -> IntPolynomial:
    """Sum of ``q^dim`` over all Schubert cells."""
    return IntPolynomial.from_exponents(cell_dimension(c) for c in cells(space, N, k))


def odd_flag_poincare_product(n: int) -> IntPolynomial:
    """``(q^{n+1}-1)(q^{2n}-1)...(q^2-1) / (q-1)^{n+1}`` expanded."""
    out = IntPolynomial.q_integer(n + 1)
    for i in range(1, n + 1):
        out = out * IntPolynomial.q_integer(2 * i)
    return out


def even_flag_poincare_product(n: int) -> IntPolynomial:
    """Type C exponents: product of ``[2i]_q`` for ``i = 1..n``."""
    out = IntPolynomial((1,))
    for i in range(1, n + 1):
        out = out * IntPolynomial.q_integer(2 * i)
    return out


def schubert_divisor(k: int, N: int) -> AdmissibleIndex:
    """The unique codimension-one cell of ``G_w(k, 2n+1)``."""
    if N % 2 == 0:
        raise ValueError("Schubert divisor formula is for odd N")
    n = (N - 1) // 2
    alph = alphabet_for(N)
    if 1 <= k <= n:
        letters = [alph.bar(k + 1)] + [alph.bar(i) for i in range(k - 1, 0, -1)]
    elif k == n + 1:
        letters = [0, n] + [alph.bar(i) for i in range(n - 1, 0, -1)]
    else:
        raise ValueError(f"k must lie in 1..{n + 1}")
    return AdmissibleIndex(tuple(sorted(letters)), alph)


def ambient_hyperplane_index(k: int, n: int) -> AdmissibleIndex:
    """
    Index of the Schubert variety ``{V in G_w(k, 2n+2) : V in C^{2n+1}}``.

    Letters are ``0..2n+1`` with ``bar(i) = 2n+1-i``.
    """
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in 1..{n + 1}")
    alph = Alphabet(2 * n + 2, 0)
    if k < n + 1:
        letters = [alph.bar(i) for i in range(k, 0, -1)]
    else:
        letters = [0] + [alph.bar(i) for i in range(n, 0, -1)]
    return AdmissibleIndex(tuple(sorted(letters)), alph)


def hyperplane_interval(k: int, n: int) -> list[AdmissibleIndex]:
    """``{I <= mu_{k,n}}`` among admissible ``k``-indices of ``C^{2n+2}``."""
    mu = ambient_hyperplane_index(k, n)
    return [I for I in admissible_indices(k, 2 * n + 2, mu.alphabet) if index_leq(I, mu)]


def variety_contains(a: CellLabel, b: CellLabel) -> bool:
    """Whether the cell of ``a`` lies in the Schubert variety of ``b``."""
    if isinstance(a, AdmissibleIndex) and isinstance(b, AdmissibleIndex):
        return index_leq(a, b)
    if isinstance(a, SignedPermutation) and isinstance(b, SignedPermutation):
        return bruhat_leq(a, b)
    raise TypeError("labels must both be indices or both be signed permutations")


@dataclass(frozen=True)
class IncidenceCondition:
    """``dim(V_d  ∩  E_j) (relation) bound`` with ``E_j`` spanned by letters ``<= j``."""

    subspace_dim: int
    flag_level: int
    bound: int
    relation: str  # "=" for cells, ">=" for Schubert varieties

    def __str__(self) -> str:
        return f"dim(V_{self.subspace_dim} ∩ E_{self.flag_level}) {self.relation} {self.bound}"


def incidence_conditions(label: CellLabel, closure: bool = False) -> list[IncidenceCondition]:
    """
    Incidence description of a cell (equalities) or of its closure (``closure=True``).

    Grassmannian closures only need the jump conditions
    ``dim(V ∩ E_{i_a}) >= a``.
    """
    if isinstance(label, AdmissibleIndex):
        k = label.k
        if closure:
            return [IncidenceCondition(k, i, a, ">=") for a, i in enumerate(label.entries, 1)]
        return [
            IncidenceCondition(k, j, sum(1 for i in label.entries if i <= j), "=")
            for j in label.alphabet.letters
        ]
    if isinstance(label, SignedPermutation):
        rel = ">=" if closure else "="
        levels = alphabet_for(2 * label.n + 1).letters if label.odd else label.alphabet.letters
        return [
            IncidenceCondition(d, j, rank_function(label, i, j), rel)
            for d, i in enumerate(label.positions, 1)
            for j in levels
        ]
    raise TypeError(f"not a cell label: {label!r}")


def describe_index(I: AdmissibleIndex) -> str:
    return "(" + ",".join(format_letter(x, I.alphabet) for x in I.entries) + ")"
