"""
Brute-force construction of Schur powers and trace-free tensors.

Everything here works on explicit tensors in ``V^{⊗d}`` with exact
arithmetic, so it can serve as an independent check of the closed
dimension formulas in :mod:`oddsymp.reptheory`.  Tensors are sparse dicts
from index tuples (basis positions ``0..N-1``) to rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .combinatorics import Alphabet, alphabet_for
from .linalg import ExactMatrix, SparseEchelon, kernel_and_rank
from .partitions import Partition, as_partition, conjugate, standard_tableaux_count

__all__ = [
    "MAX_DEGREE", "MAX_DIM", "OddSymplecticForm", "contraction_matrix",
    "apply_contraction", "young_symmetrizer", "schur_subspace",
    "trace_free_schur_dim", "symmetrizer_scalar",
]

MAX_DEGREE = 4
MAX_DIM = 7

Tensor = dict  # index tuple -> Fraction


@dataclass(frozen=True)
class OddSymplecticForm:
    """
    Standard skew form on ``C^N`` in the (odd) symplectic basis.

    ``omega(e_i, e_{bar i}) = 1`` for unbarred ``i >= 1`` and ``-1`` for barred
    ``i``; for odd ``N`` the letter ``0`` spans the kernel.
    """

    N: int

    @property
    def alphabet(self) -> Alphabet:
        return alphabet_for(self.N)

    def pair(self, a: int, b: int) -> int:
        """``omega(e_a, e_b)`` for basis positions ``a, b`` in ``0..N-1``."""
        alph = self.alphabet
        la, lb = alph.letters[a], alph.letters[b]
        if alph.bar(la) != lb:
            return 0
        return -1 if alph.is_barred(la) else 1

    def gram(self) -> ExactMatrix:
        return ExactMatrix.from_rows(
            [[self.pair(a, b) for b in range(self.N)] for a in range(self.N)], self.N
        )


def _check_caps(d: int, N: int):
    if d > MAX_DEGREE:
        raise ValueError(f"tensor degree {d} exceeds cap {MAX_DEGREE}")
    if N > MAX_DIM:
        raise ValueError(f"dimension {N} exceeds cap {MAX_DIM}")


def apply_contraction(t: Tensor, p: int, q: int, form: OddSymplecticForm) -> Tensor:
    """``phi_pq`` on a sparse tensor; ``p < q`` are 1-based tensor slots."""
    out: Tensor = {}
    for idx, c in t.items():
        w = form.pair(idx[p - 1], idx[q - 1])
        if not w:
            continue
        rest = idx[: p - 1] + idx[p : q - 1] + idx[q:]
        out[rest] = out.get(rest, 0) + w * c
    return {k: v for k, v in out.items() if v}


def contraction_matrix(p: int, q: int, d: int, form: OddSymplecticForm) -> ExactMatrix:
    """Matrix of ``phi_pq: V^{⊗d} -> V^{⊗(d-2)}`` in lexicographic tensor bases."""
    if not 1 <= p < q <= d:
        raise ValueError(f"need 1 <= p < q <= d, got p={p}, q={q}, d={d}")
    _check_caps(d, form.N)
    N = form.N
    src = list(itertools.product(range(N), repeat=d))
    dst = {idx: r for r, idx in enumerate(itertools.product(range(N), repeat=d - 2))}
    rows = [[0] * len(src) for _ in dst]
    for col, idx in enumerate(src):
        for rest, v in apply_contraction({idx: 1}, p, q, form).items():
            rows[dst[rest]][col] = v
    return ExactMatrix.from_rows(rows, len(src))


def _tableau_groups(shape: Partition) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Row and column groups of the row-reading tableau, as slot permutations."""
    d = shape.weight
    rows, start = [], 0
    for part in shape:
        rows.append(list(range(start, start + part)))
        start += part
    cols = [[rows[i][j] for i in range(len(rows)) if j < len(rows[i])] for j in range(shape[0] if shape else 0)]

    def group(blocks):
        perms = []
        for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
            sigma = list(range(d))
            for block, image in zip(blocks, choice):
                for a, b in zip(block, image):
                    sigma[a] = b
            perms.append(tuple(sigma))
        return perms

    return group(rows), group(cols)


def _sign(sigma: tuple[int, ...]) -> int:
    seen, s = set(), 1
    for i in range(len(sigma)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = sigma[j]
            length += 1
        s *= -1 if length % 2 == 0 else 1
    return s


def _act(sigma: tuple[int, ...], idx: tuple[int, ...]) -> tuple[int, ...]:
    # the factor in slot k moves to slot sigma[k]
    out = [0] * len(idx)
    for k, v in enumerate(idx):
        out[sigma[k]] = v
    return tuple(out)


@lru_cache(maxsize=None)
def _symmetrizer_data(shape: Partition):
    row_group, col_group = _tableau_groups(shape)
    return row_group, [(q, _sign(q)) for q in col_group]


def young_symmetrizer(shape, t: Tensor) -> Tensor:
    """Apply ``c = a·b`` (row symmetrizer after signed column antisymmetrizer)."""
    shape = as_partition(shape)
    row_group, col_group = _symmetrizer_data(shape)
    step: Tensor = {}
    for idx, c in t.items():
        for q, s in col_group:
            key = _act(q, idx)
            step[key] = step.get(key, 0) + s * c
    out: Tensor = {}
    for idx, c in step.items():
        if not c:
            continue
        for p in row_group:
            key = _act(p, idx)
            out[key] = out.get(key, 0) + c
    return {k: Fraction(v) for k, v in out.items() if v}


def symmetrizer_scalar(shape) -> Fraction:
    """``c·c = (d!/f^λ)·c`` where ``f^λ`` counts standard tableaux."""
    shape = as_partition(shape)
    return Fraction(factorial(shape.weight), standard_tableaux_count(shape))


def _column_strict_indices(shape: Partition, N: int):
    """
    Basis tensors whose entries strictly increase down each column.

    The antisymmetrizer kills tensors repeating a letter within a column and
    only changes the sign under column permutations, so these suffice to
    span the image.
    """
    d = shape.weight
    cols = conjugate(shape)
    slot_of = {}
    start = 0
    for i, part in enumerate(shape):
        for j in range(part):
            slot_of[(i, j)] = start + j
        start += part
    col_choices = [itertools.combinations(range(N), h) for h in cols]
    for choice in itertools.product(*col_choices):
        idx = [0] * d
        for j, letters in enumerate(choice):
            for i, v in enumerate(letters):
                idx[slot_of[(i, j)]] = v
        yield tuple(idx)


def schur_subspace(shape, N: int) -> list[Tensor]:
    """Basis of ``S_λ C^N`` inside ``(C^N)^{⊗|λ|}`` as the Young symmetrizer image."""
    shape = as_partition(shape)
    _check_caps(shape.weight, N)
    span = SparseEchelon()
    for idx in _column_strict_indices(shape, N):
        span.add(young_symmetrizer(shape, {idx: Fraction(1)}))
    return span.basis()


def trace_free_schur_dim(shape, N: int) -> int:
    """``dim (S_λ C^N ∩ ⋂ ker phi_pq)`` for the standard form on ``C^N``."""
    shape = as_partition(shape)
    d = shape.weight
    basis = schur_subspace(shape, N)
    if d < 2 or not basis:
        return len(basis)
    form = OddSymplecticForm(N)
    pairs = list(itertools.combinations(range(1, d + 1), 2))
    keys = [(pq, rest) for pq in pairs for rest in itertools.product(range(N), repeat=d - 2)]
    pos = {k: i for i, k in enumerate(keys)}
    # columns are basis vectors, rows are coordinates of the stacked contractions
    cols = []
    for b in basis:
        col = [0] * len(keys)
        for p, q in pairs:
            for rest, v in apply_contraction(b, p, q, form).items():
                col[pos[((p, q), rest)]] = v
        cols.append(col)
    M = ExactMatrix.from_rows(zip(*cols), len(cols))
    _, kernel = kernel_and_rank(M)
    return len(kernel)
