"""
Dimension formulas for GL, Sp and odd symplectic modules.

The odd symplectic module attached to a partition ``λ`` on ``C^{2n+1}``
restricts to ``sp_{2n}`` as the sum of simple modules ``ν`` interleaving
``λ``; its dimension is computed that way.  Weyl products are evaluated in
exact rationals and must come out integral.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .linalg import ExactMatrix, kernel_and_rank
from .partitions import Partition, as_partition
from .tensors import OddSymplecticForm

__all__ = [
    "dim_gl", "dim_sp", "interleavings", "dim_odd", "shtepin_factors",
    "filtration_dimension_check", "h0_line_bundle", "lie_algebra_dim",
    "lie_dimension_check", "LieDimensions", "CENTER_ORDER", "LIE_CHECK_MAX_RANK", "wedge_odd_dim",
]

# order of the center {±1} of the odd symplectic group; quoted, not computed
CENTER_ORDER = 2
LIE_CHECK_MAX_RANK = 4


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return int(x)


def dim_gl(weight: Sequence[int], m: int) -> int:
    """
    Weyl dimension of the ``GL_m`` module with dominant highest weight ``weight``.

    ``weight`` may be a partition (zero-padded to ``m``; 0 if longer) or any
    weakly decreasing integer sequence of length ``m``.
    """
    w = list(weight)
    if len(w) > m:
        if any(w[m:]):
            return 0
        w = w[:m]
    w = w + [0] * (m - len(w))
    if any(a < b for a, b in zip(w, w[1:])):
        raise ValueError(f"weight {tuple(weight)} is not dominant")
    num = Fraction(1)
    for i, j in itertools.combinations(range(m), 2):
        num *= Fraction(w[i] - w[j] + j - i, j - i)
    return _integral(num, "GL dimension")


def dim_sp(nu, n: int) -> int:
    """Weyl dimension of the simple ``Sp_{2n}`` module with highest weight ``nu``."""
    nu = as_partition(nu)
    if nu.length > n:
        return 0
    if n == 0:
        return 1
    parts = nu.padded(n)
    l = [parts[i] + n - i for i in range(n)]
    m = [n - i for i in range(n)]
    val = Fraction(1)
    for i in range(n):
        val *= Fraction(l[i], m[i])
    for i, j in itertools.combinations(range(n), 2):
        val *= Fraction(l[i] ** 2 - l[j] ** 2, m[i] ** 2 - m[j] ** 2)
    return _integral(val, "Sp dimension")


def _between(lam: Partition, count: int) -> list[Partition]:
    """All ``μ`` with ``λ_i >= μ_i >= λ_{i+1}`` for ``i = 1..count``."""
    ranges = [range(lam.part(i), lam.part(i + 1) - 1, -1) for i in range(1, count + 1)]
    return [Partition(c) for c in itertools.product(*ranges)]


def interleavings(lam, n: int) -> list[Partition]:
    """``ν`` with ``λ_1 >= ν_1 >= λ_2 >= ... >= ν_n >= λ_{n+1}``."""
    lam = as_partition(lam)
    if lam.length > n + 1:
        raise ValueError(f"{tuple(lam)} has more than n+1 = {n + 1} parts")
    return _between(lam, n)


def dim_odd(lam, n: int) -> int:
    """Dimension of the trace-free Schur module ``S^<λ> C^{2n+1}``."""
    lam = as_partition(lam)
    if lam.length > n + 1:
        return 0
    return sum(dim_sp(nu, n) for nu in interleavings(lam, n))


def shtepin_factors(lam, n: int) -> list[tuple[Partition, int]]:
    """Patterns ``μ -> λ`` of the filtration, each with its shift ``-(|λ|-|μ|)``."""
    lam = as_partition(lam)
    if lam.length > n + 1:
        raise ValueError(f"{tuple(lam)} has more than n+1 = {n + 1} parts")
    return [(mu, mu.weight - lam.weight) for mu in _between(lam, n + 1)]


def filtration_dimension_check(lam, n: int) -> bool:
    """Factor dimensions of the filtration add up to ``dim_sp(λ, n+1)``."""
    lam = as_partition(lam)
    total = sum(dim_odd(mu, n) for mu, _ in shtepin_factors(lam, n))
    return total == dim_sp(lam, n + 1)


def h0_line_bundle(lam, N: int) -> int:
    """Dimension of sections of ``L_λ`` on the (odd or even) symplectic flag manifold of ``C^N``."""
    lam = as_partition(lam)
    bound = (N - 1) // 2 + 1
    if lam.length > bound:
        raise ValueError(f"line bundle needs at most {bound} parts for N={N}")
    if N % 2:
        return dim_odd(lam, (N - 1) // 2)
    return dim_sp(lam, N // 2)


def lie_algebra_dim(N: int) -> int:
    """Solve ``X^T J + J X = 0`` on ``gl_N`` exactly and return the solution dimension."""
    J = OddSymplecticForm(N).gram()
    unknowns = N * N  # X[c][d] -> c*N + d
    rows = []
    for a in range(N):
        for b in range(N):
            row = [0] * unknowns
            for c in range(N):
                # (X^T J)_{ab} = sum_c X_{ca} J_{cb};  (J X)_{ab} = sum_c J_{ac} X_{cb}
                row[c * N + a] += J[c, b]
                row[c * N + b] += J[a, c]
            rows.append(row)
    _, kernel = kernel_and_rank(ExactMatrix.from_rows(rows, unknowns))
    return len(kernel)


@dataclass(frozen=True)
class LieDimensions:
    sp_even: int
    sp_odd: int
    center_order: int


def lie_dimension_check(n: int) -> LieDimensions:
    if not 1 <= n <= LIE_CHECK_MAX_RANK:
        raise ValueError(f"n must lie in 1..{LIE_CHECK_MAX_RANK}")
    even = lie_algebra_dim(2 * n)
    odd = lie_algebra_dim(2 * n + 1)
    if even != n * (2 * n + 1):
        raise ArithmeticError(f"sp_{2 * n} has dimension {even}, expected {n * (2 * n + 1)}")
    if odd != (n + 1) * (2 * n + 1):
        raise ArithmeticError(f"odd sp has dimension {odd}, expected {(n + 1) * (2 * n + 1)}")
    return LieDimensions(even, odd, CENTER_ORDER)


def wedge_odd_dim(k: int, n: int) -> int:
    """``C(2n+1, k) - C(2n+1, k-2)``, the trace-free part of ``Λ^k C^{2n+1}``."""
    return comb(2 * n + 1, k) - (comb(2 * n + 1, k - 2) if k >= 2 else 0)
