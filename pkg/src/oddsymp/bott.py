"""
Bott's theorem on ``G(k, m)``, the ``Λ^j(Λ^2 V)`` plethysm, and the numeric
invariants of the Fano schemes of linear spaces on odd symplectic
grassmannians.

Weights on ``G(k, m)`` are length-``m`` integer tuples: the first ``m-k``
entries describe the quotient bundle ``Q``, the last ``k`` the tautological
bundle ``T``.  ``S_{(1)} T = T`` contributes ``+1`` in the last block, so
``det T^*`` is ``(0, ..., 0, -1, ..., -1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .combinatorics import count_admissible
from .geometry import isotropic_grassmannian_dim
from .partitions import FrobeniusHook, Partition, as_partition, from_frobenius, strict_partitions
from .reptheory import dim_gl, wedge_odd_dim

__all__ = [
    "BottWeight", "BottResult", "lambda_minus", "plethysm_wedge2",
    "plethysm_dimension_identity", "bott_cohomology", "KoszulComponent",
    "KoszulReport", "koszul_acyclicity_check", "plucker_h0", "FanoReport",
    "fano_report", "KOSZUL_MAX_N",
]

KOSZUL_MAX_N = 5


@dataclass(frozen=True)
class BottWeight:
    """``P_k``-dominant weight: weakly decreasing on the first ``m-k`` and on the last ``k`` entries."""

    entries: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        m = len(self.entries)
        if not 0 <= self.k <= m:
            raise ValueError(f"k={self.k} outside 0..{m}")
        head, tail = self.entries[: m - self.k], self.entries[m - self.k :]
        for block in (head, tail):
            if any(a < b for a, b in zip(block, block[1:])):
                raise ValueError(f"weight {self.entries} is not P_{self.k}-dominant")

    @property
    def m(self) -> int:
        return len(self.entries)

    @property
    def rho(self) -> tuple[int, ...]:
        return tuple(range(self.m, 0, -1))


@dataclass(frozen=True)
class BottResult:
    vanishes: bool
    degree: int | None = None
    weight: tuple[int, ...] | None = None
    dim: int = 0
    shifted: tuple[int, ...] = ()  # η + ρ, kept for reporting


def lambda_minus(lam) -> Partition:
    """``(λ_1-1, ..., λ_l-1 | λ_1, ..., λ_l)`` in Frobenius notation."""
    lam = as_partition(lam)
    if not lam.is_strict():
        raise ValueError(f"{tuple(lam)} is not strictly decreasing")
    out = from_frobenius(FrobeniusHook(tuple(p - 1 for p in lam), tuple(lam)))
    assert out.weight == 2 * lam.weight, "hooks (a|a+1) carry 2a+2 boxes"
    return out


def plethysm_wedge2(j: int, rank: int) -> list[Partition]:
    """Highest weights of ``Λ^j(Λ^2 C^rank)`` (all multiplicity one)."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    out = []
    for lam in strict_partitions(j):
        lm = lambda_minus(lam)
        if lm.length <= rank:
            out.append(lm)
    return out


def plethysm_dimension_identity(j: int, rank: int) -> bool:
    total = sum(dim_gl(lm, rank) for lm in plethysm_wedge2(j, rank))
    return total == comb(comb(rank, 2), j)


def _sort_permutation_length(values: Sequence[int]) -> int:
    # inversions relative to strictly decreasing order
    return sum(1 for i in range(len(values)) for j in range(i + 1, len(values)) if values[i] < values[j])


def bott_cohomology(eta: BottWeight | Sequence[int], k: int | None = None) -> BottResult:
    """
    Cohomology of the irreducible bundle ``E_η`` on ``G(k, m)``.

    Vanishes when ``η+ρ`` repeats an entry; otherwise lives in the single
    degree equal to the length of the sorting permutation, with highest
    weight ``sort(η+ρ) - ρ``.
    """
    if not isinstance(eta, BottWeight):
        if k is None:
            raise ValueError("k is required for a raw weight")
        eta = BottWeight(tuple(eta), k)
    shifted = tuple(a + b for a, b in zip(eta.entries, eta.rho))
    if len(set(shifted)) < len(shifted):
        return BottResult(vanishes=True, shifted=shifted)
    degree = _sort_permutation_length(shifted)
    dominant = tuple(a - b for a, b in zip(sorted(shifted, reverse=True), eta.rho))
    return BottResult(False, degree, dominant, dim_gl(dominant, eta.m), shifted)


@dataclass(frozen=True)
class KoszulComponent:
    j: int
    lam_minus: Partition
    eta: BottWeight
    result: BottResult


@dataclass
class KoszulReport:
    k: int
    n: int
    components: list[KoszulComponent] = field(default_factory=list)

    @property
    def acyclic(self) -> bool:
        return all(c.result.vanishes or c.result.degree == 0 for c in self.components)

    @property
    def singular_beyond_one(self) -> bool:
        """Every component with ``j >= 2`` has a repeated entry in ``η+ρ``."""
        return all(c.result.vanishes for c in self.components if c.j >= 2)

    def h0_by_j(self) -> dict[int, int]:
        out = {j: 0 for j in range(comb(self.k, 2) + 1)}
        for c in self.components:
            if not c.result.vanishes and c.result.degree == 0:
                out[c.j] += c.result.dim
        return out


def koszul_acyclicity_check(k: int, n: int) -> KoszulReport:
    """
    Bott analysis of ``Λ^j(Λ^2 T) ⊗ det T^*`` on ``G(k, 2n+1)`` for all ``j``.
    """
    if not 2 <= k <= n <= KOSZUL_MAX_N:
        raise ValueError(f"need 2 <= k <= n <= {KOSZUL_MAX_N}")
    m = 2 * n + 1
    report = KoszulReport(k, n)
    for j in range(comb(k, 2) + 1):
        for lm in plethysm_wedge2(j, k):
            mu = tuple(x - 1 for x in lm.padded(k))
            eta = BottWeight((0,) * (m - k) + mu, k)
            report.components.append(KoszulComponent(j, lm, eta, bott_cohomology(eta)))
    return report


def plucker_h0(k: int, n: int) -> int:
    """``dim Λ^<k> C^{2n+1}``, the span of the Plücker image."""
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in 1..{n + 1}")
    return wedge_odd_dim(k, n)


@dataclass(frozen=True)
class FanoReport:
    """
    Fano scheme of ``P^{2(n-k)+2}``'s on ``G_w(k, 2n+1)``.

    The cohomology ranks are given by a general-(k, n) formula that only the
    case ``n = k = 3`` pins down; ``extrapolated`` flags every other case.
    """

    k: int
    n: int
    components: int
    dim_first: int
    dim_second: int | None
    rank_first: int
    rank_second: int | None
    extrapolated: bool


def fano_report(k: int, n: int) -> FanoReport:
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    two = 3 * k >= 2 * (n + 1)
    dim1 = isotropic_grassmannian_dim(k - 1, 2 * n + 1)
    assert dim1 == (k - 1) * (2 * n - k + 2) - comb(k - 1, 2)
    # blow-up of G_w(k-1, 2n+1) along X_0 = G_w(k-2, 2n), fibres P^{2n-2k+3}
    rank1 = count_admissible(k - 1, 2 * n + 1) + (2 * n - 2 * k + 3) * count_admissible(k - 2, 2 * n)
    dim2 = rank2 = None
    if two:
        sub = 3 * k - 2 * (n + 1)
        dim2 = isotropic_grassmannian_dim(k + 1, 2 * n + 1) + sub * (2 * (n - k) + 3)
        rank2 = comb(k + 1, sub) * count_admissible(k + 1, 2 * n + 1)
    return FanoReport(k, n, 2 if two else 1, dim1, dim2, rank1, rank2, (k, n) != (3, 3))
