"""
Orbits of the odd symplectic group on odd grassmannians and flag manifolds.

Orbits are tracked combinatorially: a dimension, a closure set, and the
Schubert cells they contain.  Membership is read off from where the kernel
letter ``0`` sits in the cell label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .combinatorics import AdmissibleIndex, SignedPermutation
from .geometry import cells, isotropic_grassmannian_dim

__all__ = ["OrbitInfo", "grassmannian_orbits", "flag_orbits", "cell_orbit", "cells_by_orbit"]


@dataclass(frozen=True)
class OrbitInfo:
    id: str
    dimension: int
    codimension: int
    model: str
    closure: frozenset[str]


def grassmannian_orbits(k: int, n: int) -> list[OrbitInfo]:
    """
    Orbits on ``G_w(k, 2n+1)``: ``X_0`` (contains ``e_0``) and ``X_1``.

    For ``k = n+1`` every isotropic subspace contains the kernel and the
    space is homogeneous; a single orbit is reported.
    """
    if not 1 <= k <= n + 1:
        raise ValueError(f"k must lie in 1..{n + 1}")
    total = isotropic_grassmannian_dim(k, 2 * n + 1)
    if k == n + 1:
        return [OrbitInfo(
            "X_0", total, 0,
            f"homogeneous: G_w({n + 1},{2 * n + 1}) ≅ G_w({n},{2 * n})",
            frozenset({"X_0"}),
        )]
    closed = isotropic_grassmannian_dim(k - 1, 2 * n)
    open_dim = isotropic_grassmannian_dim(k, 2 * n) + k
    assert open_dim == total
    return [
        OrbitInfo("X_0", closed, total - closed,
                  f"closed orbit ≅ G_w({k - 1},{2 * n})", frozenset({"X_0"})),
        OrbitInfo("X_1", open_dim, 0,
                  f"open orbit ≅ total space of T* over G_w({k},{2 * n})",
                  frozenset({"X_0", "X_1"})),
    ]


def flag_orbits(n: int) -> list[OrbitInfo]:
    """The ``n+1`` orbits ``O_i`` of ``F_w(2n+1)``, with ``e_0`` first entering at ``V_i``."""
    if n < 1:
        raise ValueError("n must be positive")
    total = n * (n + 1)
    out = []
    for i in range(1, n + 2):
        dim = n * n + i - 1
        out.append(OrbitInfo(
            f"O_{i}", dim, total - dim,
            f"total space of T*_{i - 1} over F_w({2 * n})",
            frozenset(f"O_{j}" for j in range(1, i + 1)),
        ))
    return out


def cell_orbit(label: Union[AdmissibleIndex, SignedPermutation]) -> str:
    """Orbit containing a Schubert cell of an odd ambient."""
    if isinstance(label, AdmissibleIndex):
        if label.N % 2 == 0:
            raise ValueError("orbit stratification needs an odd ambient")
        n = (label.N - 1) // 2
        if label.k == n + 1:
            return "X_0"
        return "X_0" if 0 in label.entries else "X_1"
    if isinstance(label, SignedPermutation):
        if not label.odd:
            raise ValueError("orbit stratification needs an odd ambient")
        if not label.in_odd_interval:
            raise ValueError(f"{label} is not a cell of the odd flag manifold")
        return f"O_{label.window.index(0) + 1}"
    raise TypeError(f"not a cell label: {label!r}")


def cells_by_orbit(space: str, n: int, k: int | None = None) -> dict[str, list]:
    """Partition the cells of ``G_w(k, 2n+1)`` or ``F_w(2n+1)`` by orbit."""
    if space == "grass":
        ids = [o.id for o in grassmannian_orbits(k, n)]
    else:
        ids = [o.id for o in flag_orbits(n)]
    out: dict[str, list] = {i: [] for i in ids}
    for c in cells(space, 2 * n + 1, k):
        out[cell_orbit(c)].append(c)
    return out
