"""
The acceptance suite: fourteen exact checks tying closed formulas to
enumerations and brute-force oracles.

Each check returns a :class:`CriterionResult`.  ``run_all`` runs them in
order with parameter ranges taken from a :class:`VerifyParams`, which the
``quick`` level shrinks and a JSON config file may override.
"""

from __future__ import annotations

import dataclasses
import json
import os
import time
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable

from . import bott, combinatorics as cb, geometry as geo, orbits, reptheory as rt
from .partitions import partitions_of, partitions_upto
from .tensors import trace_free_schur_dim

__all__ = ["CriterionResult", "VerifyParams", "params_for", "load_config", "CRITERIA", "run_all", "LEVEL_ENV"]

LEVEL_ENV = "OSP_VERIFY_LEVEL"


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.name}: {self.detail} ({self.seconds:.2f}s)"


@dataclass(frozen=True)
class VerifyParams:
    weyl_even_max_n: int = 4
    weyl_odd_max_n: int = 4
    interval_max_n: int = 3
    length_even_max_n: int = 4
    length_odd_max_n: int = 3
    poincare_max_n: int = 3
    bruhat_ranks: tuple[int, ...] = (2, 3)
    echelon_even_max_n: int = 3
    echelon_odd_max_n: int = 2
    orbit_max_n: int = 3
    oracle_max_weight: int = 4
    oracle_ranks: tuple[int, ...] = (1, 2)
    shtepin_max_weight: int = 5
    shtepin_max_n: int = 3
    borel_weil_max_rank: int = 5
    koszul_max_n: int = 4
    plethysm_max_j: int = 6
    plethysm_max_rank: int = 6
    fano_max_n: int = 8
    lie_max_n: int = 3


_QUICK = dict(
    weyl_even_max_n=3, weyl_odd_max_n=3, length_even_max_n=3, poincare_max_n=2,
    bruhat_ranks=(2,), echelon_even_max_n=2, orbit_max_n=2, oracle_max_weight=3,
    oracle_ranks=(1,), shtepin_max_weight=4, shtepin_max_n=2, koszul_max_n=3,
    plethysm_max_j=4, plethysm_max_rank=4, fano_max_n=6, lie_max_n=2,
)


def params_for(level: str, overrides: dict | None = None) -> VerifyParams:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown verify level {level!r}")
    base = VerifyParams() if level == "full" else VerifyParams(**_QUICK)
    if not overrides:
        return base
    known = {f.name for f in dataclasses.fields(VerifyParams)}
    unknown = set(overrides) - known
    if unknown:
        raise ValueError(f"unknown verify parameters: {sorted(unknown)}")
    fixed = {k: tuple(v) if isinstance(v, list) else v for k, v in overrides.items()}
    return dataclasses.replace(base, **fixed)


def load_config(path: str) -> dict:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("verify config must be a JSON object")
    return data


def default_level() -> str:
    return os.environ.get(LEVEL_ENV, "full")


class _Failure(Exception):
    pass


def _expect(cond: bool, msg: str):
    if not cond:
        raise _Failure(msg)


# --- the criteria ---------------------------------------------------------


def weyl_counts(p: VerifyParams) -> str:
    for n in range(1, p.weyl_even_max_n + 1):
        got = len(cb.enumerate_weyl_even(n))
        _expect(got == 2**n * factorial(n), f"|W(Sp_{2 * n})| = {got}")
    for n in range(1, p.weyl_odd_max_n + 1):
        got = len(cb.enumerate_weyl_odd(n))
        _expect(got == 2**n * factorial(n + 1), f"|W_{2 * n + 1}| = {got}")
    for n in range(1, p.interval_max_n + 1):
        a = cb.enumerate_weyl_odd(n, "window")
        b = cb.enumerate_weyl_odd(n, "interval")
        _expect(set(a) == set(b), f"interval and window descriptions differ at n={n}")
    return f"even n<={p.weyl_even_max_n}, odd n<={p.weyl_odd_max_n}, interval n<={p.interval_max_n}"


def longest_lengths(p: VerifyParams) -> str:
    for n in range(1, p.length_even_max_n + 1):
        top = max(cb.length(w) for w in cb.enumerate_weyl_even(n))
        _expect(top == n * n, f"even n={n}: max length {top}")
    for n in range(1, p.length_odd_max_n + 1):
        top = max(cb.length(w) for w in cb.enumerate_weyl_odd(n))
        _expect(top == n * (n + 1), f"odd n={n}: max length {top}")
    return f"n^2 for n<={p.length_even_max_n}, n(n+1) for n<={p.length_odd_max_n}"


def poincare(p: VerifyParams) -> str:
    for n in range(1, p.poincare_max_n + 1):
        got = geo.poincare_polynomial("flag", 2 * n + 1)
        want = geo.odd_flag_poincare_product(n)
        _expect(got == want, f"n={n}: {got} != {want}")
    _expect(geo.poincare_polynomial("flag", 3).coeffs == (1, 2, 1), "P(F_w(3)) != 1+2q+q^2")
    return f"cell sums equal the product formula for n<={p.poincare_max_n}"


def bruhat_oracle(p: VerifyParams) -> str:
    total = 0
    for n in p.bruhat_ranks:
        group = cb.enumerate_weyl_even(n)
        for w in group:
            for v in group:
                total += 1
                _expect(cb.bruhat_leq(w, v) == cb.bruhat_leq_chain_oracle(w, v),
                        f"orders disagree on {w.to_str()} <= {v.to_str()}")
    return f"{total} pairs agree"


def echelon_dimensions(p: VerifyParams) -> str:
    d8 = geo.cell_dimension(cb.AdmissibleIndex.parse("4,6,8", 8))
    d9 = geo.cell_dimension(cb.AdmissibleIndex.parse("4,6,8", 9))
    _expect((d8, d9) == (9, 12), f"dim C_(4,6,8) = {d8} / {d9}")
    checked = 0
    for n in range(1, p.echelon_even_max_n + 1):
        for w in cb.enumerate_weyl_even(n):
            _expect(geo.cell_dimension(w) == cb.length(w), f"{w.to_str()}: dim != length")
            checked += 1
    for n in range(1, p.echelon_odd_max_n + 1):
        for w in cb.enumerate_weyl_odd(n):
            _expect(geo.cell_dimension(w) == cb.length(w), f"{w.to_str()}: dim != length")
            checked += 1
    return f"(4,6,8): 9 and 12; {checked} flag cells with dim = length"


def admissible_counts(p: VerifyParams) -> str:
    a, b = len(cb.admissible_indices(2, 7)), len(cb.admissible_indices(4, 7))
    _expect((a, b) == (18, 8), f"counts {a}, {b}")
    _expect((cb.count_admissible(2, 7), cb.count_admissible(4, 7)) == (18, 8), "closed form disagrees")
    return "|I_{2,7}| = 18, |I_{4,7}| = 8"


def orbit_stratification(p: VerifyParams) -> str:
    for n in range(1, p.orbit_max_n + 1):
        table = orbits.flag_orbits(n)
        _expect([o.codimension for o in table] == list(range(n, -1, -1)), f"codims at n={n}")
        parts = orbits.cells_by_orbit("flag", n)
        counts = {k: len(v) for k, v in parts.items()}
        _expect(set(counts.values()) == {2**n * factorial(n)}, f"per-orbit counts {counts}")
        for k in range(1, n + 2):
            for oid, labels in orbits.cells_by_orbit("grass", n, k).items():
                for I in labels:
                    has_zero = 0 in I.entries
                    _expect(has_zero == (oid == "X_0") or k == n + 1, f"{I.to_str()} in {oid}")
            if k <= n:
                x0 = len(orbits.cells_by_orbit("grass", n, k)["X_0"])
                _expect(x0 == cb.count_admissible(k - 1, 2 * n), f"|X_0 cells| at k={k}, n={n}")
    return f"n<={p.orbit_max_n}"


def representation_dimensions(p: VerifyParams) -> str:
    count = 0
    for n in p.oracle_ranks:
        for lam in partitions_upto(p.oracle_max_weight):
            want = rt.dim_odd(lam, n)
            got = trace_free_schur_dim(lam, 2 * n + 1)
            _expect(want == got, f"lambda={tuple(lam)}, n={n}: formula {want}, oracle {got}")
            if lam.length > n + 1:
                _expect(want == 0, f"lambda={tuple(lam)} too long but dim {want}")
            count += 1
    return f"{count} (lambda, n) pairs match the tensor oracle"


def shtepin_identity(p: VerifyParams) -> str:
    count = 0
    for n in range(1, p.shtepin_max_n + 1):
        for lam in partitions_upto(p.shtepin_max_weight, max_len=n + 1):
            _expect(rt.filtration_dimension_check(lam, n), f"lambda={tuple(lam)}, n={n}")
            count += 1
    return f"{count} cases"


def borel_weil(p: VerifyParams) -> str:
    for r in range(1, p.borel_weil_max_rank + 1):
        n = r - 1
        for lam in partitions_upto(p.shtepin_max_weight, max_len=r):
            _expect(rt.h0_line_bundle(lam, 2 * n + 2) == rt.dim_sp(lam, r), f"even lambda={tuple(lam)}")
        if n >= 1:
            for k in range(1, n + 2):
                want = comb(2 * n + 1, k) - (comb(2 * n + 1, k - 2) if k >= 2 else 0)
                _expect(rt.h0_line_bundle((1,) * k, 2 * n + 1) == want, f"wedge k={k}, n={n}")
    return f"n+1<={p.borel_weil_max_rank}"


def koszul(p: VerifyParams) -> str:
    count = 0
    for n in range(2, p.koszul_max_n + 1):
        for k in range(2, n + 1):
            rep = bott.koszul_acyclicity_check(k, n)
            _expect(rep.acyclic, f"(k,n)=({k},{n}) has higher cohomology")
            _expect(rep.singular_beyond_one, f"(k,n)=({k},{n}) has a regular j>=2 term")
            count += 1
    return f"{count} (k,n) pairs acyclic, singular for j>=2"


def plethysm(p: VerifyParams) -> str:
    for j in range(p.plethysm_max_j + 1):
        for r in range(1, p.plethysm_max_rank + 1):
            _expect(bott.plethysm_dimension_identity(j, r), f"j={j}, r={r}")
    return f"j<={p.plethysm_max_j}, r<={p.plethysm_max_rank}"


def fano_values(p: VerifyParams) -> str:
    rep = bott.fano_report(3, 3)
    got = (rep.components, rep.dim_first, rep.dim_second, rep.rank_first, rep.rank_second)
    _expect(got == (2, 9, 9, 36, 32), f"fano(3,3) = {got}")
    equal = [
        (k, n) for n in range(2, p.fano_max_n + 1) for k in range(2, n + 1)
        if (r := bott.fano_report(k, n)).components == 2 and r.dim_first == r.dim_second
    ]
    _expect(equal == [(3, 3)], f"equal-dimension cases {equal}")
    return f"(2, 9, 9, 36, 32); equal dims only at (3,3) for n<={p.fano_max_n}"


def lie_dimensions(p: VerifyParams) -> str:
    for n in range(1, p.lie_max_n + 1):
        dims = rt.lie_dimension_check(n)
        _expect((dims.sp_even, dims.sp_odd) == (n * (2 * n + 1), (n + 1) * (2 * n + 1)), f"n={n}")
    return f"n<={p.lie_max_n}"


CRITERIA: list[tuple[int, str, Callable[[VerifyParams], str]]] = [
    (1, "Weyl counts", weyl_counts),
    (2, "longest lengths", longest_lengths),
    (3, "Poincare polynomials", poincare),
    (4, "Bruhat oracle equivalence", bruhat_oracle),
    (5, "echelon dimensions", echelon_dimensions),
    (6, "admissible counts", admissible_counts),
    (7, "orbit stratification", orbit_stratification),
    (8, "representation dimensions", representation_dimensions),
    (9, "filtration identity", shtepin_identity),
    (10, "Borel-Weil consistency", borel_weil),
    (11, "Koszul acyclicity", koszul),
    (12, "plethysm identity", plethysm),
    (13, "Fano values", fano_values),
    (14, "Lie algebra dimensions", lie_dimensions),
]


def run_criterion(number: int, params: VerifyParams) -> CriterionResult:
    _, name, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        detail, ok = fn(params), True
    except _Failure as exc:
        detail, ok = str(exc), False
    return CriterionResult(number, name, ok, detail, time.perf_counter() - start)


def run_all(params: VerifyParams, only: list[int] | None = None) -> list[CriterionResult]:
    numbers = only or [c[0] for c in CRITERIA]
    return [run_criterion(i, params) for i in numbers]
