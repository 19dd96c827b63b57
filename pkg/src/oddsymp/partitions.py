"""Integer partitions, Frobenius hooks and small enumeration helpers."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterable, Iterator

__all__ = [
    "Partition", "as_partition", "conjugate", "partitions_of", "partitions_upto",
    "strict_partitions", "standard_tableaux_count", "FrobeniusHook",
    "frobenius", "from_frobenius",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part, zero past the end."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, size: int) -> tuple[int, ...]:
        if len(self) > size:
            raise ValueError(f"{tuple(self)} has more than {size} parts")
        return tuple(self) + (0,) * (size - len(self))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def __repr__(self):
        return f"Partition({tuple(self)})"

    def to_str(self) -> str:
        return ",".join(map(str, self)) or "0"


def as_partition(value) -> Partition:
    if isinstance(value, Partition):
        return value
    if isinstance(value, str):
        value = [int(x) for x in value.split(",") if x.strip()]
    return Partition(value)


def conjugate(shape) -> Partition:
    shape = as_partition(shape)
    if not shape:
        return Partition()
    return Partition(sum(1 for p in shape if p > j) for j in range(shape[0]))


def partitions_of(d: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``d`` in reverse lexicographic order."""
    if max_part is None:
        max_part = d

    def rec(rest, cap, prefix):
        if rest == 0:
            yield Partition(prefix)
            return
        if max_len is not None and len(prefix) == max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            yield from rec(rest - p, p, prefix + [p])

    yield from rec(d, max_part, [])


def partitions_upto(d: int, max_len: int | None = None) -> list[Partition]:
    return [lam for w in range(d + 1) for lam in partitions_of(w, max_len=max_len)]


def strict_partitions(d: int) -> list[Partition]:
    return [lam for lam in partitions_of(d) if lam.is_strict()]


def standard_tableaux_count(shape) -> int:
    """Hook length formula."""
    shape = as_partition(shape)
    conj = conjugate(shape)
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.weight) // hooks


@dataclass(frozen=True)
class FrobeniusHook:
    """Frobenius coordinates ``(a_1..a_r | b_1..b_r)``: arms and legs on the diagonal."""

    arms: tuple[int, ...]
    legs: tuple[int, ...]

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs differ in length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(a <= b for a, b in zip(seq, seq[1:])):
                raise ValueError(f"{seq} must be strictly decreasing and nonnegative")

    @property
    def rank(self) -> int:
        return len(self.arms)

    @property
    def weight(self) -> int:
        return sum(self.arms) + sum(self.legs) + self.rank


def frobenius(shape) -> FrobeniusHook:
    shape = as_partition(shape)
    conj = conjugate(shape)
    r = sum(1 for i, p in enumerate(shape) if p > i)
    return FrobeniusHook(
        tuple(shape[i] - i - 1 for i in range(r)),
        tuple(conj[i] - i - 1 for i in range(r)),
    )


def from_frobenius(hook: FrobeniusHook) -> Partition:
    r = hook.rank
    if r == 0:
        return Partition()
    rows = [hook.arms[i] + i + 1 for i in range(r)]
    cols = [hook.legs[j] + j + 1 for j in range(r)]
    below = [sum(1 for c in cols if c > i) for i in range(r, cols[0])]
    lam = Partition(rows + below)
    if conjugate(lam)[:r] != tuple(cols):
        raise ValueError(f"{hook} does not describe a partition")
    return lam
