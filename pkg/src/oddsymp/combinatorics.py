"""
Signed permutations, admissible indices, rank functions and Bruhat order.

Letters are plain integers listed in their natural order.  For the even
family on ``C^{2n}`` the letters are ``1..2n`` and ``bar(i) = 2n+1-i``; for
the odd family on ``C^{2n+1}`` they are ``0..2n`` with the same pairing and
``0`` unpaired.  Odd-family Weyl elements live inside ``W(C_{n+1})``, whose
letters ``0..2n+1`` add ``bar(0) = 2n+1``.

>>> w = SignedPermutation.parse("1b,2", n=2)
>>> w.window, length(w)
((4, 2), 3)
>>> flatten_prefix(w, 2).entries
(2, 4)
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Alphabet", "SignedPermutation", "AdmissibleIndex",
    "alphabet_for", "format_letter", "parse_letter",
    "enumerate_weyl_even", "enumerate_weyl_odd", "ambient_weyl_odd",
    "odd_interval_top", "length", "flatten_prefix", "bruhat_leq",
    "bruhat_leq_chain_oracle", "rank_function", "rank_table",
    "admissible_indices", "count_admissible", "index_leq",
    "CHAIN_ORACLE_MAX_RANK",
]

CHAIN_ORACLE_MAX_RANK = 5


@dataclass(frozen=True)
class Alphabet:
    """The ``size`` letters ``start, ..., start+size-1`` with their bar pairing."""

    size: int
    start: int

    @property
    def letters(self) -> range:
        return range(self.start, self.start + self.size)

    @property
    def stop(self) -> int:
        return self.start + self.size - 1

    def bar(self, letter: int) -> int | None:
        """Opposed letter, or None for the kernel letter 0 of an odd alphabet."""
        if letter not in self.letters:
            raise ValueError(f"letter {letter} outside {self.start}..{self.stop}")
        if self.size % 2:
            # odd alphabets always start at 0; letter 0 spans the kernel
            return None if letter == 0 else self.size - letter
        return 2 * self.start + self.size - 1 - letter

    def is_barred(self, letter: int) -> bool:
        opp = self.bar(letter)
        return opp is not None and letter > opp


def alphabet_for(N: int) -> Alphabet:
    """Standard letters for ``C^N``: 1-based if N is even, 0-based if odd."""
    if N < 1:
        raise ValueError("N must be positive")
    return Alphabet(N, 0 if N % 2 else 1)


def format_letter(letter: int, alph: Alphabet) -> str:
    """ASCII bar notation, e.g. ``"2b"`` for the letter opposed to 2."""
    if alph.is_barred(letter):
        return f"{alph.bar(letter)}b"
    return str(letter)


def parse_letter(token: str, alph: Alphabet) -> int:
    token = token.strip()
    if token.endswith("b"):
        base = int(token[:-1])
        opp = alph.bar(base)
        if opp is None:
            raise ValueError(f"letter {base} has no bar in this alphabet")
        if alph.is_barred(base):
            raise ValueError(f"{token!r}: {base} is already a barred letter")
        return opp
    letter = int(token)
    if letter not in alph.letters:
        raise ValueError(f"letter {letter} outside {alph.start}..{alph.stop}")
    return letter


@dataclass(frozen=True)
class SignedPermutation:
    """
    Element of the hyperoctahedral group given by its window.

    Even family (``odd=False``): ``W(C_n)``, positions ``1..n``, letters
    ``1..2n``.  Odd family (``odd=True``): elements of ``W(C_{n+1})`` written
    on positions ``0..n`` with letters ``0..2n+1``; members of the odd
    interval avoid the letter ``2n+1`` (that is, 0-bar).
    """

    n: int
    window: tuple[int, ...]
    odd: bool = False

    def __post_init__(self):
        object.__setattr__(self, "window", tuple(int(x) for x in self.window))
        if self.n < 1:
            raise ValueError("rank must be at least 1")
        if len(self.window) != self.m:
            raise ValueError(f"window must have {self.m} letters, got {len(self.window)}")
        alph = self.alphabet
        seen = set()
        for x in self.window:
            if x not in alph.letters:
                raise ValueError(f"letter {x} outside {alph.start}..{alph.stop}")
            pair = frozenset((x, alph.bar(x)))
            if pair in seen:
                raise ValueError(f"window {self.window} repeats an opposed pair")
            seen.add(pair)

    @property
    def m(self) -> int:
        """Rank of the ambient type C Weyl group."""
        return self.n + 1 if self.odd else self.n

    @property
    def alphabet(self) -> Alphabet:
        return Alphabet(2 * self.m, 0 if self.odd else 1)

    @property
    def first_position(self) -> int:
        return 0 if self.odd else 1

    @property
    def positions(self) -> range:
        return range(self.first_position, self.first_position + self.m)

    def __call__(self, position: int) -> int:
        return self.window[position - self.first_position]

    @property
    def in_odd_interval(self) -> bool:
        return self.odd and self.alphabet.stop not in self.window

    def ambient_window(self) -> tuple[int, ...]:
        """Window with letters shifted to ``1..2m``."""
        shift = 1 if self.odd else 0
        return tuple(x + shift for x in self.window)

    @classmethod
    def from_ambient(cls, n: int, window: Sequence[int], odd: bool) -> SignedPermutation:
        shift = 1 if odd else 0
        return cls(n, tuple(x - shift for x in window), odd)

    @classmethod
    def parse(cls, text: str, n: int, odd: bool = False) -> SignedPermutation:
        """Parse a comma separated window in bar notation, e.g. ``"1b,2"``."""
        alph = Alphabet(2 * (n + 1 if odd else n), 0 if odd else 1)
        window = tuple(parse_letter(tok, alph) for tok in text.split(",") if tok.strip())
        return cls(n, window, odd)

    def to_str(self) -> str:
        return ",".join(format_letter(x, self.alphabet) for x in self.window)

    def __str__(self) -> str:
        return self.to_str()


def _full_permutation(ambient: tuple[int, ...]) -> list[int]:
    """Induced permutation of ``1..2m`` as a list indexed from 0."""
    m = len(ambient)
    full = [0] * (2 * m)
    for i, v in enumerate(ambient, start=1):
        full[i - 1] = v
        full[2 * m - i] = 2 * m + 1 - v
    return full


def _length_ambient(ambient: tuple[int, ...]) -> int:
    full = _full_permutation(ambient)
    inv = sum(1 for a, b in itertools.combinations(full, 2) if a > b)
    barred = sum(1 for v in ambient if v > len(ambient))
    total = inv + barred
    assert total % 2 == 0, "half-inversion formula must be integral"
    return total // 2


def length(w: SignedPermutation) -> int:
    """Coxeter length via the ``S_{2m}`` embedding: half of inversions plus bars."""
    return _length_ambient(w.ambient_window())


def _signed_windows(m: int) -> Iterable[tuple[int, ...]]:
    # permutations of a sorted pool come out in lexicographic order
    for window in itertools.permutations(range(1, 2 * m + 1), m):
        if len({min(x, 2 * m + 1 - x) for x in window}) == m:
            yield window


def enumerate_weyl_even(n: int) -> list[SignedPermutation]:
    """All of ``W(C_n)``, lexicographic in natural letter order."""
    return [SignedPermutation(n, w) for w in _signed_windows(n)]


def ambient_weyl_odd(n: int) -> list[SignedPermutation]:
    """All of ``W(C_{n+1})`` written with odd-family (0-based) letters."""
    return [SignedPermutation.from_ambient(n, w, odd=True) for w in _signed_windows(n + 1)]


def odd_interval_top(n: int) -> SignedPermutation:
    """The element ``1b 2b ... nb 0`` bounding the odd interval."""
    alph = Alphabet(2 * n + 2, 0)
    window = tuple(alph.bar(i) for i in range(1, n + 1)) + (0,)
    return SignedPermutation(n, window, odd=True)


def enumerate_weyl_odd(n: int, method: str = "window") -> list[SignedPermutation]:
    """
    The interval ``{w <= 1b 2b ... nb 0}`` inside ``W(C_{n+1})``.

    ``method="window"`` keeps windows avoiding 0-bar; ``method="interval"``
    filters the ambient group with :func:`bruhat_leq`.  Both give the same
    list in the same order.
    """
    everything = ambient_weyl_odd(n)
    if method == "window":
        return [w for w in everything if w.in_odd_interval]
    if method == "interval":
        top = odd_interval_top(n)
        return [w for w in everything if bruhat_leq(w, top)]
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class AdmissibleIndex:
    """Strictly increasing multi-index containing no opposed pair."""

    entries: tuple[int, ...]
    alphabet: Alphabet

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        e = self.entries
        if any(a >= b for a, b in zip(e, e[1:])):
            raise ValueError(f"index {e} is not strictly increasing")
        pairs = set()
        for x in e:
            opp = self.alphabet.bar(x)
            if opp is not None and opp in pairs:
                raise ValueError(f"index {e} contains the opposed pair {{{x}, {opp}}}")
            pairs.add(x)

    @property
    def k(self) -> int:
        return len(self.entries)

    @property
    def N(self) -> int:
        return self.alphabet.size

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def to_str(self) -> str:
        return ",".join(format_letter(x, self.alphabet) for x in self.entries)

    @classmethod
    def parse(cls, text: str, N: int) -> AdmissibleIndex:
        alph = alphabet_for(N)
        entries = tuple(parse_letter(tok, alph) for tok in text.split(",") if tok.strip())
        return cls(tuple(sorted(entries)), alph)


def flatten_prefix(w: SignedPermutation, i: int) -> AdmissibleIndex:
    """The first ``i`` window letters, sorted (``{w(1),...,w(i)}`` arranged upward)."""
    if not 1 <= i <= w.m:
        raise ValueError(f"prefix length {i} outside 1..{w.m}")
    entries = tuple(sorted(w.window[:i]))
    if w.odd and w.alphabet.stop not in entries:
        return AdmissibleIndex(entries, alphabet_for(2 * w.n + 1))
    return AdmissibleIndex(entries, w.alphabet)


def _check_same_group(w: SignedPermutation, v: SignedPermutation):
    if (w.n, w.odd) != (v.n, v.odd):
        raise ValueError("elements belong to different Weyl groups")


def bruhat_leq(w: SignedPermutation, v: SignedPermutation) -> bool:
    """Bruhat order by the sorted-prefix (Proctor) criterion."""
    _check_same_group(w, v)
    for i in range(1, w.m + 1):
        a = sorted(w.window[:i])
        b = sorted(v.window[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


@lru_cache(maxsize=None)
def _reflections(m: int) -> tuple[dict[int, int], ...]:
    """Reflections of ``W(C_m)`` as involutions of ``1..2m``."""
    bar = lambda i: 2 * m + 1 - i  # noqa: E731
    found = {}
    for i in range(1, 2 * m + 1):
        for j in range(i + 1, 2 * m + 1):
            if j == bar(i):
                t = {i: j, j: i}
            else:
                t = {i: j, j: i, bar(i): bar(j), bar(j): bar(i)}
            found.setdefault(frozenset(t.items()), t)
    return tuple(found.values())


@lru_cache(maxsize=None)
def _upper_set(ambient: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Everything reachable by length-raising reflection chains."""
    m = len(ambient)
    refl = _reflections(m)
    seen = {ambient}
    queue = deque([(ambient, _length_ambient(ambient))])
    while queue:
        u, lu = queue.popleft()
        for t in refl:
            v = tuple(t.get(x, x) for x in u)
            if v not in seen and _length_ambient(v) == lu + 1:
                seen.add(v)
                queue.append((v, lu + 1))
    return frozenset(seen)


def bruhat_leq_chain_oracle(w: SignedPermutation, v: SignedPermutation) -> bool:
    """Bruhat order straight from the chain definition (small rank only)."""
    _check_same_group(w, v)
    if w.m > CHAIN_ORACLE_MAX_RANK:
        raise ValueError(f"chain oracle limited to rank {CHAIN_ORACLE_MAX_RANK}")
    return v.ambient_window() in _upper_set(w.ambient_window())


def _rank_alphabet(w: SignedPermutation) -> Alphabet:
    return alphabet_for(2 * w.n + 1) if w.odd else w.alphabet


def rank_function(w: SignedPermutation, i: int, j: int) -> int:
    """Number of graph points ``(p, w(p))`` with ``p <= i`` and ``w(p) <= j``."""
    if i not in w.positions:
        raise ValueError(f"position {i} outside {w.positions.start}..{w.positions.stop - 1}")
    alph = _rank_alphabet(w)
    if j not in alph.letters:
        raise ValueError(f"flag level {j} outside {alph.start}..{alph.stop}")
    upto = i - w.first_position + 1
    return sum(1 for x in w.window[:upto] if x <= j)


def rank_table(w: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """Full rectangle of rank-function values, rows by position."""
    alph = _rank_alphabet(w)
    return tuple(tuple(rank_function(w, i, j) for j in alph.letters) for i in w.positions)


def admissible_indices(k: int, N: int, alphabet: Alphabet | None = None) -> list[AdmissibleIndex]:
    """All admissible ``k``-indices on ``C^N`` (or on an explicit alphabet), lexicographic."""
    alph = alphabet or alphabet_for(N)
    if alph.size != N:
        raise ValueError("alphabet size does not match N")
    out = []
    for combo in itertools.combinations(alph.letters, k):
        s = set(combo)
        if all(alph.bar(x) not in s for x in combo):
            out.append(AdmissibleIndex(combo, alph))
    return out


def count_admissible(k: int, N: int) -> int:
    """Closed-form count of admissible indices."""
    from math import comb

    n = N // 2
    if k < 0:
        return 0
    even = comb(n, k) * 2**k
    if N % 2 == 0:
        return even
    return even + (comb(n, k - 1) * 2 ** (k - 1) if k >= 1 else 0)


def index_leq(I: AdmissibleIndex, J: AdmissibleIndex) -> bool:
    """Componentwise order on indices of the same shape."""
    if I.k != J.k or I.alphabet != J.alphabet:
        raise ValueError("indices have different shapes")
    return all(a <= b for a, b in zip(I.entries, J.entries))
