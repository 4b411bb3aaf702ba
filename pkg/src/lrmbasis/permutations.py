"""Permutations of [n] in one-line notation.

Convention: the product ``u * w`` is the composite ``(u * w)(i) = u(w(i))``.
This is the only convention under which the one-line embedding into words
is equivariant for the right action, so it is used everywhere.

Values are 1-based; ``w(i)`` evaluates the permutation at ``i``.

>>> w = Permutation.parse("672491853")
>>> sorted(lrm(w))
[1, 2, 6]
>>> str(w.inverse())
'639481275'
>>> clrm_prime(w)
Composition(1, 4, 4)
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .compositions import Composition, comp_of

#: enumeration guard for :func:`all_permutations`
MAX_ENUMERATION_N = 8


class SizeMismatch(ValueError):
    pass


class Permutation(tuple):
    """A permutation of [n], stored as the tuple ``(w(1), ..., w(n))``.

    Ordering and hashing are those of the underlying tuple, so ``<`` is the
    lexicographic order on one-line notation.
    """

    def __new__(cls, one_line: Iterable[int] = ()):
        values = tuple(int(x) for x in one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> "Permutation":
        return super().__new__(cls, values)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls._trusted(tuple(range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Accept ``"672491853"`` (n <= 9) or ``"6,7,2,4,9,1,8,5,3"``."""
        text = text.strip().strip("()[]").strip()
        if "," in text:
            return cls(int(x) for x in text.split(","))
        if " " in text:
            return cls(int(x) for x in text.split())
        if len(text) > 9:
            raise ValueError("compact one-line notation is only accepted for n <= 9; use commas")
        return cls(int(c) for c in text)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return tuple.__getitem__(self, i - 1)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __rmul__(self, other):
        return NotImplemented

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def compose(u: Permutation, w: Permutation) -> Permutation:
    """The product ``uw``, i.e. ``i -> u(w(i))``."""
    if len(u) != len(w):
        raise SizeMismatch(f"cannot compose permutations of sizes {len(u)} and {len(w)}")
    return Permutation._trusted(tuple(u[x - 1] for x in w))


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return Permutation._trusted(tuple(inv))


def descent_set(w: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def lrm(w: Sequence[int]) -> frozenset[int]:
    """Entries smaller than every entry to their left."""
    return frozenset(lrm_sequence(w))


def lrm_prime(w: Sequence[int]) -> frozenset[int]:
    return frozenset(x - 1 for x in lrm_sequence(w) if x > 1)


def clrm_prime(w: Sequence[int]) -> Composition:
    return comp_of(lrm_prime(w), len(w))


def lrm_sequence(w: Sequence[int]) -> tuple[int, ...]:
    """Left-to-right minima in reading order (hence strictly decreasing)."""
    out = []
    low = len(w) + 1
    for x in w:
        if x < low:
            out.append(x)
            low = x
    return tuple(out)


def lex_less(u: Permutation, w: Permutation) -> bool:
    if len(u) != len(w):
        raise SizeMismatch("lexicographic comparison needs equal sizes")
    return tuple(u) < tuple(w)


def v_shape_valley(word: Sequence[int]) -> int | None:
    """1-based valley position if ``word`` strictly decreases then strictly increases."""
    if not word:
        return None
    k = 0
    while k + 1 < len(word) and word[k] > word[k + 1]:
        k += 1
    for a, b in zip(word[k:], word[k + 1:]):
        if a >= b:
            return None
    return k + 1


def has_v_shape_on(w: Permutation, i: int, j: int) -> int | None:
    """Valley position (relative to the window, 1-based) of ``w(i), ..., w(j)``, or None."""
    if not 1 <= i <= j <= len(w):
        raise ValueError(f"bad interval [{i}, {j}] for n = {len(w)}")
    return v_shape_valley(w[i - 1:j])


def all_permutations(n: int, *, allow_large: bool = False) -> Iterator[Permutation]:
    """Every element of S_n once, in lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ENUMERATION_N and not allow_large:
        raise ValueError(f"refusing to enumerate S_{n}; pass allow_large=True")
    return (Permutation._trusted(p) for p in itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def permutation_list(n: int) -> tuple[Permutation, ...]:
    """Cached lexicographic list of S_n (the shared coordinate order)."""
    return tuple(all_permutations(n))


@lru_cache(maxsize=None)
def permutation_index(n: int) -> dict[tuple[int, ...], int]:
    return {p: i for i, p in enumerate(permutation_list(n))}


def lrm_sequence_by_recursion(w: Permutation) -> tuple[int, ...]:
    """LRMs via ``lrm_j = w(min w^{-1}([lrm_{j-1} - 1]))`` starting from ``n + 1``."""
    winv = inverse(w)
    out = []
    prev = len(w) + 1
    while prev > 1:
        pos = min(winv[x - 1] for x in range(1, prev))
        prev = w(pos)
        out.append(prev)
    return tuple(out)
