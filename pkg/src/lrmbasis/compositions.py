"""Compositions, partitions and the combinatorics that index the B-basis.

A composition of ``n`` is a tuple of positive integers summing to ``n``;
it corresponds bijectively to a subset of ``[n-1]`` via its proper
partial sums (``set_of`` / ``comp_of``).  Two orders live here:

* ``refines(alpha, beta)``: alpha splits into contiguous chunks with sums
  beta_1, ..., beta_p (equivalently ``set_of(beta) <= set_of(alpha)``);
* ``partition_refines(lam, mu)``: some rearrangement of lam refines mu.

>>> set_of(Composition((1, 2, 1)))
frozenset({1, 3})
>>> comp_of({1, 5}, 9)
Composition(1, 4, 4)
>>> eta(Composition((2, 1, 1)), Composition((2, 2)))
2
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class WeightMismatch(ValueError):
    """Raised when two compositions that must have the same size do not."""


class Composition(tuple):
    """An immutable sequence of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def partial_sums(self) -> tuple[int, ...]:
        """The ``len(self) + 1`` partial sums, starting with 0."""
        return tuple(itertools.accumulate(self, initial=0))

    def __repr__(self) -> str:
        return f"Composition{tuple(self)!r}".replace(",)", ")")

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"


class Partition(Composition):
    """A composition whose parts are weakly decreasing."""

    def __new__(cls, parts: Iterable[int] = ()):
        self = super().__new__(cls, parts)
        if any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {tuple(self)}")
        return self

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}".replace(",)", ")")


@dataclass(frozen=True)
class MarginMatrix:
    """Nonnegative integer matrix with column sums ``col_sums`` and row sums ``row_sums``."""

    entries: tuple[tuple[int, ...], ...]
    col_sums: Composition
    row_sums: Composition

    def __post_init__(self):
        if len(self.entries) != len(self.row_sums):
            raise ValueError("row count does not match row_sums")
        for row, s in zip(self.entries, self.row_sums):
            if len(row) != len(self.col_sums) or sum(row) != s or min(row, default=0) < 0:
                raise ValueError(f"bad row {row} for row sum {s}")
        for j, s in enumerate(self.col_sums):
            if sum(row[j] for row in self.entries) != s:
                raise ValueError(f"column {j} does not sum to {s}")


def parse_composition(text: str) -> Composition:
    """Parse ``"2,1,1"`` (parentheses and blanks tolerated); ``""`` is the empty composition."""
    text = text.strip().strip("()").strip()
    if not text:
        return Composition()
    return Composition(int(p) for p in text.split(","))


def parse_subset(text: str) -> frozenset[int]:
    text = text.strip().strip("{}").strip()
    if not text:
        return frozenset()
    return frozenset(int(p) for p in text.split(","))


def format_subset(s: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(s))) + "}"


def _check_same_weight(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise WeightMismatch(f"{tuple(a)} and {tuple(b)} have different sizes")


def set_of(alpha: Sequence[int]) -> frozenset[int]:
    """Proper partial sums of ``alpha`` (a subset of ``[n-1]``)."""
    return frozenset(itertools.accumulate(alpha[:-1]))


def comp_of(subset: Iterable[int], n: int) -> Composition:
    """Inverse of :func:`set_of`: consecutive differences of ``0 < i_1 < ... < n``."""
    points = sorted(set(subset))
    if points and (points[0] < 1 or points[-1] > n - 1):
        raise ValueError(f"subset {points} is not contained in [1, {n - 1}]")
    if n == 0:
        return Composition()
    bounds = [0, *points, n]
    return Composition(b - a for a, b in zip(bounds, bounds[1:]))


def blocks(alpha: Sequence[int]) -> list[tuple[int, int]]:
    """The alpha-blocks as closed intervals ``(first, last)`` of ``[n]``."""
    sums = list(itertools.accumulate(alpha, initial=0))
    return [(sums[i] + 1, sums[i + 1]) for i in range(len(alpha))]


def underlying_partition(alpha: Sequence[int]) -> Partition:
    return Partition(sorted(alpha, reverse=True))


def are_anagrams(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return underlying_partition(alpha) == underlying_partition(beta)


def refines(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """True iff alpha refines beta (beta's partial sums all occur among alpha's)."""
    _check_same_weight(alpha, beta)
    return set_of(beta) <= set_of(alpha)


def strictly_refines(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    return refines(alpha, beta) and tuple(alpha) != tuple(beta)


def partition_refines(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff the parts of ``lam`` can be grouped so that the group sums are the parts of ``mu``."""
    _check_same_weight(lam, mu)
    return _groupable(tuple(sorted(lam, reverse=True)), tuple(sorted(mu, reverse=True)))


def strictly_partition_refines(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return partition_refines(lam, mu) and sorted(lam) != sorted(mu)


@lru_cache(maxsize=None)
def _groupable(parts: tuple[int, ...], targets: tuple[int, ...]) -> bool:
    # parts and targets sorted decreasingly; fill the largest target first
    if not targets:
        return not parts
    first, rest = targets[0], targets[1:]
    for chosen in _submultisets_with_sum(parts, first):
        remaining = list(parts)
        for c in chosen:
            remaining.remove(c)
        if _groupable(tuple(remaining), rest):
            return True
    return False


def _submultisets_with_sum(parts: tuple[int, ...], target: int) -> Iterator[tuple[int, ...]]:
    """Distinct sub-multisets of ``parts`` (sorted decreasingly) with the given sum."""
    counts = sorted(Counter(parts).items(), reverse=True)

    def rec(i: int, left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield ()
            return
        if i == len(counts):
            return
        value, mult = counts[i]
        for k in range(min(mult, left // value), -1, -1):
            for tail in rec(i + 1, left - k * value):
                yield (value,) * k + tail

    return rec(0, target)


def grouping_functions(beta: Sequence[int], alpha: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All maps f: [len(beta)] -> [len(alpha)] (0-based) with alpha_j = sum of beta_i over f(i) = j."""
    _check_same_weight(beta, alpha)
    beta, alpha = tuple(beta), tuple(alpha)
    p = len(beta)
    # suffix sums let us prune when the remaining parts cannot fill the open slack
    suffix = list(itertools.accumulate(reversed(beta), initial=0))[::-1]
    room = list(alpha)
    f = [0] * p

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == p:
            if not any(room):
                yield tuple(f)
            return
        if sum(room) != suffix[i]:
            return
        for j, r in enumerate(room):
            if beta[i] <= r:
                room[j] -= beta[i]
                f[i] = j
                yield from rec(i + 1)
                room[j] += beta[i]

    return rec(0)


@lru_cache(maxsize=None)
def _eta(beta: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    return sum(1 for _ in grouping_functions(beta, alpha))


def eta(beta: Sequence[int], alpha: Sequence[int]) -> int:
    """Number of f: [len(beta)] -> [len(alpha)] with alpha_j = sum_{f(i)=j} beta_i."""
    if len(beta) > 12:
        raise ValueError("eta is only evaluated by enumeration for len(beta) <= 12")
    _check_same_weight(beta, alpha)
    return _eta(tuple(beta), tuple(alpha))


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n in lexicographic order (``[()]`` for n = 0)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _compositions_of(n)


@lru_cache(maxsize=None)
def _compositions_of(n: int) -> list[Composition]:
    out = [comp_of(s, n) for k in range(n) for s in itertools.combinations(range(1, n), k)]
    if n == 0:
        out = [Composition()]
    return sorted(out)


def partitions_of(n: int) -> list[Partition]:
    """Partitions of n, ordered by decreasing length, then lexicographically."""
    seen = {underlying_partition(a) for a in compositions_of(n)}
    return sorted(seen, key=lambda lam: (-len(lam), tuple(lam)))


def matrices_with_margins(alpha: Sequence[int], beta: Sequence[int]) -> Iterator[MarginMatrix]:
    """Nonnegative integer matrices with column sums alpha and row sums beta.

    Rows are indexed by beta, columns by alpha; entries are filled row-major
    and each entry runs through its feasible values in increasing order.
    """
    _check_same_weight(alpha, beta)
    alpha, beta = Composition(alpha), Composition(beta)
    q = len(alpha)
    cols_left = list(alpha)
    rows: list[tuple[int, ...]] = []

    def fill_row(j: int, left: int, row: list[int]) -> Iterator[tuple[int, ...]]:
        if j == q - 1:
            if left <= cols_left[j]:
                yield (*row, left)
            return
        # the remaining columns must be able to absorb what is left
        spare = sum(cols_left[j + 1:])
        for x in range(max(0, left - spare), min(left, cols_left[j]) + 1):
            yield from fill_row(j + 1, left - x, [*row, x])

    def rec(i: int) -> Iterator[MarginMatrix]:
        if i == len(beta):
            if not any(cols_left):
                yield MarginMatrix(tuple(rows), alpha, beta)
            return
        if q == 0:
            return
        for row in fill_row(0, beta[i], []):
            for j, x in enumerate(row):
                cols_left[j] -= x
            rows.append(row)
            yield from rec(i + 1)
            rows.pop()
            for j, x in enumerate(row):
                cols_left[j] += x

    return rec(0)


def read(matrix: MarginMatrix | Sequence[Sequence[int]]) -> Composition:
    """Concatenate the rows left to right, top to bottom, dropping zeros."""
    entries = matrix.entries if isinstance(matrix, MarginMatrix) else matrix
    return Composition(x for row in entries for x in row if x)
