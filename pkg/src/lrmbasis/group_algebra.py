"""Sparse exact elements of the group algebra Q[S_n] and the B-basis.

Multiplication follows the permutation convention ``(uw)(i) = u(w(i))``.
Large integer products are routed through the compiled convolution kernel
(:mod:`lrmbasis.kernels`); everything else uses the dictionary path.

>>> print(b_element((2, 1)))
123 + 132 + 231
>>> b_element((1, 1)) * b_element((1, 1)) == 2 * b_element((1, 1))
True
"""
from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from . import kernels
from ._tables import MAX_TABLE_N
from .compositions import (Composition, WeightMismatch, are_anagrams, blocks,
                           matrices_with_margins, read, refines, set_of)
from .permutations import (Permutation, all_permutations, compose, descent_set,
                           permutation_index, permutation_list)

Scalar = int | Fraction


class DegreeMismatch(ValueError):
    pass


def _as_scalar(x) -> Scalar:
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


class GroupAlgebraElement:
    """An immutable finite sum ``sum_w c_w w`` over S_n with exact coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        self.n = n
        clean: dict[Permutation, Scalar] = {}
        for w, c in (terms or {}).items():
            if not isinstance(w, Permutation):
                w = Permutation(w)
            if len(w) != n:
                raise DegreeMismatch(f"permutation {w} does not lie in S_{n}")
            c = _as_scalar(c)
            if c:
                clean[w] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, terms: dict[Permutation, Scalar]) -> "GroupAlgebraElement":
        self = cls.__new__(cls)
        self.n = n
        self._terms = terms
        self._hash = None
        return self

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls._trusted(n, {})

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls._trusted(n, {Permutation.identity(n): 1})

    @classmethod
    def basis(cls, w: Permutation) -> "GroupAlgebraElement":
        """The element delta_w."""
        return cls(len(w), {w: 1})

    @classmethod
    def sum_of(cls, n: int, perms: Iterable[Permutation]) -> "GroupAlgebraElement":
        terms: dict[Permutation, Scalar] = {}
        for w in perms:
            terms[w] = terms.get(w, 0) + 1
        return cls(n, terms)

    @classmethod
    def from_vector(cls, n: int, vector: Sequence[Scalar]) -> "GroupAlgebraElement":
        perms = permutation_list(n)
        if len(vector) != len(perms):
            raise DegreeMismatch(f"vector of length {len(vector)} for S_{n}")
        return cls._trusted(n, {w: _as_scalar(c) for w, c in zip(perms, vector) if c})

    # -- inspection ---------------------------------------------------------

    def coefficient(self, w: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(w), 0)

    def items(self) -> list[tuple[Permutation, Scalar]]:
        """Terms in lexicographic order of the permutations."""
        return sorted(self._terms.items())

    def support(self) -> list[Permutation]:
        return sorted(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.support())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def to_vector(self) -> list[Scalar]:
        """Dense coefficients over S_n in lexicographic order."""
        index = permutation_index(self.n)
        vec: list[Scalar] = [0] * len(index)
        for w, c in self._terms.items():
            vec[index[w]] = c
        return vec

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.n != other.n:
            raise DegreeMismatch(f"elements of Q[S_{self.n}] and Q[S_{other.n}]")

    def __add__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return GroupAlgebraElement._trusted(self.n, terms)

    def __neg__(self):
        return GroupAlgebraElement._trusted(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Scalar) -> "GroupAlgebraElement":
        k = _as_scalar(k)
        if not k:
            return GroupAlgebraElement.zero(self.n)
        return GroupAlgebraElement._trusted(self.n, {w: _as_scalar(c * k) for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return convolve(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def right_translate(self, w: Permutation) -> "GroupAlgebraElement":
        """``self * delta_w``."""
        if len(w) != self.n:
            raise DegreeMismatch("translation by a permutation of another size")
        return GroupAlgebraElement._trusted(self.n, {compose(u, w): c for u, c in self._terms.items()})

    def left_translate(self, w: Permutation) -> "GroupAlgebraElement":
        """``delta_w * self``."""
        if len(w) != self.n:
            raise DegreeMismatch("translation by a permutation of another size")
        return GroupAlgebraElement._trusted(self.n, {compose(w, u): c for u, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- text and JSON ------------------------------------------------------

    def __str__(self) -> str:
        return format_terms((str(w), c) for w, c in self.items())

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.n}, {str(self)!r})"

    def to_json_obj(self) -> list[dict]:
        return [{"perm": str(w) if self.n <= 9 else ",".join(map(str, w)),
                 "num": Fraction(c).numerator, "den": Fraction(c).denominator}
                for w, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, n: int, data: list[dict]) -> "GroupAlgebraElement":
        terms: dict[Permutation, Scalar] = {}
        for entry in data:
            w = Permutation.parse(entry["perm"])
            terms[w] = terms.get(w, 0) + Fraction(entry["num"], entry.get("den", 1))
        return cls(n, terms)

    @classmethod
    def from_json(cls, n: int, text: str) -> "GroupAlgebraElement":
        return cls.from_json_obj(n, json.loads(text))


def format_terms(terms: Iterable[tuple[str, Scalar]]) -> str:
    """Render ``[(label, c), ...]`` as ``label + 2·label - 1/2·label``; empty sum is ``0``."""
    out = []
    for label, c in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = label if mag == 1 else f"{mag}·{label}"
        out.append((sign, body))
    if not out:
        return "0"
    head_sign, head = out[0]
    text = ("-" if head_sign == "-" else "") + head
    return text + "".join(f" {s} {b}" for s, b in out[1:])


def convolve(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """The product ``a * b``: coefficient of w is the sum of a_u b_v over uv = w."""
    a._check(b)
    n = a.n
    if not a or not b:
        return GroupAlgebraElement.zero(n)
    dense_cost = len(permutation_index(n)) if n <= MAX_TABLE_N else None
    if (dense_cost is not None and len(a) * len(b) > dense_cost
            and a.is_integral() and b.is_integral()):
        return GroupAlgebraElement.from_vector(n, kernels.convolve(a.to_vector(), b.to_vector(), n))
    terms: dict[Permutation, Scalar] = {}
    for u, x in a._terms.items():
        for v, y in b._terms.items():
            w = compose(u, v)
            terms[w] = terms.get(w, 0) + x * y
    return GroupAlgebraElement(n, terms)


@lru_cache(maxsize=None)
def _b_element(alpha: Composition) -> GroupAlgebraElement:
    n = alpha.weight
    allowed = set_of(alpha)
    perms = permutation_list(n) if n <= 8 else all_permutations(n, allow_large=True)
    return GroupAlgebraElement.sum_of(n, (w for w in perms if descent_set(w) <= allowed))


def b_element(alpha: Sequence[int]) -> GroupAlgebraElement:
    """B_alpha: the sum of all w with Des(w) contained in Set(alpha)."""
    return _b_element(Composition(alpha))


def b_element_of_set(subset: Iterable[int], n: int) -> GroupAlgebraElement:
    from .compositions import comp_of
    return b_element(comp_of(subset, n))


def b_product_mackey(alpha: Sequence[int], beta: Sequence[int]) -> Counter:
    """Multiset {read(M) : M with column sums alpha and row sums beta} as a Counter."""
    return Counter(read(M) for M in matrices_with_margins(alpha, beta))


def mackey_sum(alpha: Sequence[int], beta: Sequence[int]) -> GroupAlgebraElement:
    """Right-hand side of the Mackey formula, expanded in Q[S_n]."""
    n = sum(alpha)
    total = GroupAlgebraElement.zero(n)
    for gamma, mult in sorted(b_product_mackey(alpha, beta).items()):
        total = total + b_element(gamma).scale(mult)
    return total


def b_blocked(gamma: Sequence[int], beta: Sequence[int]) -> GroupAlgebraElement:
    """Sum of the w preserving every gamma-block with Des(w) inside Set(beta)."""
    gamma, beta = Composition(gamma), Composition(beta)
    if gamma.weight != beta.weight:
        raise WeightMismatch(f"{gamma} and {beta} have different sizes")
    if not refines(beta, gamma):
        raise ValueError(f"{beta} does not refine {gamma}")
    n = gamma.weight
    allowed = set_of(beta)
    intervals = blocks(gamma)

    def keeps_blocks(w: Permutation) -> bool:
        return all(lo <= w[i - 1] <= hi for lo, hi in intervals for i in range(lo, hi + 1))

    return GroupAlgebraElement.sum_of(
        n, (w for w in permutation_list(n) if descent_set(w) <= allowed and keeps_blocks(w)))


def anagram_conjugator(alpha: Sequence[int], beta: Sequence[int]) -> Permutation:
    """A permutation w with ``B_beta * w == B_alpha``.

    w maps each alpha-block order-preservingly onto a beta-block of the same
    size; alpha-blocks are matched left to right with the first unused
    beta-block that fits.
    """
    alpha, beta = Composition(alpha), Composition(beta)
    if not are_anagrams(alpha, beta):
        raise ValueError(f"{alpha} and {beta} are not anagrams")
    beta_blocks = blocks(beta)
    used = [False] * len(beta)
    image = [0] * alpha.weight
    for lo, hi in blocks(alpha):
        size = hi - lo + 1
        m = next(k for k, (blo, bhi) in enumerate(beta_blocks)
                 if not used[k] and bhi - blo + 1 == size)
        used[m] = True
        for t in range(size):
            image[lo - 1 + t] = beta_blocks[m][0] + t
    return Permutation(image)
