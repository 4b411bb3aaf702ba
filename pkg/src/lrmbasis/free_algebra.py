"""Noncommutative polynomials over the letters 1..n, Dynkin elements and their B-action.

Words are plain tuples of letters.  S_k acts on length-k words from the
right by place permutation, ``(w . sigma)_i = w_{sigma(i)}``, and the
one-line embedding of Q[S_n] into degree-n polynomials is equivariant:
``embed(a) . b == embed(a * b)``.

>>> print(dynkin({2, 6, 7}))
2 6 7 - 6 2 7 - 7 2 6 + 7 6 2
>>> print(v_alpha((2, 1)))
1 2 3 - 2 1 3
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .compositions import Composition, WeightMismatch, blocks, grouping_functions
from .group_algebra import GroupAlgebraElement, Scalar, _as_scalar, format_terms
from .permutations import Permutation, v_shape_valley

Word = tuple[int, ...]


class AlphabetMismatch(ValueError):
    pass


class DegreeError(ValueError):
    pass


def _word_key(w: Word):
    return (len(w), w)


class FreeAlgebraElement:
    """Immutable finite linear combination of words over the alphabet [n]."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], Scalar] | None = None):
        self.n = n
        clean: dict[Word, Scalar] = {}
        for w, c in (terms or {}).items():
            w = tuple(int(x) for x in w)
            if any(not 1 <= x <= n for x in w):
                raise ValueError(f"word {w} uses letters outside 1..{n}")
            c = _as_scalar(c)
            if c:
                clean[w] = clean.get(w, 0) + c
                if not clean[w]:
                    del clean[w]
        self._terms = clean

    @classmethod
    def _trusted(cls, n: int, terms: dict[Word, Scalar]) -> "FreeAlgebraElement":
        self = cls.__new__(cls)
        self.n = n
        self._terms = terms
        return self

    @classmethod
    def word(cls, n: int, letters: Sequence[int]) -> "FreeAlgebraElement":
        return cls(n, {tuple(letters): 1})

    @classmethod
    def one(cls, n: int) -> "FreeAlgebraElement":
        return cls._trusted(n, {(): 1})

    @classmethod
    def zero(cls, n: int) -> "FreeAlgebraElement":
        return cls._trusted(n, {})

    def coefficient(self, word: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(word), 0)

    def items(self) -> list[tuple[Word, Scalar]]:
        """Terms ordered by word length, then lexicographically."""
        return sorted(self._terms.items(), key=lambda t: _word_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int | None:
        """Common length of all words, or None if the element is zero or inhomogeneous."""
        lengths = {len(w) for w in self._terms}
        return lengths.pop() if len(lengths) == 1 else None

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def _check(self, other: "FreeAlgebraElement") -> None:
        if self.n != other.n:
            raise AlphabetMismatch(f"alphabets of sizes {self.n} and {other.n}")

    def __add__(self, other):
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        self._check(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            s = terms.get(w, 0) + c
            if s:
                terms[w] = s
            else:
                terms.pop(w, None)
        return FreeAlgebraElement._trusted(self.n, terms)

    def __neg__(self):
        return FreeAlgebraElement._trusted(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, k: Scalar) -> "FreeAlgebraElement":
        k = _as_scalar(k)
        if not k:
            return FreeAlgebraElement.zero(self.n)
        return FreeAlgebraElement._trusted(self.n, {w: _as_scalar(c * k) for w, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeAlgebraElement):
            return concat_product(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FreeAlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_terms((" ".join(map(str, w)) or "()", c) for w, c in self.items())

    def __repr__(self) -> str:
        return f"FreeAlgebraElement({self.n}, {str(self)!r})"

    def to_json_obj(self) -> list[dict]:
        return [{"word": list(w), "num": Fraction(c).numerator, "den": Fraction(c).denominator}
                for w, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, n: int, data: list[dict]) -> "FreeAlgebraElement":
        return cls(n, {tuple(e["word"]): Fraction(e["num"], e.get("den", 1)) for e in data})

    @classmethod
    def from_json(cls, n: int, text: str) -> "FreeAlgebraElement":
        return cls.from_json_obj(n, json.loads(text))


def concat_product(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    """Bilinear extension of word concatenation."""
    a._check(b)
    terms: dict[Word, Scalar] = {}
    for u, x in a._terms.items():
        for v, y in b._terms.items():
            w = u + v
            terms[w] = terms.get(w, 0) + x * y
    return FreeAlgebraElement(a.n, terms)


def commutator(a: FreeAlgebraElement, b: FreeAlgebraElement) -> FreeAlgebraElement:
    return a * b - b * a


def product(factors: Iterable[FreeAlgebraElement], n: int) -> FreeAlgebraElement:
    out = FreeAlgebraElement.one(n)
    for f in factors:
        out = out * f
    return out


def _act(word: Word, sigma: Sequence[int]) -> Word:
    return tuple(word[s - 1] for s in sigma)


def right_action(e: FreeAlgebraElement, sigma: Permutation) -> FreeAlgebraElement:
    """``e . sigma`` with ``(w . sigma)_i = w_{sigma(i)}`` on each word."""
    if not e:
        return e
    k = e.degree
    if k is None:
        raise DegreeError("the place-permutation action needs a homogeneous element")
    if k != len(sigma):
        raise DegreeError(f"element of degree {k} acted on by S_{len(sigma)}")
    return FreeAlgebraElement._trusted(e.n, {_act(w, sigma): c for w, c in e._terms.items()})


def right_action_by_algebra(e: FreeAlgebraElement, a: GroupAlgebraElement) -> FreeAlgebraElement:
    """``e . a = sum_sigma a_sigma (e . sigma)``."""
    if not e or not a:
        return FreeAlgebraElement.zero(e.n)
    k = e.degree
    if k is None:
        raise DegreeError("the place-permutation action needs a homogeneous element")
    if k != a.n:
        raise DegreeError(f"element of degree {k} acted on by Q[S_{a.n}]")
    terms: dict[Word, Scalar] = {}
    for sigma, x in a.items():
        for w, c in e._terms.items():
            v = _act(w, sigma)
            terms[v] = terms.get(v, 0) + x * c
    return FreeAlgebraElement(e.n, terms)


def embed(a: GroupAlgebraElement) -> FreeAlgebraElement:
    """Send each permutation to its one-line word."""
    return FreeAlgebraElement._trusted(a.n, {tuple(w): c for w, c in a.items()})


def _check_subset(S: Iterable[int], n: int | None) -> tuple[list[int], int]:
    letters = sorted(set(S))
    if not letters:
        raise ValueError("Dynkin elements need a nonempty subset")
    if n is None:
        n = letters[-1]
    if letters[0] < 1 or letters[-1] > n:
        raise ValueError(f"subset {letters} is not inside 1..{n}")
    return letters, n


def dynkin(S: Iterable[int], n: int | None = None) -> FreeAlgebraElement:
    """Left-nested commutator ``[[...[s_1, s_2], ...], s_k]`` over S in increasing order."""
    letters, n = _check_subset(S, n)
    out = FreeAlgebraElement.word(n, letters[:1])
    for s in letters[1:]:
        out = commutator(out, FreeAlgebraElement.word(n, (s,)))
    return out


def dynkin_vshape(S: Iterable[int], n: int | None = None) -> FreeAlgebraElement:
    """Signed sum over V-shaped arrangements of S, sign ``(-1)^(valley - 1)``.

    A V-shaped arrangement has the minimum at the valley; the letters to its
    left are any subset of the others, written decreasingly.
    """
    letters, n = _check_subset(S, n)
    low, rest = letters[0], letters[1:]
    terms: dict[Word, Scalar] = {}
    for k in range(len(rest) + 1):
        for left in itertools.combinations(rest, k):
            right = [x for x in rest if x not in left]
            terms[(*reversed(left), low, *right)] = (-1) ** k
    return FreeAlgebraElement._trusted(n, terms)


def v_alpha(alpha: Sequence[int]) -> FreeAlgebraElement:
    """Product of the Dynkin elements of the alpha-blocks, left to right."""
    alpha = Composition(alpha)
    n = alpha.weight
    return product((dynkin(range(lo, hi + 1), n) for lo, hi in blocks(alpha)), n)


@dataclass(frozen=True)
class OrderedSetPartition:
    """Blocks ``(T_1, ..., T_q)`` partitioning ``{1, ..., p}``; each block sorted."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        flat = sorted(x for b in self.blocks for x in b)
        if flat != list(range(1, len(flat) + 1)) or any(not b for b in self.blocks):
            raise ValueError(f"not an ordered set partition: {self.blocks}")

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def ordered_set_partitions(beta: Sequence[int], gamma: Sequence[int]) -> list[OrderedSetPartition]:
    """Ordered set partitions T of [len(beta)] with sum_{i in T_j} beta_i = gamma_j."""
    if sum(beta) != sum(gamma):
        raise WeightMismatch(f"{tuple(beta)} and {tuple(gamma)} have different sizes")
    out = []
    for f in grouping_functions(beta, gamma):
        parts = tuple(tuple(i + 1 for i, j in enumerate(f) if j == t) for t in range(len(gamma)))
        out.append(OrderedSetPartition(parts))
    return out


def block_dynkins(beta: Sequence[int]) -> list[FreeAlgebraElement]:
    """``[V^{Set(beta)_1}, ..., V^{Set(beta)_p}]``."""
    n = sum(beta)
    return [dynkin(range(lo, hi + 1), n) for lo, hi in blocks(beta)]


def vb_rhs(beta: Sequence[int], gamma: Sequence[int]) -> FreeAlgebraElement:
    """Sum over T of ``V^{!T_1} ... V^{!T_q}`` (block products in increasing index order)."""
    n = sum(beta)
    factors = block_dynkins(beta)
    total = FreeAlgebraElement.zero(n)
    for T in ordered_set_partitions(beta, gamma):
        total = total + product((factors[i - 1] for block in T.blocks for i in block), n)
    return total


def permuted_block_product(beta: Sequence[int], chi: Sequence[int]) -> FreeAlgebraElement:
    """``V^{Set(beta)_{chi(1)}} ... V^{Set(beta)_{chi(p)}}`` for chi in S_p (1-based)."""
    n = sum(beta)
    factors = block_dynkins(beta)
    return product((factors[c - 1] for c in chi), n)


def vb_equal_length_rhs(beta: Sequence[int], gamma: Sequence[int]) -> FreeAlgebraElement:
    """Sum over chi in S_p with beta_{chi(i)} = gamma_i of the permuted block product."""
    if len(beta) != len(gamma):
        raise ValueError("the permutation form needs compositions of equal length")
    n = sum(beta)
    total = FreeAlgebraElement.zero(n)
    for chi in itertools.permutations(range(1, len(beta) + 1)):
        if all(beta[c - 1] == g for c, g in zip(chi, gamma)):
            total = total + permuted_block_product(beta, chi)
    return total


def is_v_shaped(word: Sequence[int]) -> bool:
    return v_shape_valley(word) is not None
