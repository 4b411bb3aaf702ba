"""Exact linear algebra over the rationals.

Subspaces are stored canonically: the reduced row echelon basis, with each
row kept as the primitive integer multiple whose pivot is positive.  Two
spanning sets of the same subspace therefore give equal ``SubspaceBasis``
objects, which is how ``span_equal`` is decided.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import kernels

Number = int | Fraction

#: largest ambient dimension accepted without ``allow_large`` (720 = 6!)
MAX_DENSE_DIM = 720


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class RationalMatrix:
    """A rectangular grid of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Number]], ncols: int | None = None) -> "RationalMatrix":
        rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix")
        return cls(rows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def to_json(self) -> str:
        return json.dumps([[{"num": x.numerator, "den": x.denominator} for x in r] for r in self.rows])

    @classmethod
    def from_json(cls, text: str) -> "RationalMatrix":
        data = json.loads(text)
        return cls.from_rows([[Fraction(e["num"], e["den"]) for e in r] for r in data])


@dataclass(frozen=True)
class SubspaceBasis:
    """Canonical basis of a subspace of Q^dim."""

    dim: int
    int_rows: tuple[tuple[int, ...], ...]
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        """Reduced row echelon rows (pivot entries equal to 1)."""
        return tuple(tuple(Fraction(x, r[p]) for x in r) for r, p in zip(self.int_rows, self.pivots))

    @classmethod
    def zero(cls, dim: int) -> "SubspaceBasis":
        return cls(dim, (), ())

    def __len__(self) -> int:
        return self.rank


def _integer_row(row: Sequence[Number]) -> list[int]:
    dens = [x.denominator for x in row if isinstance(x, Fraction) and x.denominator != 1]
    if not dens:
        return [int(x) for x in row]
    m = lcm(*dens)
    return [int(x * m) for x in row]


def rref(matrix: RationalMatrix | Iterable[Sequence[Number]], ncols: int | None = None, *,
         allow_large: bool = False) -> tuple[SubspaceBasis, int]:
    """Canonical row-reduced basis of the row space, and its rank."""
    if isinstance(matrix, RationalMatrix):
        ncols, rows = matrix.ncols, matrix.rows
    else:
        rows = [tuple(r) for r in matrix]
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for an empty row list")
            ncols = len(rows[0])
    if ncols > MAX_DENSE_DIM and not allow_large:
        raise ValueError(f"dense elimination in dimension {ncols} needs allow_large=True")
    int_rows = []
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a matrix with {ncols} columns")
        int_rows.append(_integer_row(r))
    basis, pivots = kernels.rref_int(int_rows, ncols)
    sb = SubspaceBasis(ncols, tuple(tuple(r) for r in basis), tuple(pivots))
    return sb, sb.rank


def span(vectors: Iterable[Sequence[Number]], dim: int, **kw) -> SubspaceBasis:
    return rref(vectors, dim, **kw)[0]


def rank(vectors: Iterable[Sequence[Number]], dim: int, **kw) -> int:
    return rref(vectors, dim, **kw)[1]


def span_contains(S: SubspaceBasis, v: Sequence[Number]) -> bool:
    """True iff v lies in the span of S (v reduces to zero)."""
    if len(v) != S.dim:
        raise DimensionMismatch(f"vector of length {len(v)} against ambient dimension {S.dim}")
    w = _integer_row(v)
    for row, p in zip(S.int_rows, S.pivots):
        c = w[p]
        if c:
            w = [row[p] * x - c * y for x, y in zip(w, row)]
    return not any(w)


def span_contains_all(S: SubspaceBasis, vectors: Sequence[Sequence[Number]]) -> bool:
    """True iff every vector lies in S (one stacked elimination)."""
    vectors = list(vectors)
    if not vectors:
        return True
    if any(len(v) != S.dim for v in vectors):
        raise DimensionMismatch("vector length differs from the ambient dimension")
    _, r = rref([*S.int_rows, *vectors], S.dim, allow_large=True)
    return r == S.rank


def first_outside(S: SubspaceBasis, vectors: Sequence[Sequence[Number]]) -> int | None:
    """Index of the first vector not in S, or None."""
    if span_contains_all(S, vectors):
        return None
    for k, v in enumerate(vectors):
        if not span_contains(S, v):
            return k
    return None


def span_equal(S: SubspaceBasis, T: SubspaceBasis) -> bool:
    if S.dim != T.dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    return S == T


def subspace_sum(*spaces: SubspaceBasis, dim: int | None = None) -> SubspaceBasis:
    if dim is None:
        if not spaces:
            raise ValueError("dim is required for an empty sum")
        dim = spaces[0].dim
    if any(S.dim != dim for S in spaces):
        raise DimensionMismatch("subspaces live in different ambient spaces")
    rows = [r for S in spaces for r in S.int_rows]
    return rref(rows, dim, allow_large=True)[0]


def is_subspace(S: SubspaceBasis, T: SubspaceBasis) -> bool:
    """True iff S is contained in T."""
    if S.dim != T.dim:
        raise DimensionMismatch("subspaces live in different ambient spaces")
    return span_contains_all(T, S.int_rows)


def unitriangular_certificate(columns: Sequence[Sequence[Number]]) -> bool:
    """Check that ``columns[k]`` equals ``e_k`` plus a combination of ``e_j`` with ``j < k``.

    ``columns[k]`` is the coordinate vector of the k-th family member in the
    standard basis, both indexed in the same (lexicographic) order.
    """
    N = len(columns)
    if any(len(c) != N for c in columns):
        raise ValueError("unitriangular_certificate needs a square family")
    for k, col in enumerate(columns):
        if col[k] != 1:
            return False
        if any(col[j] for j in range(k + 1, N)):
            return False
    return True


def solve_unitriangular(columns: Sequence[Sequence[int]], target: Sequence[Number]) -> list[Number]:
    """Coordinates c with ``sum_k c_k columns[k] = target`` for a unitriangular family."""
    residual = list(target)
    coords: list[Number] = [0] * len(columns)
    for k in range(len(columns) - 1, -1, -1):
        c = residual[k]
        if c:
            coords[k] = c
            col = columns[k]
            for j in range(k + 1):
                if col[j]:
                    residual[j] -= c * col[j]
    return coords
