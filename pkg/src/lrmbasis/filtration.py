"""The B-right-ideal filtration and the left-to-right-minima (LRM) basis.

For a composition alpha of n:

* ``r_alpha(alpha)`` is the right ideal ``B_alpha * Q[S_n]``;
* ``lrm_element(w)`` is ``B_{cLRM'(w)} * w``; these n! elements form a basis
  unitriangular over the permutations in lexicographic order;
* ``s_alpha(alpha)`` spans the LRM elements whose cLRM' has underlying
  partition finer (as a partition) than that of alpha, and
  ``s_prime_alpha`` uses plain composition refinement instead.

All subspaces are :class:`~lrmbasis.exact_linalg.SubspaceBasis` objects in
the coordinates of S_n listed lexicographically.

Ordering used for left multiplication matrices: classes of cLRM'
partitions sorted by decreasing length and then lexicographically (a linear
extension of strict partition refinement), ties broken lexicographically
on the permutation.  Any such order makes the matrix upper triangular.
"""
from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from ._tables import MAX_TABLE_N, mult_table
from .compositions import (Composition, are_anagrams, compositions_of, eta, parse_composition,
                           partition_refines, refines, strictly_partition_refines,
                           strictly_refines, underlying_partition)
from .exact_linalg import (SubspaceBasis, first_outside, is_subspace, rref,
                           solve_unitriangular, span_contains_all, span_equal,
                           subspace_sum, unitriangular_certificate)
from .group_algebra import (GroupAlgebraElement, Scalar, _as_scalar, anagram_conjugator,
                            b_element, b_product_mackey)
from .permutations import Permutation, clrm_prime, permutation_list
from .report import Report, check_guard

#: largest n for which the LRM basis is built without ``allow_large``
LRM_BASIS_MAX_N = 6


@dataclass(frozen=True)
class LrmBasisElement:
    w: Permutation
    value: GroupAlgebraElement

    @property
    def composition(self) -> Composition:
        return clrm_prime(self.w)


@dataclass
class SigmaElement:
    """``sum_alpha lambda_alpha B_alpha``, an element of the descent algebra."""

    n: int
    coefficients: dict[Composition, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for alpha, c in self.coefficients.items():
            alpha = Composition(alpha)
            if alpha.weight != self.n:
                raise ValueError(f"{alpha} is not a composition of {self.n}")
            c = _as_scalar(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        self.coefficients = clean

    def to_group_algebra(self) -> GroupAlgebraElement:
        total = GroupAlgebraElement.zero(self.n)
        for alpha, c in sorted(self.coefficients.items()):
            total = total + b_element(alpha).scale(c)
        return total

    def to_json_obj(self) -> list[dict]:
        return [{"alpha": ",".join(map(str, a)), "num": Fraction(c).numerator,
                 "den": Fraction(c).denominator} for a, c in sorted(self.coefficients.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, data: list[dict], n: int | None = None) -> "SigmaElement":
        coeffs: dict[Composition, Scalar] = {}
        for entry in data:
            alpha = parse_composition(str(entry["alpha"]))
            if n is None:
                n = alpha.weight
            coeffs[alpha] = coeffs.get(alpha, 0) + Fraction(entry["num"], entry.get("den", 1))
        if n is None:
            raise ValueError("empty SigmaElement needs an explicit n")
        return cls(n, coeffs)

    @classmethod
    def from_json(cls, text: str, n: int | None = None) -> "SigmaElement":
        return cls.from_json_obj(json.loads(text), n)


# -- the LRM basis -------------------------------------------------------------


def lrm_element(w: Permutation) -> GroupAlgebraElement:
    """``B_{cLRM'(w)} * w``."""
    return b_element(clrm_prime(w)).right_translate(w)


def lrm_basis(n: int, *, allow_large: bool = False) -> list[LrmBasisElement]:
    """The n! LRM basis elements, indexed by S_n in lexicographic order."""
    if n > LRM_BASIS_MAX_N and not allow_large:
        raise ValueError(f"LRM basis of S_{n} needs allow_large=True")
    return [LrmBasisElement(w, lrm_element(w)) for w in permutation_list(n)]


@lru_cache(maxsize=None)
def _lrm_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(e.value.to_vector()) for e in lrm_basis(n, allow_large=True))


def lrm_vectors(n: int) -> tuple[tuple[int, ...], ...]:
    """Coordinate vectors of the LRM basis (row k is the k-th element)."""
    return _lrm_vectors(n)


def _translates(vec: Sequence[int], n: int) -> list[list[int]]:
    """Rows ``x * w`` for every w in S_n, x given by its dense coordinates."""
    N = len(vec)
    if n <= MAX_TABLE_N:
        table = mult_table(n)
        rows = np.zeros((N, N), dtype=object)
        cols = np.broadcast_to(np.arange(N)[None, :], (N, N))
        # (u * w) has index table[u, w]; coefficient of u in x lands there in row w
        rows[cols, table] = np.asarray(vec, dtype=object)[:, None]
        return rows.tolist()
    x = GroupAlgebraElement.from_vector(n, vec)
    return [x.right_translate(w).to_vector() for w in permutation_list(n)]


# -- right ideals and LRM spans ----------------------------------------------


@lru_cache(maxsize=None)
def _r_alpha(alpha: Composition) -> SubspaceBasis:
    n = alpha.weight
    gens = _translates(b_element(alpha).to_vector(), n)
    return rref(gens, len(gens), allow_large=True)[0]


def r_alpha(alpha: Sequence[int]) -> SubspaceBasis:
    """The right ideal ``B_alpha Q[S_n]`` as a subspace of Q^{n!}."""
    return _r_alpha(Composition(alpha))


@lru_cache(maxsize=None)
def _s_alpha(alpha: Composition, prime: bool) -> SubspaceBasis:
    n = alpha.weight
    target = underlying_partition(alpha)
    vecs = lrm_vectors(n)
    chosen = []
    for w, vec in zip(permutation_list(n), vecs):
        c = clrm_prime(w)
        keep = refines(c, alpha) if prime else partition_refines(underlying_partition(c), target)
        if keep:
            chosen.append(vec)
    return rref(chosen, len(vecs), allow_large=True)[0]


def s_alpha(alpha: Sequence[int]) -> SubspaceBasis:
    """Span of the LRM elements with cLRM' partition-refining alpha."""
    return _s_alpha(Composition(alpha), False)


def s_prime_alpha(alpha: Sequence[int]) -> SubspaceBasis:
    """Span of the LRM elements with cLRM' refining alpha as a composition."""
    return _s_alpha(Composition(alpha), True)


def strictly_finer_sum(beta: Sequence[int], *, by_partition: bool = False) -> SubspaceBasis:
    """Sum of the right ideals of all compositions strictly finer than beta."""
    beta = Composition(beta)
    n = beta.weight
    if by_partition:
        idx = [a for a in compositions_of(n) if strictly_partition_refines(a, beta)]
    else:
        idx = [a for a in compositions_of(n) if strictly_refines(a, beta)]
    return subspace_sum(*(r_alpha(a) for a in idx), dim=len(permutation_list(n)))


def dimension_table(n: int) -> list[dict]:
    """Per composition: dim R_alpha, dim S_alpha and dim S'_alpha."""
    return [{"alpha": alpha, "partition": underlying_partition(alpha),
             "dim_R": r_alpha(alpha).rank, "dim_S": s_alpha(alpha).rank,
             "dim_S_prime": s_prime_alpha(alpha).rank}
            for alpha in compositions_of(n)]


# -- left multiplication in the LRM basis ------------------------------------


def class_key(w: Permutation) -> tuple:
    lam = underlying_partition(clrm_prime(w))
    return (-len(lam), tuple(lam))


def declared_order(n: int) -> list[Permutation]:
    """Permutations sorted by cLRM' class (finer classes first), then lexicographically."""
    return sorted(permutation_list(n), key=lambda w: (class_key(w), w))


@lru_cache(maxsize=None)
def _b_left_matrix(alpha: Composition) -> tuple[tuple[int, ...], ...]:
    """Column k: coordinates of ``B_alpha * beta_{w_k}`` in the LRM basis (lex indexing)."""
    n = alpha.weight
    vecs = lrm_vectors(n)
    images = kernels.left_multiply_rows(b_element(alpha).to_vector(), vecs, n) if n <= MAX_TABLE_N \
        else [(b_element(alpha) * GroupAlgebraElement.from_vector(n, v)).to_vector() for v in vecs]
    cols = [solve_unitriangular(vecs, img) for img in images]
    return tuple(zip(*cols)) if cols else ()


@dataclass
class LeftMultResult:
    order: list[Permutation]
    matrix: list[list[Scalar]]
    triangular: bool
    block_scalar: bool
    diagonal: list[Scalar]
    predicted: list[Scalar]

    @property
    def diagonal_matches(self) -> bool:
        return self.diagonal == self.predicted

    def eigenvalues(self) -> Counter:
        return Counter(self.diagonal)


def left_mult_matrix(a: SigmaElement, n: int | None = None) -> LeftMultResult:
    """Matrix of ``x -> a x`` on the LRM basis, in the declared order, with diagnostics."""
    n = a.n if n is None else n
    if n != a.n:
        raise ValueError("SigmaElement lives in a different degree")
    if n > LRM_BASIS_MAX_N:
        raise ValueError(f"left multiplication matrices are limited to n <= {LRM_BASIS_MAX_N}")
    perms = permutation_list(n)
    N = len(perms)
    lex = np.zeros((N, N), dtype=object)
    for alpha, lam in a.coefficients.items():
        lex = lex + lam * np.array(_b_left_matrix(alpha), dtype=object).reshape(N, N)
    order = declared_order(n)
    index = {w: k for k, w in enumerate(perms)}
    pos = [index[w] for w in order]
    mat = lex[np.ix_(pos, pos)]
    matrix = [[_as_scalar(x) for x in row] for row in mat.tolist()]
    triangular = all(not matrix[i][j] for i in range(N) for j in range(i))
    parts = [underlying_partition(clrm_prime(w)) for w in order]
    block_scalar = all(
        not matrix[i][j] or i == j or strictly_partition_refines(parts[i], parts[j])
        for i in range(N) for j in range(N))
    diagonal = [matrix[k][k] for k in range(N)]
    predicted = [_as_scalar(sum((lam * eta(clrm_prime(w), alpha)
                                 for alpha, lam in a.coefficients.items()), 0))
                 for w in order]
    return LeftMultResult(order, matrix, triangular, block_scalar, diagonal, predicted)


# -- verification suites ------------------------------------------------------


def _pairs(items: list, sample: int | None, seed: int) -> list:
    if sample is None or sample >= len(items):
        return items
    return random.Random(seed).sample(items, sample)


def verify_anagram_invariance(n: int, *, extended: bool = False, sample: int | None = None,
                              seed: int = 0, stop_on_failure: bool = True) -> Report:
    """Anagram compositions give equal right ideals, with B_beta * w = B_alpha for the conjugator."""
    check_guard(n, extended)
    rep = Report("anagram", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    pairs = [(a, b) for a in comps for b in comps if a <= b and are_anagrams(a, b)]
    for alpha, beta in _pairs(pairs, sample, seed):
        w = anagram_conjugator(alpha, beta)
        conj_ok = b_element(beta).right_translate(w) == b_element(alpha)
        equal = span_equal(r_alpha(alpha), r_alpha(beta))
        if not rep.add(f"R{alpha} = R{beta}", conj_ok and equal,
                       f"conjugator {w}: identity {'holds' if conj_ok else 'fails'}; "
                       f"ranks {r_alpha(alpha).rank} vs {r_alpha(beta).rank}"):
            break
    return rep


def verify_refinement_inclusion(n: int, *, extended: bool = False, sample: int | None = None,
                                seed: int = 0, stop_on_failure: bool = True) -> Report:
    """beta refining gamma (as compositions or as partitions) gives R_beta inside R_gamma."""
    check_guard(n, extended)
    rep = Report("inclusion", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    pairs = [(b, g, kind) for b in comps for g in comps
             for kind in ("comp", "part")
             if (refines(b, g) if kind == "comp" else partition_refines(b, g))]
    for beta, gamma, kind in _pairs(pairs, sample, seed):
        rel = "<=" if kind == "comp" else "<=_pi"
        ok = is_subspace(r_alpha(beta), r_alpha(gamma))
        if not rep.add(f"{beta} {rel} {gamma}: R{beta} in R{gamma}", ok,
                       f"dims {r_alpha(beta).rank}, {r_alpha(gamma).rank}"):
            break
    return rep


def verify_bimodule(n: int, *, extended: bool = False, sample: int | None = None,
                    seed: int = 0, stop_on_failure: bool = True) -> Report:
    """B_alpha * R_beta stays inside R_beta."""
    check_guard(n, extended)
    rep = Report("bimodule", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    pairs = [(a, b) for a in comps for b in comps]
    for alpha, beta in _pairs(pairs, sample, seed):
        R = r_alpha(beta)
        images = kernels.left_multiply_rows(b_element(alpha).to_vector(), R.int_rows, n)
        bad = first_outside(R, images)
        if not rep.add(f"B{alpha} R{beta} in R{beta}", bad is None,
                       f"image of basis row {bad} leaves R{beta}"):
            break
    return rep


def verify_scalar_action(n: int, *, extended: bool = False, sample: int | None = None,
                         seed: int = 0, stop_on_failure: bool = True) -> Report:
    """B_alpha acts on R_beta modulo the strictly finer ideals as eta(beta, alpha)."""
    check_guard(n, extended)
    rep = Report("scalar-action", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    finer = {}
    for beta in comps:
        F = strictly_finer_sum(beta)
        same = span_equal(F, strictly_finer_sum(beta, by_partition=True))
        finer[beta] = F
        if not rep.add(f"finer sums agree for {beta}", same,
                       "composition-refinement and partition-refinement sums differ"):
            return rep
    pairs = [(a, b) for a in comps for b in comps]
    for alpha, beta in _pairs(pairs, sample, seed):
        e = eta(beta, alpha)
        Bb = b_element(beta)
        residual = b_element(alpha) * Bb - Bb.scale(e)
        rows = _translates(residual.to_vector(), n)
        bad = first_outside(finer[beta], rows)
        if not rep.add(f"B{alpha} on R{beta}/finer = {e}", bad is None,
                       f"w = {permutation_list(n)[bad] if bad is not None else None}: "
                       f"B_alpha B_beta w - {e} B_beta w not in the finer sum"):
            break
    return rep


def verify_filtration_equality(n: int, *, extended: bool = False,
                               stop_on_failure: bool = True) -> Report:
    """S_alpha = R_alpha for every alpha, and S'_alpha inside S_alpha."""
    check_guard(n, extended)
    rep = Report("filtration", n, stop_on_failure=stop_on_failure)
    for alpha in compositions_of(n):
        S, R = s_alpha(alpha), r_alpha(alpha)
        ok = span_equal(S, R)
        if not rep.add(f"S{alpha} = R{alpha}", ok, f"dim S = {S.rank}, dim R = {R.rank}"):
            break
        ok = is_subspace(s_prime_alpha(alpha), S)
        if not rep.add(f"S'{alpha} in S{alpha}", ok, f"dim S' = {s_prime_alpha(alpha).rank}"):
            break
    return rep


def verify_basis(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """Each LRM element is w plus lexicographically smaller terms; the family is unitriangular."""
    check_guard(n, extended)
    rep = Report("basis", n, stop_on_failure=stop_on_failure)
    for e in lrm_basis(n):
        terms = e.value.items()
        ok = e.value.coefficient(e.w) == 1 and all(u <= e.w for u, _ in terms)
        if not rep.add(f"beta_{e.w} triangular", ok, f"beta_{e.w} = {e.value}"):
            return rep
    vecs = lrm_vectors(n)
    rep.add("unitriangular certificate", unitriangular_certificate(vecs))
    return rep


def verify_block_scalar(n: int, *, extended: bool = False, stop_on_failure: bool = True) -> Report:
    """B_alpha beta_w - eta beta_w lies in the span of LRM elements of strictly finer class."""
    check_guard(n, extended)
    rep = Report("block-scalar", n, stop_on_failure=stop_on_failure)
    perms = permutation_list(n)
    vecs = lrm_vectors(n)
    parts = [underlying_partition(clrm_prime(w)) for w in perms]
    N = len(perms)
    for alpha in compositions_of(n):
        M = _b_left_matrix(alpha)
        for k, w in enumerate(perms):
            e = eta(clrm_prime(w), alpha)
            ok = M[k][k] == e and all(
                not M[j][k] or strictly_partition_refines(parts[j], parts[k])
                for j in range(N) if j != k)
            # independent reconstruction from the coordinates
            image = (b_element(alpha) * GroupAlgebraElement.from_vector(n, vecs[k])).to_vector()
            rebuilt = [sum(M[j][k] * vecs[j][i] for j in range(N)) for i in range(N)]
            ok = ok and rebuilt == image
            if not rep.add(f"B{alpha} beta_{w}", ok, f"eta = {e}, diagonal = {M[k][k]}"):
                return rep
    return rep


def verify_sigma_inclusion(n: int, *, extended: bool = False, sample: int | None = None,
                           seed: int = 0, stop_on_failure: bool = True) -> Report:
    """beta partition-refining gamma gives B_beta Sigma_n inside B_gamma Sigma_n."""
    check_guard(n, extended)
    rep = Report("sigma-inclusion", n, stop_on_failure=stop_on_failure)
    comps = compositions_of(n)
    index = {c: k for k, c in enumerate(comps)}

    def coords(beta: Composition, delta: Composition) -> list[int]:
        v = [0] * len(comps)
        for gamma, mult in b_product_mackey(beta, delta).items():
            v[index[gamma]] += mult
        return v

    spans = {g: rref([coords(g, d) for d in comps], len(comps))[0] for g in comps}
    pairs = [(b, g) for b in comps for g in comps if partition_refines(b, g)]
    for beta, gamma in _pairs(pairs, sample, seed):
        ok = span_contains_all(spans[gamma], [coords(beta, d) for d in comps])
        if not rep.add(f"B{beta} Sigma in B{gamma} Sigma", ok,
                       f"ranks {spans[beta].rank}, {spans[gamma].rank}"):
            break
    return rep
