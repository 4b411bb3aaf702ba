"""Multiplication tables of S_n over the lexicographic indexing."""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .permutations import permutation_list

#: largest n for which a dense n! x n! table is built (720 x 720 int32 is 2 MB)
MAX_TABLE_N = 6


@lru_cache(maxsize=None)
def perm_array(n: int) -> np.ndarray:
    """Row i holds the 0-based one-line notation of the i-th permutation in lex order."""
    perms = permutation_list(n)
    return np.array(perms, dtype=np.int64).reshape(len(perms), n) - 1


def _codes(arr: np.ndarray, n: int) -> np.ndarray:
    # base-n digits preserve lexicographic order of one-line notation
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return arr @ weights


@lru_cache(maxsize=None)
def mult_table(n: int) -> np.ndarray:
    """``table[i, j]`` is the index of ``P_i * P_j`` where ``(uw)(k) = u(w(k))``."""
    if n > MAX_TABLE_N:
        raise ValueError(f"no dense multiplication table for n = {n} > {MAX_TABLE_N}")
    P = perm_array(n)
    N = P.shape[0]
    if n == 0:
        return np.zeros((1, 1), dtype=np.int32)
    codes = _codes(P, n)  # already sorted
    # (P_i * P_j)[k] = P_i[P_j[k]]
    prod = P[:, P]  # prod[i, j, k] = P[i, P[j, k]]
    table = np.searchsorted(codes, _codes(prod.reshape(N * N, n), n)).reshape(N, N)
    return np.ascontiguousarray(table, dtype=np.int32)


@lru_cache(maxsize=None)
def mult_rows(n: int) -> list[list[int]]:
    return mult_table(n).tolist()
