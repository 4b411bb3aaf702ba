"""Brute-force reference implementations, written without the package.

Each oracle follows the textbook definition as literally as possible and is
deliberately slow; tests compare the package against these on small n.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from fractions import Fraction

import sympy


def all_compositions(n):
    if n == 0:
        return [()]
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


def chunk_refines(alpha, beta):
    """Split alpha greedily into contiguous chunks summing to beta's parts."""
    i = 0
    for b in beta:
        s = 0
        while s < b and i < len(alpha):
            s += alpha[i]
            i += 1
        if s != b:
            return False
    return i == len(alpha)


def anagram_refines(lam, mu):
    return any(chunk_refines(p, mu) for p in set(itertools.permutations(lam)))


def eta_bruteforce(beta, alpha):
    count = 0
    for f in itertools.product(range(len(alpha)), repeat=len(beta)):
        sums = [0] * len(alpha)
        for i, j in enumerate(f):
            sums[j] += beta[i]
        count += sums == list(alpha)
    return count


def margin_matrices(alpha, beta):
    """All matrices with row sums beta, column sums alpha, by brute force over entries."""
    bound = max(list(alpha) + list(beta) + [0])
    cells = len(alpha) * len(beta)
    out = []
    for flat in itertools.product(range(bound + 1), repeat=cells):
        rows = [flat[i * len(alpha):(i + 1) * len(alpha)] for i in range(len(beta))]
        if [sum(r) for r in rows] == list(beta) and \
                [sum(r[j] for r in rows) for j in range(len(alpha))] == list(alpha):
            out.append(tuple(tuple(r) for r in rows))
    return out


def descents(w):
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def b_dict(alpha):
    n = sum(alpha)
    cut = set(itertools.accumulate(alpha[:-1]))
    return {w: 1 for w in itertools.permutations(range(1, n + 1)) if descents(w) <= cut}


def compose(u, w):
    return tuple(u[w[i] - 1] for i in range(len(w)))


def convolve(a, b):
    out = defaultdict(int)
    for u, x in a.items():
        for w, y in b.items():
            out[compose(u, w)] += x * y
    return {k: v for k, v in out.items() if v}


def lrm_values(w):
    return {w[i] for i in range(len(w)) if all(w[i] < w[j] for j in range(i))}


def word_commutator(a, b):
    out = defaultdict(int)
    for u, x in a.items():
        for v, y in b.items():
            out[u + v] += x * y
            out[v + u] -= x * y
    return {k: v for k, v in out.items() if v}


def nested_commutator(S):
    s = sorted(S)
    acc = {(s[0],): 1}
    for x in s[1:]:
        acc = word_commutator(acc, {(x,): 1})
    return acc


def sympy_rank(rows):
    if not rows:
        return 0
    return sympy.Matrix([[sympy.Rational(Fraction(x).numerator, Fraction(x).denominator)
                          for x in r] for r in rows]).rank()
