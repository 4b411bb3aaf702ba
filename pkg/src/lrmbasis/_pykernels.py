"""Pure-Python reference kernels; exact for arbitrarily large integers."""
from __future__ import annotations

from math import gcd


def convolve(a, b, table_rows):
    """Coefficients of ``a * b`` given dense integer coefficient lists over S_n."""
    out = [0] * len(a)
    b_nz = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        row = table_rows[i]
        for j, y in b_nz:
            out[row[j]] += x * y
    return out


def left_multiply_rows(a, rows, table_rows):
    a_nz = [(i, x) for i, x in enumerate(a) if x]
    out = []
    for r in rows:
        acc = [0] * len(r)
        r_nz = [(j, y) for j, y in enumerate(r) if y]
        for i, x in a_nz:
            trow = table_rows[i]
            for j, y in r_nz:
                acc[trow[j]] += x * y
        out.append(acc)
    return out


def _primitive(v, q):
    g = gcd(*v)
    if g > 1:
        v = [x // g for x in v]
    if v[q] < 0:
        v = [-x for x in v]
    return v


def rref_int(rows):
    """Integer Gauss-Jordan elimination.

    Returns ``(basis, pivots)``: primitive integer rows with positive pivots,
    sorted by pivot column, each vanishing in every other row's pivot column.
    Dividing a row by its pivot entry gives the reduced row echelon form.
    """
    basis: list[list[int]] = []
    pivots: list[int] = []
    width = len(rows[0]) if rows else 0
    for row in rows:
        if len(basis) == width:
            break
        v = list(row)
        for b, p in zip(basis, pivots):
            c = v[p]
            if c:
                g = gcd(b[p], c)
                f1, f2 = b[p] // g, c // g
                v = [f1 * x - f2 * y for x, y in zip(v, b)]
        q = next((k for k, x in enumerate(v) if x), None)
        if q is None:
            continue
        v = _primitive(v, q)
        for k, b in enumerate(basis):
            c = b[q]
            if c:
                g = gcd(v[q], c)
                f1, f2 = v[q] // g, c // g
                basis[k] = _primitive([f1 * x - f2 * y for x, y in zip(b, v)], pivots[k])
        basis.append(v)
        pivots.append(q)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [basis[k] for k in order], [pivots[k] for k in order]
