"""Exact dense linear algebra over the engine's scalar domains.

Determinants use fraction-free Bareiss elimination, which only ever divides
by earlier pivots; those divisions are exact in any integral domain, so the
same routine serves both the rational and the polynomial scalars.  Kernels
are computed over the rationals by plain Gauss-Jordan elimination.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

__all__ = ["det", "nullspace", "identity_matrix", "mat_mul", "mat_sub", "is_zero_matrix"]


def det(rows, ring):
    """Determinant of a square matrix of ring elements (Bareiss)."""
    n = len(rows)
    if n == 0:
        return ring.one
    a = [list(r) for r in rows]
    sign = 1
    prev = ring.one
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return ring.zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = ring.exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
            a[i][k] = ring.zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def _normalize(vec):
    """Scale a rational vector to a primitive integer vector with positive
    leading entry (deterministic representative of its line)."""
    denom_lcm = 1
    for x in vec:
        denom_lcm = denom_lcm * x.denominator // gcd(denom_lcm, x.denominator)
    ints = [int(x * denom_lcm) for x in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    lead = next((v for v in ints if v), 1)
    if lead < 0:
        ints = [-v for v in ints]
    return [Fraction(v) for v in ints]


def nullspace(rows, ncols):
    """Basis of the exact kernel of a rational matrix, one normalized vector
    per free column, in ascending free-column order."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    pivots = []  # (row, col)
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append((r, col))
        r += 1
        if r == nrows:
            break
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, col in pivots:
            vec[col] = -m[row][free]
        basis.append(_normalize(vec))
    return basis


def identity_matrix(n, ring):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, mcols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(mcols):
            s = 0
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)
