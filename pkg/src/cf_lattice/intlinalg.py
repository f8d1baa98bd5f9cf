"""Exact integer and rational linear algebra.

Everything here works over Python ints and fractions.Fraction; no floating
point. Matrices are sequences of equal-length rows; functions return new
list-of-list matrices and never mutate their arguments.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Matrix product; works for int or Fraction entries."""
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row_a = a[i]
        out.append([sum(row_a[t] * b[t][j] for t in range(k)) for j in range(m)])
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def hnf(rows) -> Matrix:
    """Row-style Hermite normal form of the row space.

    Returns the nonzero rows: pivots positive, entries above each pivot
    reduced into [0, pivot). Canonical for the row span over Z.
    """
    m = [list(r) for r in rows]
    if not m:
        return []
    ncols = len(m[0])
    pivot_rows = []
    row = 0
    for col in range(ncols):
        # find a row at or below `row` with a nonzero entry in this column
        piv = None
        for i in range(row, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        # clear the column below the pivot with gcd row operations
        for i in range(row + 1, len(m)):
            while m[i][col]:
                a, b = m[row][col], m[i][col]
                if abs(b) < abs(a) or a == 0:
                    m[row], m[i] = m[i], m[row]
                    continue
                q = b // a
                m[i] = [x - q * y for x, y in zip(m[i], m[row])]
        if m[row][col] < 0:
            m[row] = [-x for x in m[row]]
        pivot_rows.append((row, col))
        row += 1
        if row == len(m):
            break
    # reduce entries above each pivot, in increasing pivot order: pivot rows
    # have zeros at all earlier pivot columns, so no step re-breaks a column
    for r, c in pivot_rows:
        p = m[r][c]
        for i in range(r):
            q = m[i][c] // p
            if q:
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
    return [m[r] for r, _ in pivot_rows]


def kernel(rows) -> Matrix:
    """Basis of the integral right kernel {x : M x = 0}, saturated and in HNF."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    # Row-reduce [M^T | I]; rows whose M^T-part vanishes record kernel vectors.
    aug = [[m[i][j] for i in range(nrows)] + [1 if k == j else 0 for k in range(ncols)]
           for j in range(ncols)]
    reduced = _hnf_full(aug)
    ker = [r[nrows:] for r in reduced if not any(r[:nrows])]
    return hnf(ker)


def _hnf_full(m: Matrix) -> Matrix:
    """Row HNF keeping zero rows (helpers needs the trailing records)."""
    m = [list(r) for r in m]
    if not m:
        return m
    ncols = len(m[0])
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for i in range(row + 1, len(m)):
            while m[i][col]:
                a, b = m[row][col], m[i][col]
                if abs(b) < abs(a) or a == 0:
                    m[row], m[i] = m[i], m[row]
                    continue
                q = b // a
                m[i] = [x - q * y for x, y in zip(m[i], m[row])]
        if m[row][col] < 0:
            m[row] = [-x for x in m[row]]
        row += 1
        if row == len(m):
            break
    return m


def det(a) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a) -> int:
    return len(hnf(a))


def smith_normal_form(a) -> tuple[list[int], Matrix, Matrix]:
    """Smith normal form with transforms: P*A*Q = diag(d), d_i >= 0, d_i | d_{i+1}.

    P and Q are unimodular.
    """
    m = [list(r) for r in a]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    p = identity(nrows)
    q = identity(ncols)

    def row_op(i, j, c):  # row_i -= c * row_j
        m[i] = [x - c * y for x, y in zip(m[i], m[j])]
        p[i] = [x - c * y for x, y in zip(p[i], p[j])]

    def col_op(i, j, c):  # col_i -= c * col_j
        for r in m:
            r[i] -= c * r[j]
        for r in q:
            r[i] -= c * r[j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in q:
            r[i], r[j] = r[j], r[i]

    k = 0
    size = min(nrows, ncols)
    while k < size:
        # move a minimal nonzero entry of the trailing block to (k, k)
        piv = None
        best = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, piv = v, (i, j)
        if piv is None:
            break
        swap_rows(k, piv[0])
        swap_cols(k, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, nrows):
                if m[i][k]:
                    c = m[i][k] // m[k][k]
                    row_op(i, k, c)
                    if m[i][k]:
                        swap_rows(k, i)
                        dirty = True
            for j in range(k + 1, ncols):
                if m[k][j]:
                    c = m[k][j] // m[k][k]
                    col_op(j, k, c)
                    if m[k][j]:
                        swap_cols(k, j)
                        dirty = True
        # enforce divisibility of the trailing block by m[k][k]
        offender = None
        for i in range(k + 1, nrows):
            for j in range(k + 1, ncols):
                if m[i][j] % m[k][k]:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_op(k, offender, -1)
            continue
        if m[k][k] < 0:
            m[k] = [-x for x in m[k]]
            p[k] = [-x for x in p[k]]
        k += 1
    d = [m[i][i] for i in range(size)]
    return d, p, q


def rational_inverse(a) -> list[list[Fraction]]:
    """Inverse of a square nonsingular matrix, exact Fractions."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def solve_rational(a, b) -> list[Fraction] | None:
    """One solution x of A x = b over Q, or None if inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    m = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(a, b)]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = next((i for i in range(row, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for i in range(nrows):
            if i != row and m[i][col]:
                c = m[i][col]
                m[i] = [x - c * y for x, y in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    for i in range(row, nrows):
        if m[i][ncols]:
            return None
    x = [Fraction(0)] * ncols
    for r, col in enumerate(pivots):
        x[col] = m[r][ncols]
    return x


def signature(gram) -> tuple[int, int, int]:
    """Signature (positive, negative, zero) of a symmetric matrix.

    Exact symmetric congruence elimination; a zero diagonal with a nonzero
    off-diagonal entry is repaired by the congruence x_i -> x_i + x_j,
    which keeps the form integral over Q and symmetric.
    """
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    pos = neg = zero = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if m[i][i]), None)
        if piv is None:
            pair = None
            for i in active:
                for j in active:
                    if i != j and m[i][j]:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            for k in active:
                m[i][k] += m[j][k]
            for k in active:
                m[k][i] += m[k][j]
            piv = i
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        for i in active:
            if m[i][piv]:
                c = m[i][piv] / d
                for j in active:
                    m[i][j] -= c * m[piv][j]
                m[i][piv] = Fraction(0)
        for i in active:
            m[piv][i] = Fraction(0)
    return pos, neg, zero


def floor_sqrt_fraction(f: Fraction) -> int:
    """max{k in Z, k >= 0 : k^2 <= f} for f >= 0."""
    if f < 0:
        raise ValueError("negative radicand")
    n, d = f.numerator, f.denominator
    r = isqrt(n * d) // d
    while (r + 1) * (r + 1) <= f:
        r += 1
    while r * r > f:
        r -= 1
    return r


def lll_reduce(basis, gram=None, delta: Fraction = Fraction(3, 4)) -> Matrix:
    """LLL-reduce the rows of `basis` w.r.t. a positive definite form.

    `gram` is the ambient Gram matrix (Euclidean if None). Exact arithmetic
    throughout; the input rows must be linearly independent.
    """
    b = [list(r) for r in basis]
    n = len(b)
    if n == 0:
        return b
    dim = len(b[0])
    if gram is None:
        gram = identity(dim)

    def ip(x, y):
        return sum(x[i] * gram[i][j] * y[j] for i in range(dim) for j in range(dim))

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar_sq = [Fraction(0)] * n
        bstar = [[Fraction(x) for x in b[0]]]
        for i in range(n):
            v = [Fraction(x) for x in b[i]]
            for j in range(i):
                mu[i][j] = Fraction(ip(b[i], bstar[j])) / bstar_sq[j] if bstar_sq[j] else Fraction(0)
                v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
            if i < len(bstar):
                bstar[i] = v
            else:
                bstar.append(v)
            bstar_sq[i] = sum(v[k] * gram[k][l] * v[l] for k in range(dim) for l in range(dim))
        return mu, bstar_sq

    mu, bstar_sq = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                b[k] = [x - q * y for x, y in zip(b[k], b[j])]
                mu, bstar_sq = gso()
        if bstar_sq[k] >= (delta - mu[k][k - 1] ** 2) * bstar_sq[k - 1]:
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            mu, bstar_sq = gso()
            k = max(k - 1, 1)
    return b
