"""Exact integer and rational linear algebra.

Everything here works over Python ints and fractions.Fraction; no floating
point ever enters a result.  Matrices are lists (or tuples) of rows.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(mat) -> list[list]:
    return [list(col) for col in zip(*mat)] if mat else []


def mat_mul(a, b) -> list[list]:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(mat, vec) -> list:
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def is_symmetric(mat) -> bool:
    n = len(mat)
    return all(len(row) == n for row in mat) and all(
        mat[i][j] == mat[j][i] for i in range(n) for j in range(i)
    )


def bareiss_determinant(mat: Matrix) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def fraction_determinant(mat) -> Fraction:
    """Determinant of a rational matrix, via scaling to an integer one."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    rows = [[Fraction(x) for x in row] for row in mat]
    scale = 1
    for row in rows:
        for x in row:
            scale = scale * x.denominator // _gcd(scale, x.denominator)
    scaled = [[int(x * scale) for x in row] for row in rows]
    return Fraction(bareiss_determinant(scaled), scale**n)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def rational_rank(mat) -> int:
    """Rank of a matrix with rational entries."""
    rows = [[Fraction(x) for x in row] for row in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def invert_rational(mat) -> list[list[Fraction]]:
    """Inverse of a square rational matrix by Gauss-Jordan elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def symmetric_signature(mat) -> tuple[int, int, int]:
    """Inertia (p, q, z) of a symmetric rational matrix, exactly.

    Symmetric Gaussian elimination with rational pivots; a remaining block
    with zero diagonal but a nonzero off-diagonal entry is handled by the
    usual basis change e_i -> e_i + e_j, which leaves inertia unchanged.
    """
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    active = list(range(n))
    p = q = z = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is None:
            pair = next(
                ((i, j) for i in active for j in active if i != j and a[i][j] != 0),
                None,
            )
            if pair is None:
                z += len(active)
                break
            i, j = pair
            for k in active:
                a[i][k] += a[j][k]
            for k in active:
                a[k][i] += a[k][j]
            piv = i
        d = a[piv][piv]
        if d > 0:
            p += 1
        else:
            q += 1
        active.remove(piv)
        for i in active:
            if a[i][piv] != 0:
                f = a[i][piv] / d
                for j in active:
                    a[i][j] -= f * a[piv][j]
                a[i][piv] = Fraction(0)
        for j in active:
            a[piv][j] = Fraction(0)
    return p, q, z


def smith_normal_form(mat: Matrix) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (S, U, V) with S = U @ mat @ V.

    U and V are unimodular; S is diagonal with nonnegative entries satisfying
    the divisibility chain S[0][0] | S[1][1] | ...
    """
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    m = len(a[0]) if n else 0
    u = identity(n)
    v = identity(m)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, m):
                    x = a[i][j]
                    if x != 0 and (best is None or abs(x) < abs(best[2])):
                        best = (i, j, x)
            if best is None:
                break
            bi, bj, _ = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    add_row(i, t, -(a[i][t] // a[t][t]))
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    add_col(j, t, -(a[t][j] // a[t][t]))
            if all(a[i][t] == 0 for i in range(t + 1, n)) and all(
                a[t][j] == 0 for j in range(t + 1, m)
            ):
                pivot = a[t][t]
                bad = next(
                    (
                        (i, j)
                        for i in range(t + 1, n)
                        for j in range(t + 1, m)
                        if a[i][j] % pivot != 0
                    ),
                    None,
                )
                if bad is None:
                    break
                add_row(t, bad[0], 1)
        if t < min(n, m) and a[t][t] < 0:
            negate_row(t)
    return a, u, v


def elementary_divisors(mat: Matrix) -> list[int]:
    """Nontrivial invariant factors (> 1) of an integer matrix."""
    s, _, _ = smith_normal_form(mat)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i] > 1]


def kernel_basis(mat: Matrix) -> list[list[int]]:
    """Basis of the integer (right) kernel {x : mat @ x = 0}.

    The kernel of an integer matrix is a saturated subgroup of Z^m, so the
    basis spans a primitive sublattice.  Rows of the result are canonicalized
    via Hermite normal form.
    """
    n = len(mat)
    m = len(mat[0]) if n else 0
    if n == 0:
        return identity(m)
    s, _, v = smith_normal_form(mat)
    r = sum(1 for i in range(min(n, m)) if s[i][i] != 0)
    cols = [[v[row][j] for row in range(m)] for j in range(r, m)]
    return hermite_row_basis(cols)


def hermite_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical row-HNF basis of the lattice spanned by the given rows.

    Pivots are positive, entries above a pivot are reduced to [0, pivot),
    and zero rows are dropped.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    m = len(work[0])
    basis: list[list[int]] = []
    for col in range(m):
        sel = [r for r in work if r[col] != 0]
        if not sel:
            continue
        while len(sel) > 1:
            sel.sort(key=lambda r: abs(r[col]))
            head = sel[0]
            for r in sel[1:]:
                c = r[col] // head[col]
                for k in range(col, m):
                    r[k] -= c * head[k]
            sel = [head] + [r for r in sel[1:] if r[col] != 0]
        head = sel[0]
        if head[col] < 0:
            head[:] = [-x for x in head]
        basis.append(head)
        work = [r for r in work if r is not head and any(r)]
    for i in range(1, len(basis)):
        piv = next(k for k in range(m) if basis[i][k] != 0)
        for j in range(i):
            c = basis[j][piv] // basis[i][piv]
            if c:
                for k in range(m):
                    basis[j][k] -= c * basis[i][k]
    return basis
