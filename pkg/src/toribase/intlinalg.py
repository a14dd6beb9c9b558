"""Exact integer linear algebra: echelon forms, kernels, HNF, Smith diagonal.

Everything works on plain Python ints (arbitrary precision), lists of lists.
Matrices are lists of rows and are never mutated by callers' references;
functions copy their input.
"""

from __future__ import annotations


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y and g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def _eliminate_column(rows: list[list[int]], start: int, col: int) -> bool:
    """Zero out column `col` below `start` leaving a single pivot at `start`.

    Uses unimodular row operations only. Returns False when the column is
    already zero from `start` down (no pivot produced).
    """
    pivot = None
    for i in range(start, len(rows)):
        if rows[i][col] != 0:
            pivot = i
            break
    if pivot is None:
        return False
    rows[start], rows[pivot] = rows[pivot], rows[start]
    for i in range(start + 1, len(rows)):
        a, b = rows[start][col], rows[i][col]
        if b == 0:
            continue
        if b % a == 0:
            q = b // a
            rows[i] = [x - q * y for x, y in zip(rows[i], rows[start])]
        else:
            g, x, y = _xgcd(a, b)
            # unimodular 2x2 transform: det = x*(a//g) - (-b//g)*y = (ax+by)/g = 1
            u, v = a // g, b // g
            r1, r2 = rows[start], rows[i]
            rows[start] = [x * p + y * q2 for p, q2 in zip(r1, r2)]
            rows[i] = [-v * p + u * q2 for p, q2 in zip(r1, r2)]
    if rows[start][col] < 0:
        rows[start] = [-x for x in rows[start]]
    return True


def row_echelon(matrix: list[list[int]]) -> tuple[list[list[int]], int]:
    """Integer row echelon form via unimodular ops; returns (rows, rank)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return [], 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        if _eliminate_column(rows, r, c):
            r += 1
    return rows, r


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix (over Q, equivalently over Z)."""
    return row_echelon(matrix)[1]


def kernel_basis(matrix: list[list[int]]) -> list[list[int]]:
    """Basis of the saturated lattice {v in Z^m : matrix @ v = 0}.

    Row-reduces [A^T | I_m]; rows whose A^T-part vanished carry kernel
    vectors, and because only unimodular row operations are used they span
    the full integer kernel (not a finite-index sublattice).
    """
    if not matrix:
        return []
    n = len(matrix)
    m = len(matrix[0])
    aug = [[matrix[i][j] for i in range(n)] + [1 if k == j else 0 for k in range(m)]
           for j in range(m)]
    r = 0
    for c in range(n):
        if r >= m:
            break
        if _eliminate_column(aug, r, c):
            r += 1
    basis = []
    for row in aug[r:]:
        if any(row[:n]):
            raise AssertionError("echelon left part not cleared")
        basis.append(row[n:])
    return basis


def hermite_normal_form(matrix: list[list[int]]) -> list[list[int]]:
    """Canonical row-style HNF (nonzero rows only).

    Pivots positive, entries above each pivot reduced into [0, pivot).
    Two matrices have equal row lattices iff their HNFs are equal.
    """
    rows, rank = row_echelon(matrix)
    rows = rows[:rank]
    ncols = len(matrix[0]) if matrix else 0
    pivots = []
    for row in rows:
        c = next(i for i in range(ncols) if row[i] != 0)
        pivots.append(c)
    for i in range(rank - 1, -1, -1):
        p = pivots[i]
        piv = rows[i][p]
        for j in range(i):
            q = rows[j][p] // piv
            if q:
                rows[j] = [x - q * y for x, y in zip(rows[j], rows[i])]
    return rows


def lattices_equal(gens_a: list[list[int]], gens_b: list[list[int]]) -> bool:
    """Whether two integer generating sets span the same row lattice."""
    if not gens_a or not gens_b:
        return not any(any(r) for r in gens_a) and not any(any(r) for r in gens_b)
    return hermite_normal_form(gens_a) == hermite_normal_form(gens_b)


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (divisibility chain)."""
    rows = [list(r) for r in matrix]
    if not rows or not rows[0]:
        return []
    m, n = len(rows), len(rows[0])
    diag = []
    top = 0
    while top < m and top < n:
        # find a nonzero entry to act as the working pivot
        found = None
        for i in range(top, m):
            for j in range(top, n):
                if rows[i][j] != 0:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        rows[top], rows[i] = rows[i], rows[top]
        for r in rows:
            r[top], r[j] = r[j], r[top]
        # alternate row/column elimination until the cross is clear
        while True:
            for i in range(top + 1, m):
                a, b = rows[top][top], rows[i][top]
                if b == 0:
                    continue
                if b % a == 0:
                    q = b // a
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[top])]
                else:
                    g, x, y = _xgcd(a, b)
                    u, v = a // g, b // g
                    r1, r2 = rows[top], rows[i]
                    rows[top] = [x * p + y * q2 for p, q2 in zip(r1, r2)]
                    rows[i] = [-v * p + u * q2 for p, q2 in zip(r1, r2)]
            if all(rows[i][top] == 0 for i in range(top + 1, m)):
                col_done = True
                for j in range(top + 1, n):
                    a, b = rows[top][top], rows[top][j]
                    if b == 0:
                        continue
                    col_done = False
                    if b % a == 0:
                        q = b // a
                        for r in rows:
                            r[j] -= q * r[top]
                    else:
                        g, x, y = _xgcd(a, b)
                        u, v = a // g, b // g
                        for r in rows:
                            p, q2 = r[top], r[j]
                            r[top] = x * p + y * q2
                            r[j] = -v * p + u * q2
                if col_done:
                    break
        diag.append(abs(rows[top][top]))
        top += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g, _, _ = _xgcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
    return diag
