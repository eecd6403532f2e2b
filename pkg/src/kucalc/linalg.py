"""Exact linear algebra over Q and Z: solving, Hermite normal form, kernels.

Everything here works on plain lists of lists.  Rational entries are
``fractions.Fraction``; integer routines take and return python ints.
Matrices are small (rank <= 5 throughout the package), so no attempt is
made to be asymptotically clever.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt


def solve_rational(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve a (possibly overdetermined) linear system A x = b over Q.

    Returns the unique solution, or None if the system is inconsistent or
    the solution is not unique.
    """
    m = len(rows)
    if m == 0:
        return None
    n = len(rows[0])
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    # inconsistent?
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    if len(pivots) < n:
        return None  # underdetermined
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = a[i][n]
    return x


def rational_nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right nullspace of A over Q."""
    m = len(rows)
    if m == 0:
        return []
    n = len(rows[0])
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(v)
    return basis


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Z-basis of {x in Z^n : A x = 0}; automatically saturated.

    Row-reduces the transpose over Z with a unimodular transform; the
    transform rows mapping to zero give the kernel.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    # work matrix: n x m (= A^T), with unimodular U (n x n), U @ A^T = H
    h = [[rows[j][i] for j in range(m)] for i in range(n)]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for c in range(m):
        # find pivot with the smallest nonzero absolute value, euclid-style
        while True:
            nz = [i for i in range(r, n) if h[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, n):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if any(h[i][c] != 0 for i in range(r, n)):
            r += 1
            if r == n:
                break
    return [u[i] for i in range(n) if all(x == 0 for x in h[i])]


def column_hnf(cols: list[list[int]]) -> list[list[int]]:
    """Column-style Hermite normal form of the lattice spanned by ``cols``.

    Input and output are lists of column vectors (each of length n).
    The result columns are a canonical basis of the integer column span:
    lower echelon, positive pivots, entries right of a pivot reduced.
    """
    if not cols:
        return []
    n = len(cols[0])
    work = [list(c) for c in cols]
    res: list[list[int]] = []
    row = 0
    while row < n and work:
        nz = [c for c in work if c[row] != 0]
        if not nz:
            row += 1
            continue
        # gcd out the pivot in this row
        while True:
            nz = sorted((c for c in work if c[row] != 0), key=lambda c: abs(c[row]))
            if len(nz) <= 1:
                break
            a = nz[0]
            changed = False
            for c in nz[1:]:
                q = c[row] // a[row]
                for i in range(n):
                    c[i] -= q * a[i]
                if c[row] != 0:
                    changed = True
            if not changed:
                break
        piv = next(c for c in work if c[row] != 0)
        work.remove(piv)
        if piv[row] < 0:
            piv = [-x for x in piv]
        # reduce previously fixed columns against the new pivot
        for c in res:
            if c[row] != 0:
                q = c[row] // piv[row]
                for i in range(n):
                    c[i] -= q * piv[i]
        res.append(piv)
        row += 1
    res.sort(key=lambda c: next(i for i, x in enumerate(c) if x != 0))
    return res


def hnf_membership(hnf_cols: list[list[int]], v: list[int]) -> list[int] | None:
    """Coordinates of v in the HNF column basis, or None if not in the lattice."""
    n = len(v)
    rem = list(v)
    coords = []
    for c in hnf_cols:
        p = next(i for i, x in enumerate(c) if x != 0)
        if rem[p] % c[p] != 0:
            return None
        q = rem[p] // c[p]
        coords.append(q)
        for i in range(n):
            rem[i] -= q * c[i]
    if any(x != 0 for x in rem):
        return None
    return coords


def solve_integer(rows: list[list[int]], rhs: list[int]) -> list[int] | None:
    """One integer solution of A x = b, or None if there is none.

    Column-reduces A with a unimodular transform V (so that A V is in
    column echelon form), solves the echelon system by forward
    substitution with divisibility checks, and maps back through V.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    work = [[rows[i][j] for i in range(m)] for j in range(n)]  # columns of A
    v = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # columns of V
    col = 0
    pivots = []
    for row in range(m):
        if col == n:
            break
        # gcd out this row across the remaining columns, euclid-style
        while True:
            nz = [j for j in range(col, n) if work[j][row] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(work[j][row]))
            work[col], work[j0] = work[j0], work[col]
            v[col], v[j0] = v[j0], v[col]
            done = True
            for j in range(col + 1, n):
                if work[j][row] != 0:
                    q = work[j][row] // work[col][row]
                    work[j] = [a - q * b for a, b in zip(work[j], work[col])]
                    v[j] = [a - q * b for a, b in zip(v[j], v[col])]
                    if work[j][row] != 0:
                        done = False
            if done:
                break
        if work[col][row] != 0:
            pivots.append((row, col))
            col += 1
    y = [0] * n
    rem = list(rhs)
    for row, j in pivots:
        if rem[row] % work[j][row] != 0:
            return None
        t = rem[row] // work[j][row]
        y[j] = t
        rem = [rem[i] - t * work[j][i] for i in range(m)]
    if any(x != 0 for x in rem):
        return None
    return [sum(v[j][i] * y[j] for j in range(n)) for i in range(n)]


def is_negative_definite(gram: list[list[int]]) -> bool:
    """Sylvester criterion on -G; the empty form counts as negative definite."""
    k = len(gram)
    neg = [[-gram[i][j] for j in range(k)] for i in range(k)]
    for t in range(1, k + 1):
        minor = _det([row[:t] for row in neg[:t]])
        if minor <= 0:
            return False
    return True


def _det(a: list[list]) -> Fraction:
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def isqrt_ceil(x: Fraction) -> int:
    """Smallest integer n >= 0 with n*n >= x (x >= 0)."""
    if x <= 0:
        return 0
    num, den = x.numerator, x.denominator
    n = isqrt(num // den)
    while Fraction(n * n) < x:
        n += 1
    return n
