"""Exact integer and rational linear algebra.

Everything in this module (and this package) works over arbitrary-precision
integers and `fractions.Fraction`; no floating point is used anywhere.

Matrices are lists of lists of ints (rows); vectors are tuples of ints.
"""

from fractions import Fraction
from math import gcd

IntVector = tuple[int, ...]
IntegerMatrix = list[list[int]]


def identity_matrix(n: int) -> IntegerMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: IntegerMatrix, b: IntegerMatrix) -> IntegerMatrix:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def det(a: IntegerMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant requires a square matrix")
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def vector_gcd(v) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def is_primitive(v) -> bool:
    return vector_gcd(v) == 1


def make_primitive(v: IntVector) -> IntVector:
    g = vector_gcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(x // g for x in v)


def smith_normal_form(a: IntegerMatrix):
    """Smith normal form with transforms: returns (U, S, V) with U*a*V = S.

    S is diagonal with a divisibility chain s_1 | s_2 | ..., entries
    non-negative; U and V are unimodular.
    """
    if not a or not a[0]:
        raise ValueError("smith_normal_form requires a nonempty matrix")
    m, n = len(a), len(a[0])
    s = [row[:] for row in a]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_op(i, j, q):  # row_i -= q * row_j
        for k in range(n):
            s[i][k] -= q * s[j][k]
        for k in range(m):
            u[i][k] -= q * u[j][k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in s:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    r = min(m, n)
    for t in range(r):
        # Bring the minimal-absolute-value nonzero entry of the trailing
        # submatrix to (t, t), then clear its row and column by gcd steps.
        while True:
            pivot = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = s[i][j]
                    if x != 0 and (best is None or abs(x) < best):
                        best = abs(x)
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            dirty = False
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    row_op(i, t, q)
                    if s[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    col_op(j, t, q)
                    if s[t][j] != 0:
                        dirty = True
            if not dirty:
                break
        if s[t][t] < 0:
            negate_row(t)
        if s[t][t] == 0:
            break

    # Enforce the divisibility chain s[t][t] | s[t+1][t+1] (and push zeros last).
    changed = True
    while changed:
        changed = False
        for t in range(r - 1):
            x, y = s[t][t], s[t + 1][t + 1]
            if x == 0 and y != 0:
                swap_rows(t, t + 1)
                swap_cols(t, t + 1)
                changed = True
                continue
            if x != 0 and y % x != 0:
                col_op(t, t + 1, -1)        # col_t += col_{t+1}
                while s[t + 1][t] != 0:     # Euclid on rows t, t+1 in column t
                    q = s[t][t] // s[t + 1][t]
                    row_op(t, t + 1, q)
                    swap_rows(t, t + 1)
                q = s[t][t + 1] // s[t][t]
                col_op(t + 1, t, q)         # clear (t, t+1)
                if s[t][t] < 0:
                    negate_row(t)
                if s[t + 1][t + 1] < 0:
                    negate_row(t + 1)
                changed = True
    return u, s, v


def elementary_divisors(a: IntegerMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, s, _ = smith_normal_form(a)
    return [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i] != 0]


def hermite_normal_form(rows: IntegerMatrix) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by `rows`.

    Returns a list of rows in echelon form: pivots positive, strictly
    increasing pivot columns, and entries above each pivot reduced into
    [0, pivot). Zero rows are dropped.
    """
    if not rows:
        return []
    n = len(rows[0])
    work = [list(r) for r in rows if any(r)]
    h: list[list[int]] = []
    for col in range(n):
        if not work:
            break
        active = [r for r in work if r[col] != 0]
        if not active:
            continue
        rest = [r for r in work if r[col] == 0]
        # gcd-reduce the active rows in this column down to a single row
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            base = active[0]
            new_active = [base]
            for r in active[1:]:
                q = r[col] // base[col]
                reduced = [x - q * y for x, y in zip(r, base)]
                if reduced[col] != 0:
                    new_active.append(reduced)
                elif any(reduced):
                    rest.append(reduced)
            active = new_active
        pivot_row = active[0]
        if pivot_row[col] < 0:
            pivot_row = [-x for x in pivot_row]
        h.append(pivot_row)
        work = rest
    # reduce entries above pivots
    for j in range(len(h)):
        pcol = next(k for k in range(n) if h[j][k] != 0)
        p = h[j][pcol]
        for i in range(j):
            q = h[i][pcol] // p
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[j])]
    return h


def hermite_reduce(v, basis_rows) -> IntVector:
    """Canonical representative of v modulo the row lattice of basis_rows.

    Two vectors reduce to the same representative iff their difference lies
    in the lattice; reduction is idempotent.
    """
    h = hermite_normal_form([list(r) for r in basis_rows])
    w = list(v)
    n = len(w)
    for row in h:
        pcol = next(k for k in range(n) if row[k] != 0)
        q = w[pcol] // row[pcol]
        if q:
            w = [x - q * y for x, y in zip(w, row)]
    return tuple(w)


def in_row_lattice(v, basis_rows) -> bool:
    return all(x == 0 for x in hermite_reduce(v, basis_rows))


def rational_rank(rows) -> int:
    """Rank over the rationals of a small dense matrix (rows of ints/Fractions)."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row_idx = 0
    for col in range(cols):
        pivot = None
        for i in range(row_idx, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row_idx], m[pivot] = m[pivot], m[row_idx]
        pv = m[row_idx][col]
        for i in range(len(m)):
            if i != row_idx and m[i][col] != 0:
                factor = m[i][col] / pv
                m[i] = [a - factor * b for a, b in zip(m[i], m[row_idx])]
        rank += 1
        row_idx += 1
        if row_idx == len(m):
            break
    return rank


def solve_rational(a_rows, b) -> tuple[Fraction, ...] | None:
    """Solve A x = b exactly over the rationals.

    Returns one solution (unique when A has full column rank), or None when
    the system is inconsistent. Underdetermined systems get free variables
    set to 0.
    """
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a_rows, b)]
    ncols = len(a_rows[0])
    pivots: list[tuple[int, int]] = []
    row_idx = 0
    for col in range(ncols):
        pivot = None
        for i in range(row_idx, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row_idx], m[pivot] = m[pivot], m[row_idx]
        pv = m[row_idx][col]
        m[row_idx] = [x / pv for x in m[row_idx]]
        for i in range(len(m)):
            if i != row_idx and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [a - factor * b_ for a, b_ in zip(m[i], m[row_idx])]
        pivots.append((row_idx, col))
        row_idx += 1
        if row_idx == len(m):
            break
    for i in range(row_idx, len(m)):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for r, c in pivots:
        x[c] = m[r][ncols]
    return tuple(x)


def saturated_plane_coordinates(g0, g1):
    """Exact 2D coordinates on the saturated lattice of span{g0, g1}.

    Returns a function mapping an integer vector to its (a, b) integer
    coordinates in a basis of the saturation, or None when the vector is
    outside the rational span. Coordinates are oriented so that g0, g1 is
    a positively oriented pair (cross(coord(g0), coord(g1)) > 0).
    """
    a = [list(g0), list(g1)]
    _, _, v = smith_normal_form(a)
    d = len(g0)
    flip = False

    def raw_coord(w):
        prod = [sum(w[i] * v[i][j] for i in range(d)) for j in range(d)]
        if any(prod[2:]):
            return None
        return (prod[0], prod[1])

    c0 = raw_coord(g0)
    c1 = raw_coord(g1)
    assert c0 is not None and c1 is not None
    cross = c0[0] * c1[1] - c0[1] * c1[0]
    assert cross != 0, "g0, g1 must be linearly independent"
    if cross < 0:
        flip = True

    def coord(w):
        c = raw_coord(w)
        if c is None:
            return None
        return (c[0], -c[1]) if flip else c

    return coord


def cross2(a, b) -> int:
    return a[0] * b[1] - a[1] * b[0]
