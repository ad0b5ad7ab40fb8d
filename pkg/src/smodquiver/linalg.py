"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions.  Everything here is small and dense;
no pivoting heuristics beyond "first nonzero", which is fine for exact
arithmetic.
"""

from __future__ import annotations

from fractions import Fraction

Q0 = Fraction(0)
Q1 = Fraction(1)


def qvec(seq):
    return [Fraction(x) for x in seq]


def qmat(rows):
    return [qvec(r) for r in rows]


def zeros(n, m):
    return [[Q0] * m for _ in range(n)]


def identity(n):
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = Q1
    return mat


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(m):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def mat_vec(a, v):
    return [sum((c * x for c, x in zip(row, v) if c and x), Q0) for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def is_zero_mat(a):
    return all(all(x == 0 for x in row) for row in a)


def rref(mat):
    """Reduced row echelon form (in place on a copy); returns (rref, pivots)."""
    m = [row[:] for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat):
    return len(rref(mat)[1])


def row_space_basis(mat):
    """Basis of the row space, as the nonzero rows of the rref."""
    red, pivots = rref(mat)
    return [red[i] for i in range(len(pivots))]


def nullspace(mat):
    """Basis of the right kernel of `mat` (list of column vectors)."""
    if not mat:
        return []
    cols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q0] * cols
        v[fc] = Q1
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution x of mat*x = rhs, or None if inconsistent."""
    if not mat:
        return [] if all(x == 0 for x in rhs) else None
    cols = len(mat[0])
    aug = [row[:] + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Q0] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


class SpanSolver:
    """Incremental row-space membership/coordinate queries.

    Feed spanning vectors with `add`; vectors that enlarge the span are
    retained as generators.  `coords(v)` expresses v in the retained
    generators, or returns None if v is outside the span.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rows = []          # reduced independent rows
        self.pivot_of_row = []
        self.exprs = []         # exprs[i]: rows[i] as a combo of generators
        self.n_kept = 0

    def _reduce(self, v):
        """Return (red, combo) with v = red + sum combo[j]*generator_j."""
        v = v[:]
        combo = [Q0] * self.n_kept
        for row, pc, e in zip(self.rows, self.pivot_of_row, self.exprs):
            c = v[pc]
            if c:
                for j in range(self.dim):
                    if row[j]:
                        v[j] -= c * row[j]
                for j, ej in enumerate(e):
                    if ej:
                        combo[j] += c * ej
        return v, combo

    def add(self, v):
        """Add a spanning vector; returns True if it enlarged the span."""
        red, combo = self._reduce(qvec(v))
        pc = next((j for j, x in enumerate(red) if x != 0), None)
        if pc is None:
            return False
        inv = Q1 / red[pc]
        for e in self.exprs:
            e.append(Q0)
        # red = v - sum combo_j g_j, so red/red[pc] in generator coordinates:
        new_expr = [-inv * c for c in combo] + [inv]
        self.rows.append([x * inv for x in red])
        self.pivot_of_row.append(pc)
        self.exprs.append(new_expr)
        self.n_kept += 1
        return True

    def coords(self, v):
        """Coordinates of v in the retained generators, or None."""
        red, combo = self._reduce(qvec(v))
        if any(x != 0 for x in red):
            return None
        return combo

    def contains(self, v):
        return self.coords(v) is not None
