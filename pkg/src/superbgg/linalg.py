"""Exact linear algebra over the rationals.

Dense matrices are lists of row lists with Fraction entries; sparse vectors
are {index: Fraction} dicts with no zero values.  Everything here is plain
Gaussian elimination with exact pivoting -- the matrices that appear in this
package are small weight blocks, so no fraction-free tricks are needed.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


# ---------------------------------------------------------------------------
# sparse vectors
# ---------------------------------------------------------------------------

def vec_iadd(acc: dict, vec: dict, scale=F1) -> dict:
    """acc += scale * vec, dropping zeros. Mutates and returns acc."""
    if not scale:
        return acc
    for k, v in vec.items():
        new = acc.get(k, F0) + scale * v
        if new:
            acc[k] = new
        else:
            acc.pop(k, None)
    return acc


def vec_scale(vec: dict, scale) -> dict:
    if not scale:
        return {}
    return {k: scale * v for k, v in vec.items()}


# ---------------------------------------------------------------------------
# dense matrices
# ---------------------------------------------------------------------------

def zeros(nrows: int, ncols: int) -> list:
    return [[F0] * ncols for _ in range(nrows)]


def identity(n: int) -> list:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = F1
    return m


def mat_mul(a: list, b: list) -> list:
    n, k = len(a), len(b)
    p = len(b[0]) if b else 0
    out = zeros(n, p)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(p):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return out


def mat_vec(a: list, v: list) -> list:
    return [sum((ai[j] * v[j] for j in range(len(v)) if v[j]), F0) for ai in a]


def transpose(a: list) -> list:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def rref(mat: list) -> tuple[list, list]:
    """Reduced row echelon form (copy) and the list of pivot columns."""
    m = [row[:] for row in mat]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(mat: list) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat)[1])


def nullspace(mat: list, ncols: int | None = None) -> list:
    """Basis of {x : mat.x = 0} as dense column vectors (list of lists)."""
    if not mat:
        return [] if not ncols else [
            [F1 if i == j else F0 for i in range(ncols)] for j in range(ncols)
        ]
    red, pivots = rref(mat)
    ncols = len(mat[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [F0] * ncols
        v[fcol] = F1
        for r, pcol in enumerate(pivots):
            v[pcol] = -red[r][fcol]
        basis.append(v)
    return basis


def solve(a: list, b: list) -> list | None:
    """One exact solution of a.x = b, or None if inconsistent."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [a[i][:] + [b[i]] for i in range(nrows)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [F0] * ncols
    for r, pcol in enumerate(pivots):
        x[pcol] = red[r][ncols]
    return x


def inverse(a: list) -> list:
    n = len(a)
    aug = [a[i][:] + identity(n)[i] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def independent_columns(cols: list) -> list:
    """Indices of a first-come maximal independent subset of column vectors."""
    if not cols:
        return []
    mat = transpose(cols)
    _, pivots = rref(mat)
    return pivots


def intersect_columnspaces(cols_a: list, cols_b: list) -> list:
    """Basis (columns) of span(cols_a) & span(cols_b)."""
    if not cols_a or not cols_b:
        return []
    n = len(cols_a[0])
    stacked = [
        [cols_a[j][i] for j in range(len(cols_a))]
        + [-cols_b[j][i] for j in range(len(cols_b))]
        for i in range(n)
    ]
    mixed = nullspace(stacked)
    na = len(cols_a)
    out = []
    for v in mixed:
        w = [F0] * n
        for j in range(na):
            if v[j]:
                for i in range(n):
                    w[i] += v[j] * cols_a[j][i]
        if any(w):
            out.append(w)
    if not out:
        return []
    keep = independent_columns(out)
    return [out[i] for i in keep]


def in_span(cols: list, v: list) -> bool:
    if not any(v):
        return True
    if not cols:
        return False
    mat = [[cols[j][i] for j in range(len(cols))] for i in range(len(v))]
    return solve(mat, v) is not None


def is_positive_definite(gram: list) -> bool:
    """Sylvester criterion on an exact symmetric matrix."""
    n = len(gram)
    m = [row[:] for row in gram]
    for k in range(n):
        if m[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            f = m[i][k] / m[k][k]
            if f:
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return True
