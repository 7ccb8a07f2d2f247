"""Exact integer matrix utilities: Smith normal form, kernels, solving.

Matrices are lists of rows of Python ints, so all arithmetic is
arbitrary precision.  The Smith normal form routine tracks the
unimodular transforms and their inverses by applying the inverse row
and column operations alongside, maintaining the invariants

    U @ A @ V == D,    U @ Uinv == I,    Vinv @ V == I.
"""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list  # list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    m, k = shape(a)
    k2, n = shape(b)
    if k != k2:
        raise ValueError(f"shape mismatch {m}x{k} @ {k2}x{n}")
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(n):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a: Matrix, v: list) -> list:
    m, n = shape(a)
    if len(v) != n:
        raise ValueError("vector length mismatch")
    return [sum(a[i][j] * v[j] for j in range(n)) for i in range(m)]


def transpose(a: Matrix) -> Matrix:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def column(a: Matrix, j: int) -> list:
    return [row[j] for row in a]


def from_columns(cols: list, height: int) -> Matrix:
    if not cols:
        return [[] for _ in range(height)]
    return [[c[i] for c in cols] for i in range(len(cols[0]))]


@dataclass
class SmithForm:
    """U @ A @ V == D with U, V unimodular; inverses included."""

    u: Matrix
    d: Matrix
    v: Matrix
    u_inv: Matrix
    v_inv: Matrix

    @property
    def diagonal(self) -> list:
        m, n = shape(self.d)
        return [self.d[i][i] for i in range(min(m, n))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(a: Matrix) -> SmithForm:
    """Smith normal form over the integers.

    Returns D diagonal with d1 | d2 | ... | dr (nonnegative), plus the
    unimodular row transform U (and its inverse) and column transform V
    (and its inverse).
    """
    m, n = shape(a)
    d = copy(a)
    u, u_inv = identity(m), identity(m)
    v, v_inv = identity(n), identity(n)

    def row_sub(i, j, q):
        # row i of D (and U) -= q * row j; Uinv column j += q * column i.
        if q == 0:
            return
        for t in range(n):
            d[i][t] -= q * d[j][t]
        for t in range(m):
            u[i][t] -= q * u[j][t]
        for t in range(m):
            u_inv[t][j] += q * u_inv[t][i]

    def col_sub(j, i, q):
        # column j of D (and V) -= q * column i; Vinv row i += q * row j.
        if q == 0:
            return
        for t in range(m):
            d[t][j] -= q * d[t][i]
        for t in range(n):
            v[t][j] -= q * v[t][i]
        for t in range(n):
            v_inv[i][t] += q * v_inv[j][t]

    def row_swap(i, j):
        if i == j:
            return
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for t in range(m):
            u_inv[t][i], u_inv[t][j] = u_inv[t][j], u_inv[t][i]

    def col_swap(i, j):
        if i == j:
            return
        for t in range(m):
            d[t][i], d[t][j] = d[t][j], d[t][i]
        for t in range(n):
            v[t][i], v[t][j] = v[t][j], v[t][i]
        v_inv[i], v_inv[j] = v_inv[j], v_inv[i]

    def row_negate(i):
        for t in range(n):
            d[i][t] = -d[i][t]
        for t in range(m):
            u[i][t] = -u[i][t]
        for t in range(m):
            u_inv[t][i] = -u_inv[t][i]

    for t in range(min(m, n)):
        while True:
            # Find the smallest nonzero entry of the trailing submatrix.
            pivot = None
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    x = abs(d[i][j])
                    if x and (best is None or x < best):
                        best, pivot = x, (i, j)
            if pivot is None:
                break
            row_swap(t, pivot[0])
            col_swap(t, pivot[1])
            dirty = False
            for i in range(t + 1, m):
                if d[i][t]:
                    row_sub(i, t, d[i][t] // d[t][t])
                    if d[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j]:
                    col_sub(j, t, d[t][j] // d[t][t])
                    if d[t][j]:
                        dirty = True
            if dirty:
                continue
            # Enforce divisibility of the remaining submatrix by d[t][t].
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % d[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)
        if t < min(m, n) and d[t][t] < 0:
            row_negate(t)

    return SmithForm(u=u, d=d, v=v, u_inv=u_inv, v_inv=v_inv)


def kernel_basis(a: Matrix) -> list:
    """Columns (as vectors) spanning {x in Z^n : a @ x == 0}."""
    m, n = shape(a)
    if n == 0:
        return []
    snf = smith_normal_form(a)
    diag = snf.diagonal
    basis = []
    for j in range(n):
        if j >= len(diag) or diag[j] == 0:
            basis.append(column(snf.v, j))
    return basis


def solve_int(a: Matrix, b: list):
    """An integer solution x of a @ x == b, or None."""
    m, n = shape(a)
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    snf = smith_normal_form(a)
    c = mat_vec(snf.u, b)
    diag = snf.diagonal
    y = [0] * n
    for i in range(m):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di:
                return None
            if i < n:
                y[i] = c[i] // di
    return mat_vec(snf.v, y)


def det_in_units(a: Matrix) -> bool:
    """True iff the square integer matrix has determinant +-1."""
    m, n = shape(a)
    if m != n:
        return False
    diag = smith_normal_form(a).diagonal
    return all(x == 1 for x in diag)


def lattice_basis(vectors: list, dim: int) -> list:
    """A basis of the sublattice of Z^dim spanned by the given vectors."""
    if not vectors:
        return []
    mat = from_columns(vectors, dim)
    snf = smith_normal_form(mat)
    basis = []
    for i, di in enumerate(snf.diagonal):
        if di != 0:
            basis.append([di * snf.u_inv[t][i] for t in range(dim)])
    return basis


def saturated_span_basis(vectors: list, dim: int) -> list:
    """A basis of (Q-span of the vectors) intersected with Z^dim.

    Computed as the integer kernel of the orthogonal-complement
    constraints, which is automatically saturated.
    """
    if not vectors:
        return []
    rows = [v[:] for v in vectors]
    # Orthogonal complement lattice: rows e with e . v == 0 for all v.
    comp = kernel_basis(rows)  # vectors of length dim
    if not comp:
        return [row[:] for row in identity(dim)]
    return kernel_basis([c for c in map(list, comp)])
