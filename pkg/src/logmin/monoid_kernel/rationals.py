"""Exact rational linear programming for cone queries.

A small two-phase simplex over fractions.Fraction with Bland's rule
(anti-cycling, so termination is guaranteed).  This backs the three
polyhedral questions the kernel needs: membership of a vector in a
finitely generated cone, membership with a strictly positive
coefficient on a distinguished generator, and existence of a linear
functional strictly positive on a finite set of vectors.
"""

from __future__ import annotations

from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _simplex(tableau, basis, n_real, cost_row):
    """Minimize the cost row in place; Bland's rule; returns status.

    ``tableau`` rows are constraint rows [coeffs..., rhs]; ``cost_row`` is
    [reduced costs..., -objective].  Columns with index >= n_real are
    never chosen as entering columns.
    """
    m = len(tableau)
    while True:
        enter = None
        for j in range(n_real):
            if cost_row[j] < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        leave = None
        best = None
        for i in range(m):
            a = tableau[i][enter]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best, leave = ratio, i
        if leave is None:
            return UNBOUNDED
        _pivot(tableau, cost_row, basis, leave, enter)


def _pivot(tableau, cost_row, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    for i, r in enumerate(tableau):
        if i != row and r[col]:
            f = r[col]
            tableau[i] = [x - f * y for x, y in zip(r, tableau[row])]
    if cost_row[col]:
        f = cost_row[col]
        for j, y in enumerate(tableau[row]):
            cost_row[j] -= f * y
    basis[row] = col


def solve_lp(a_rows, b, c, maximize=False):
    """min (or max) c.x subject to a_rows @ x == b, x >= 0, exactly.

    Returns (status, value, x) with Fractions.
    """
    m = len(a_rows)
    n = len(c)
    rows = [[Fraction(x) for x in row] for row in a_rows]
    rhs = [Fraction(x) for x in b]
    cost = [Fraction(x) for x in c]
    if maximize:
        cost = [-x for x in cost]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    # Phase 1 tableau with artificial variables.
    tableau = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]] for i in range(m)]
    basis = [n + i for i in range(m)]
    art_cost = [Fraction(0)] * (n + m) + [Fraction(0)]
    for j in range(n + m):
        s = sum(tableau[i][j] for i in range(m) if basis[i] >= n)
        art_cost[j] = (Fraction(1) if j >= n else Fraction(0)) - s
    art_cost[-1] = -sum(tableau[i][-1] for i in range(m) if basis[i] >= n)
    status = _simplex(tableau, basis, n + m, art_cost)
    assert status == OPTIMAL  # phase 1 is always bounded below by 0
    if -art_cost[-1] != 0:
        return INFEASIBLE, None, None
    # Drive artificial variables out of the basis; drop redundant rows.
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                continue  # redundant constraint row
            _pivot(tableau, art_cost, basis, i, col)
        keep.append(i)
    tableau = [tableau[i][:n] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    # Phase 2.
    cost_row = cost + [Fraction(0)]
    for i, bi in enumerate(basis):
        if cost_row[bi]:
            f = cost_row[bi]
            cost_row = [x - f * y for x, y in zip(cost_row, tableau[i])]
    status = _simplex(tableau, basis, n, cost_row)
    if status == UNBOUNDED:
        return UNBOUNDED, None, None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tableau[i][-1]
    value = -cost_row[-1]
    if maximize:
        value = -value
    return OPTIMAL, value, x


def cone_member(target, gens) -> bool:
    """Is target a nonnegative rational combination of gens?"""
    if all(x == 0 for x in target):
        return True
    if not gens:
        return False
    dim = len(target)
    a = [[g[i] for g in gens] for i in range(dim)]
    status, _, _ = solve_lp(a, list(target), [0] * len(gens))
    return status == OPTIMAL


def cone_member_strict(target, special, gens) -> bool:
    """Is target == t*special + (combination of gens) with t > 0?"""
    dim = len(target)
    cols = [special] + list(gens)
    a = [[g[i] for g in cols] for i in range(dim)]
    c = [1] + [0] * len(gens)
    status, value, _ = solve_lp(a, list(target), c, maximize=True)
    if status == INFEASIBLE:
        return False
    if status == UNBOUNDED:
        return True
    return value > 0


def positive_functional(vectors):
    """An integer functional phi with phi . v >= 1 for every vector.

    Returns None when no such functional exists (the cone generated by
    the vectors is not pointed, or some vector is zero).
    """
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    dim = len(vectors[0])
    if any(all(x == 0 for x in v) for v in vectors):
        return None
    # phi = p - q with p, q >= 0; V(p - q) - s = 1 with slack s >= 0.
    n_vec = len(vectors)
    a = []
    for k, v in enumerate(vectors):
        row = list(v) + [-x for x in v] + [0] * n_vec
        row[2 * dim + k] = -1
        a.append(row)
    b = [1] * n_vec
    status, _, x = solve_lp(a, b, [0] * (2 * dim + n_vec))
    if status != OPTIMAL:
        return None
    phi = [x[i] - x[dim + i] for i in range(dim)]
    denom = 1
    for f in phi:
        denom = denom * f.denominator // _gcd(denom, f.denominator)
    return [int(f * denom) for f in phi]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
