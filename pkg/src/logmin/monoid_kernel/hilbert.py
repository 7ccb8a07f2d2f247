"""Hilbert bases of pointed rational cones by completion.

The core engine is the Contejean-Devie completion procedure (a
Pottier-style breadth-first completion) computing the minimal nonzero
nonnegative solutions of a homogeneous integer linear system.  Cones
given by generators are first cut down to their saturated span lattice,
described by facet inequalities, and then solved as a slack system.
"""

from __future__ import annotations

from itertools import combinations

from ..errors import AmbientMismatch, BoundExceeded, NotPointed
from . import intmat, rationals
from .groups import FgAbelianGroup

NODE_CAP = 400_000


def _dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def minimal_nonneg_solutions(rows, node_cap: int = NODE_CAP):
    """Minimal nonzero x in N^n with rows @ x == 0 (Contejean-Devie).

    ``rows`` is a list of integer rows, all of length n.
    """
    if not rows:
        raise ValueError("need at least one equation row")
    n = len(rows[0])
    cols = [[row[j] for row in rows] for j in range(n)]
    zero_val = tuple([0] * len(rows))

    def value(t):
        return tuple(
            sum(cols[j][i] * t[j] for j in range(n) if t[j])
            for i in range(len(rows))
        )

    minimals: list[tuple] = []

    def dominated(t):
        return any(all(m[j] <= t[j] for j in range(n)) for m in minimals)

    frontier = {}
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        frontier[e] = tuple(cols[j])
    seen = 0
    while frontier:
        new_frontier = {}
        solutions = [t for t, v in frontier.items() if v == zero_val]
        for t in sorted(solutions):
            if not dominated(t):
                minimals.append(t)
        for t, v in frontier.items():
            if v == zero_val:
                continue
            for j in range(n):
                if _dot(v, cols[j]) < 0:
                    t2 = tuple(
                        x + 1 if i == j else x for i, x in enumerate(t)
                    )
                    if t2 in new_frontier or dominated(t2):
                        continue
                    new_frontier[t2] = tuple(
                        a + b for a, b in zip(v, cols[j])
                    )
        seen += len(new_frontier)
        if seen > node_cap:
            raise BoundExceeded(
                f"completion explored more than {node_cap} nodes"
            )
        frontier = new_frontier
    # final minimality sweep (insertion order may admit late dominations)
    out = []
    for t in sorted(minimals, key=lambda t: (sum(t), t)):
        if not any(all(m[j] <= t[j] for j in range(n)) for m in out):
            out.append(t)
    return out


def nonneg_solution(rows, rhs):
    """Graded-lex least x in N^n with rows @ x == rhs, or None."""
    n = len(rows[0])
    hom = [list(row) + [-r] for row, r in zip(rows, rhs)]
    best = None
    for sol in minimal_nonneg_solutions(hom):
        if sol[n] == 1:
            cand = sol[:n]
            key = (sum(cand), cand)
            if best is None or key < best[0]:
                best = (key, cand)
    return best[1] if best else None


def _primitive(vec):
    g = 0
    for x in vec:
        g = _gcd(g, abs(x))
    if g <= 1:
        return list(vec)
    return [x // g for x in vec]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def facet_normals(gens, dim):
    """Facet normals of the full-dimensional cone generated by gens.

    Every facet of a finitely generated full-dimensional cone is
    spanned by dim-1 linearly independent generators, so enumerating
    those subsets finds all facets.
    """
    normals = set()
    for subset in combinations(range(len(gens)), dim - 1):
        rows = [list(gens[i]) for i in subset]
        if rows:
            kb = intmat.kernel_basis(rows)
        else:
            kb = [[1]] if dim == 1 else []
        if len(kb) != 1:
            continue
        psi = _primitive(kb[0])
        vals = [_dot(psi, g) for g in gens]
        if all(v >= 0 for v in vals):
            normals.add(tuple(psi))
        elif all(v <= 0 for v in vals):
            normals.add(tuple(-x for x in psi))
    return sorted(normals)


def cone_is_pointed(gens) -> bool:
    """No nonzero generator has its negative inside the cone."""
    vecs = [g for g in gens if any(x != 0 for x in g)]
    return not any(
        rationals.cone_member(tuple(-x for x in g), vecs) for g in vecs
    )


def hilbert_basis_lattice(gens, dim):
    """Hilbert basis of cone(gens) intersected with Z^dim (raw vectors)."""
    vecs = [tuple(g) for g in gens if any(x != 0 for x in g)]
    if not vecs:
        return []
    if not cone_is_pointed(vecs):
        raise NotPointed("cone contains a line")
    span = intmat.saturated_span_basis([list(v) for v in vecs], dim)
    s = len(span)
    span_mat = intmat.from_columns(span, dim)
    local = []
    for v in vecs:
        c = intmat.solve_int(span_mat, list(v))
        assert c is not None  # saturated span contains the generators
        local.append(tuple(c))
    facets = facet_normals(local, s)
    assert facets, "pointed full-dimensional cone must have facets"
    f = len(facets)
    rows = []
    for k, psi in enumerate(facets):
        row = list(psi) + [-x for x in psi] + [0] * f
        row[2 * s + k] = -1
        rows.append(row)
    candidates = set()
    for sol in minimal_nonneg_solutions(rows):
        z = tuple(sol[j] - sol[s + j] for j in range(s))
        if any(x != 0 for x in z):
            candidates.add(z)

    def in_cone(z):
        return all(_dot(psi, z) >= 0 for psi in facets)

    basis_local = []
    for z in candidates:
        reducible = any(
            y != z and in_cone([a - b for a, b in zip(z, y)])
            for y in candidates
        )
        if not reducible:
            basis_local.append(z)
    out = [intmat.mat_vec(span_mat, list(z)) for z in basis_local]
    return sorted(
        out, key=lambda v: (sum(abs(x) for x in v), tuple(-x for x in v))
    )


def hilbert_basis(cone_generators, lattice: FgAbelianGroup):
    """The unique minimal generating set of cone(generators) in lattice.

    ``lattice`` must be free (torsion-free); torsion is handled by the
    callers at the monoid level.
    """
    if lattice.torsion_moduli:
        raise AmbientMismatch("hilbert_basis expects a free lattice")
    for g in cone_generators:
        if g.group != lattice:
            raise AmbientMismatch("cone generators must live in the lattice")
    raw = hilbert_basis_lattice([g.coords for g in cone_generators], lattice.dim)
    return tuple(lattice.element(v) for v in raw)
