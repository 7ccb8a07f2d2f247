"""Finitely generated abelian groups in invariant-factor coordinates.

A group is Z^rank + Z/m_1 + ... + Z/m_k with 2 <= m_1 | m_2 | ... | m_k.
Elements are integer tuples of length rank + k with torsion coordinates
reduced into [0, m_j).  Subgroups and quotients are re-expressed in
invariant-factor coordinates via Smith normal form, with exact
coordinate maps in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import AmbientMismatch, InvalidHom, NotInSubgroup
from . import intmat


@dataclass(frozen=True)
class FgAbelianGroup:
    rank: int
    torsion_moduli: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        mods = self.torsion_moduli
        if any(m < 2 for m in mods):
            raise ValueError("torsion moduli must be >= 2")
        for x, y in zip(mods, mods[1:]):
            if y % x:
                raise ValueError("torsion moduli must form a divisibility chain")

    @property
    def dim(self) -> int:
        return self.rank + len(self.torsion_moduli)

    def reduce(self, coords) -> tuple[int, ...]:
        if len(coords) != self.dim:
            raise AmbientMismatch(
                f"expected {self.dim} coordinates, got {len(coords)}"
            )
        out = list(coords[: self.rank])
        for m, c in zip(self.torsion_moduli, coords[self.rank :]):
            out.append(c % m)
        return tuple(out)

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, self.reduce(coords))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.dim)

    def basis_vectors(self):
        """Images of the standard basis of the presenting Z^dim."""
        out = []
        for i in range(self.dim):
            coords = [0] * self.dim
            coords[i] = 1
            out.append(self.element(coords))
        return out

    def relation_columns(self):
        """Columns spanning the kernel of Z^dim -> this group."""
        cols = []
        for j, m in enumerate(self.torsion_moduli):
            col = [0] * self.dim
            col[self.rank + j] = m
            cols.append(col)
        return cols

    def is_trivial(self) -> bool:
        return self.dim == 0


@dataclass(frozen=True)
class GroupElement:
    group: FgAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.group.element(
            [a + b for a, b in zip(self.coords, other.coords)]
        )

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return self.group.element(
            [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __neg__(self) -> "GroupElement":
        return self.group.element([-a for a in self.coords])

    def scale(self, n: int) -> "GroupElement":
        return self.group.element([n * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def free_part(self) -> tuple[int, ...]:
        return self.coords[: self.group.rank]

    def grade(self) -> int:
        """Canonical grading used for the graded-lex order."""
        return sum(abs(a) for a in self.coords)

    def sort_key(self):
        # graded, ties broken lexicographically with larger leading
        # coordinates first (so (1,0) precedes (0,1))
        return (self.grade(), tuple(-a for a in self.coords))

    def _check(self, other: "GroupElement"):
        if self.group != other.group:
            raise AmbientMismatch("elements live in different groups")


def lift(elt: GroupElement) -> list:
    """Canonical integer lift of an element to Z^dim."""
    return list(elt.coords)


def _invariant_layout(diag: list, total: int):
    """Split SNF diagonal positions into dropped / torsion / free indices.

    ``total`` is the number of quotient coordinates; diagonal entries
    beyond the matrix rank count as 0 (free).
    """
    free, torsion, moduli = [], [], []
    for i in range(total):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        if d == 0:
            free.append(i)
        else:
            torsion.append(i)
            moduli.append(d)
    return free, torsion, tuple(moduli)


@dataclass(frozen=True)
class QuotientPresentation:
    """ambient / <elements>, with projection and a section."""

    ambient: FgAbelianGroup
    group: FgAbelianGroup
    _u: tuple  # SNF row transform of the relation matrix
    _u_inv: tuple
    _free: tuple[int, ...]
    _torsion: tuple[int, ...]

    def project(self, elt: GroupElement) -> GroupElement:
        if elt.group != self.ambient:
            raise AmbientMismatch("element not in the ambient group")
        z = intmat.mat_vec([list(r) for r in self._u], lift(elt))
        coords = [z[i] for i in self._free] + [z[i] for i in self._torsion]
        return self.group.element(coords)

    def section(self, elt: GroupElement) -> GroupElement:
        if elt.group != self.group:
            raise AmbientMismatch("element not in the quotient group")
        z = [0] * self.ambient.dim
        for pos, i in enumerate(self._free):
            z[i] = elt.coords[pos]
        for pos, i in enumerate(self._torsion):
            z[i] = elt.coords[len(self._free) + pos]
        x = intmat.mat_vec([list(r) for r in self._u_inv], z)
        return self.ambient.element(x)

    def projection_matrix(self) -> list:
        """Matrix of project (group.dim rows, ambient.dim columns)."""
        cols = [lift(self.project(b)) for b in self.ambient.basis_vectors()]
        return intmat.from_columns(cols, self.group.dim)


def quotient_presentation(
    ambient: FgAbelianGroup, elements
) -> QuotientPresentation:
    """Present ambient / <elements> in invariant-factor coordinates."""
    n = ambient.dim
    cols = [lift(e) for e in elements]
    for e in elements:
        if e.group != ambient:
            raise AmbientMismatch("quotient elements must be ambient elements")
    cols += ambient.relation_columns()
    mat = intmat.from_columns(cols, n) if cols else intmat.zeros(n, 0)
    if not cols:
        # quotient by the zero subgroup: identity presentation
        snf = intmat.SmithForm(
            u=intmat.identity(n),
            d=intmat.zeros(n, 0),
            v=[],
            u_inv=intmat.identity(n),
            v_inv=[],
        )
    else:
        snf = intmat.smith_normal_form(mat)
    free, torsion, moduli = _invariant_layout(snf.diagonal, n)
    group = FgAbelianGroup(rank=len(free), torsion_moduli=moduli)
    return QuotientPresentation(
        ambient=ambient,
        group=group,
        _u=tuple(tuple(r) for r in snf.u),
        _u_inv=tuple(tuple(r) for r in snf.u_inv),
        _free=tuple(free),
        _torsion=tuple(torsion),
    )


@dataclass(frozen=True)
class SubgroupPresentation:
    """<elements> <= ambient, in invariant-factor coordinates."""

    ambient: FgAbelianGroup
    group: FgAbelianGroup
    _basis: tuple  # columns: lattice basis of the preimage of the subgroup
    _u2: tuple  # SNF transforms of torsion relations in basis coords
    _u2_inv: tuple
    _free: tuple[int, ...]
    _torsion: tuple[int, ...]

    def contains(self, elt: GroupElement) -> bool:
        try:
            self.to_subgroup(elt)
            return True
        except NotInSubgroup:
            return False

    def to_subgroup(self, elt: GroupElement) -> GroupElement:
        if elt.group != self.ambient:
            raise AmbientMismatch("element not in the ambient group")
        basis = [list(r) for r in self._basis]
        if not basis or not basis[0]:
            if elt.is_zero():
                return self.group.zero()
            raise NotInSubgroup(f"{elt.coords} is not in the subgroup")
        c = intmat.solve_int(basis, lift(elt))
        if c is None:
            raise NotInSubgroup(f"{elt.coords} is not in the subgroup")
        z = intmat.mat_vec([list(r) for r in self._u2], c)
        coords = [z[i] for i in self._free] + [z[i] for i in self._torsion]
        return self.group.element(coords)

    def from_subgroup(self, elt: GroupElement) -> GroupElement:
        if elt.group != self.group:
            raise AmbientMismatch("element not in the subgroup presentation")
        s = len(self._u2)
        z = [0] * s
        for pos, i in enumerate(self._free):
            z[i] = elt.coords[pos]
        for pos, i in enumerate(self._torsion):
            z[i] = elt.coords[len(self._free) + pos]
        c = intmat.mat_vec([list(r) for r in self._u2_inv], z)
        basis = [list(r) for r in self._basis]
        x = intmat.mat_vec(basis, c) if c else [0] * self.ambient.dim
        return self.ambient.element(x)


def subgroup_presentation(
    ambient: FgAbelianGroup, elements
) -> SubgroupPresentation:
    """Present the subgroup generated by the elements."""
    for e in elements:
        if e.group != ambient:
            raise AmbientMismatch("subgroup elements must be ambient elements")
    n = ambient.dim
    cols = [lift(e) for e in elements] + ambient.relation_columns()
    basis = intmat.lattice_basis(cols, n)  # basis of preimage lattice S
    s = len(basis)
    basis_mat = intmat.from_columns(basis, n)
    # Express the ambient torsion relations in S-coordinates.
    rel_cols = []
    for col in ambient.relation_columns():
        y = intmat.solve_int(basis_mat, col) if s else None
        if s and y is None:
            raise AssertionError("torsion relations must lie in the preimage")
        rel_cols.append(y if s else [])
    if s:
        rel_mat = intmat.from_columns(rel_cols, s) if rel_cols else intmat.zeros(s, 0)
        if rel_cols:
            snf = intmat.smith_normal_form(rel_mat)
            u2, u2_inv, diag = snf.u, snf.u_inv, snf.diagonal
        else:
            u2, u2_inv, diag = intmat.identity(s), intmat.identity(s), []
    else:
        u2, u2_inv, diag = [], [], []
    free, torsion, moduli = _invariant_layout(diag, s)
    group = FgAbelianGroup(rank=len(free), torsion_moduli=moduli)
    return SubgroupPresentation(
        ambient=ambient,
        group=group,
        _basis=tuple(tuple(r) for r in basis_mat),
        _u2=tuple(tuple(r) for r in u2),
        _u2_inv=tuple(tuple(r) for r in u2_inv),
        _free=tuple(free),
        _torsion=tuple(torsion),
    )


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism given by an integer matrix on presentation coordinates.

    The matrix has codomain.dim rows and domain.dim columns and must be
    compatible with the domain torsion (m_j times column j maps to zero).
    """

    domain: FgAbelianGroup
    codomain: FgAbelianGroup
    matrix: tuple

    def __post_init__(self):
        rows = self.matrix
        if len(rows) != self.codomain.dim or any(
            len(r) != self.domain.dim for r in rows
        ):
            raise AmbientMismatch(
                f"hom matrix must be {self.codomain.dim}x{self.domain.dim}"
            )
        # canonical form: reduce codomain torsion rows
        canon = []
        for i, row in enumerate(rows):
            if i >= self.codomain.rank:
                m = self.codomain.torsion_moduli[i - self.codomain.rank]
                canon.append(tuple(x % m for x in row))
            else:
                canon.append(tuple(row))
        object.__setattr__(self, "matrix", tuple(canon))
        for j in range(self.domain.rank, self.domain.dim):
            m = self.domain.torsion_moduli[j - self.domain.rank]
            img = self.codomain.element([m * r[j] for r in self.matrix])
            if not img.is_zero():
                raise InvalidHom(
                    f"column {j} is incompatible with torsion modulus {m}"
                )

    def __call__(self, elt: GroupElement) -> GroupElement:
        if elt.group != self.domain:
            raise AmbientMismatch("element not in the hom domain")
        return self.codomain.element(
            intmat.mat_vec([list(r) for r in self.matrix], lift(elt))
        )

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.codomain != self.domain:
            raise AmbientMismatch("homs are not composable")
        prod = intmat.mat_mul(
            [list(r) for r in self.matrix], [list(r) for r in other.matrix]
        )
        return GroupHom(other.domain, self.codomain, tuple(map(tuple, prod)))

    @staticmethod
    def identity(group: FgAbelianGroup) -> "GroupHom":
        return GroupHom(group, group, tuple(map(tuple, intmat.identity(group.dim))))

    @staticmethod
    def from_images(domain: FgAbelianGroup, images) -> "GroupHom":
        """Hom sending the i-th presentation basis vector to images[i]."""
        images = list(images)
        if len(images) != domain.dim:
            raise AmbientMismatch("need one image per presentation coordinate")
        codomain = images[0].group if images else None
        if codomain is None:
            raise ValueError("from_images needs a nonempty domain")
        cols = [lift(img) for img in images]
        return GroupHom(
            domain, codomain, tuple(map(tuple, intmat.from_columns(cols, domain.dim)))
        )


@lru_cache(maxsize=None)
def kernel_generators(hom: GroupHom) -> tuple:
    """Elements generating the kernel subgroup of the domain."""
    nd, nc = hom.domain.dim, hom.codomain.dim
    mat = [list(r) for r in hom.matrix]
    rel = hom.codomain.relation_columns()
    combined = [row[:] for row in mat]
    for col in rel:
        for i in range(nc):
            combined[i].append(col[i])
    if nc == 0:
        # everything maps to the trivial group
        gens = list(hom.domain.basis_vectors())
        return tuple(g for g in gens if not g.is_zero())
    gens = []
    for k in intmat.kernel_basis(combined):
        gens.append(hom.domain.element(k[:nd]))
    for col in hom.domain.relation_columns():
        gens.append(hom.domain.element(col))
    out = []
    seen = set()
    for g in gens:
        if not g.is_zero() and g.coords not in seen:
            seen.add(g.coords)
            out.append(g)
    return tuple(sorted(out, key=lambda e: e.sort_key()))


def kernel_is_trivial(hom: GroupHom) -> bool:
    return all(g.is_zero() for g in kernel_generators(hom))


def direct_sum(a: FgAbelianGroup, b: FgAbelianGroup):
    """Invariant-factor form of a + b with the two injections."""
    n = a.dim + b.dim
    free = FgAbelianGroup(rank=n)
    rels = []
    for j, m in enumerate(a.torsion_moduli):
        col = [0] * n
        col[a.rank + j] = m
        rels.append(free.element(col))
    for j, m in enumerate(b.torsion_moduli):
        col = [0] * n
        col[a.dim + b.rank + j] = m
        rels.append(free.element(col))
    pres = quotient_presentation(free, rels)
    group = pres.group

    def inj_matrix(offset, dim):
        cols = []
        for i in range(dim):
            coords = [0] * n
            coords[offset + i] = 1
            cols.append(lift(pres.project(free.element(coords))))
        return tuple(map(tuple, intmat.from_columns(cols, group.dim)))

    inj_a = GroupHom(a, group, inj_matrix(0, a.dim))
    inj_b = GroupHom(b, group, inj_matrix(a.dim, b.dim))
    return group, inj_a, inj_b
