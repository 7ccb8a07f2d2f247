"""Structure theory of integral monomorphisms of fine sharp monoids.

Implements the splitting of every element into a primitive part plus a
domain part, the ideal generated by the nonzero domain elements and its
nilpotents, the cokernel-on-primitives with its trichotomy
classification, the two normal-form constructions (splitting off an N
factor, and the cocartesian presentation over the diagonal), amalgamated
pushouts, and quotients by faces.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from ..errors import (
    ConstructionFailure,
    NilpotenceInconclusive,
    NilpotentsPresent,
    NotAFace,
    NotAMember,
    NotIntegralMono,
    NotSharp,
    WrongCokernelClass,
)
from . import hilbert, intmat
from .groups import (
    FgAbelianGroup,
    GroupElement,
    GroupHom,
    direct_sum,
    lift,
    quotient_presentation,
    subgroup_presentation,
)
from .homs import MonoidHom, image_monoid, is_monomorphism
from .monoids import (
    FgMonoid,
    contains,
    functional_value,
    groupify,
    is_saturated,
    is_sharp,
    members_below,
    membership_functional,
)

DEFAULT_NILPOTENCE_N_MAX = 16
DEFAULT_NILPOTENCE_DEGREE = 12


def _require_sharp(h: MonoidHom):
    if not (is_sharp(h.domain) and is_sharp(h.codomain)):
        raise NotSharp("operation requires sharp domain and codomain")


def _ambient_rows_with_torsion_slacks(columns, ambient: FgAbelianGroup):
    """Rows of 'sum c_i columns_i == 0 in ambient' over N-variables.

    Returns (rows, n_slack): torsion coordinates get a +-pair of slack
    columns absorbing multiples of the modulus.
    """
    dim = ambient.dim
    k = len(ambient.torsion_moduli)
    rows = []
    for i in range(dim):
        row = [c[i] for c in columns]
        for j, m in enumerate(ambient.torsion_moduli):
            if i == ambient.rank + j:
                row += [m, -m]
            else:
                row += [0, 0]
        rows.append(row)
    return rows, 2 * k


@lru_cache(maxsize=None)
def relation_generators(h: MonoidHom) -> tuple:
    """Hilbert-level generators of {(q1, q2, p1, p2) : h(q1)+p1 == h(q2)+p2}.

    Returned as tuples of monoid elements.  Every relation is a sum of
    these, so exchange witnesses need only be checked here (witnesses
    add componentwise).
    """
    q = h.domain
    p = h.codomain
    nq, np_ = len(q.generators), len(p.generators)
    if nq == 0 and np_ == 0:
        return ()
    cols = []
    for qg in q.generators:
        cols.append(lift(h(qg)))
    for pg in p.generators:
        cols.append(lift(pg))
    for qg in q.generators:
        cols.append([-x for x in lift(h(qg))])
    for pg in p.generators:
        cols.append([-x for x in lift(pg)])
    rows, _ = _ambient_rows_with_torsion_slacks(cols, p.ambient)
    sols = hilbert.minimal_nonneg_solutions(rows)
    out = []
    for s in sols:
        a = s[:nq]
        c = s[nq : nq + np_]
        b = s[nq + np_ : 2 * nq + np_]
        d = s[2 * nq + np_ : 2 * nq + 2 * np_]
        q1 = _combine(q, a)
        q2 = _combine(q, b)
        p1 = _combine(p, c)
        p2 = _combine(p, d)
        if (h(q1) + p1) != (h(q2) + p2):
            raise AssertionError("relation solver produced a non-relation")
        out.append((q1, q2, p1, p2))
    return tuple(out)


def _combine(monoid: FgMonoid, coeffs) -> GroupElement:
    total = monoid.ambient.zero()
    for c, g in zip(coeffs, monoid.generators):
        if c:
            total = total + g.scale(c)
    return total


def has_exchange_witness(h: MonoidHom, q1, q2, p1, p2) -> bool:
    """Exchange condition: q3, q4 in Q and p in P with p1 = h(q3)+p,
    p2 = h(q4)+p and q1+q3 = q2+q4, decided as one exact feasibility."""
    q = h.domain
    p = h.codomain
    nq, np_ = len(q.generators), len(p.generators)
    # unknowns: a (q3 coeffs), b (p coeffs), c (q4 coeffs)
    cols_p = [lift(h(qg)) for qg in q.generators]
    cols_p += [lift(pg) for pg in p.generators]
    cols_p += [[0] * p.ambient.dim for _ in range(nq)]
    rows_p, _ = _ambient_rows_with_torsion_slacks(cols_p, p.ambient)
    cols_q = [lift(qg) for qg in q.generators]
    cols_q += [[0] * q.ambient.dim for _ in range(np_)]
    cols_q += [[-x for x in lift(qg)] for qg in q.generators]
    rows_q, _ = _ambient_rows_with_torsion_slacks(cols_q, q.ambient)
    # pad slack blocks so both row groups share one variable list
    n_core = nq + np_ + nq
    rows = []
    rhs = []
    kp = 2 * len(p.ambient.torsion_moduli)
    kq = 2 * len(q.ambient.torsion_moduli)
    for row, target in zip(rows_p, lift(p1)):
        rows.append(row[:n_core] + row[n_core:] + [0] * kq)
        rhs.append(target)
    delta = q2 - q1
    for row, target in zip(rows_q, lift(delta)):
        rows.append(row[:n_core] + [0] * kp + row[n_core:])
        rhs.append(target)
    if not rows:
        return True
    return hilbert.nonneg_solution(rows, rhs) is not None


@lru_cache(maxsize=None)
def integrality_failure(h: MonoidHom):
    """None if h is an integral morphism, else a witness relation."""
    _require_sharp(h)
    for q1, q2, p1, p2 in relation_generators(h):
        if not has_exchange_witness(h, q1, q2, p1, p2):
            return (q1, q2, p1, p2)
    return None


def is_integral_morphism(h: MonoidHom) -> bool:
    return integrality_failure(h) is None


@lru_cache(maxsize=None)
def validate_integral_mono(h: MonoidHom):
    """Gate for the splitting-based operations."""
    _require_sharp(h)
    if not is_monomorphism(h):
        raise NotIntegralMono("hom is not a monomorphism")
    if not is_integral_morphism(h):
        raise NotIntegralMono(
            f"hom is not integral; witness relation {integrality_failure(h)}"
        )


def primitive_decompose(h: MonoidHom, p: GroupElement):
    """The unique p = p' + h(q) with p' primitive for the domain.

    Greedy stripping of domain generators; correctness relies on the
    uniqueness of the decomposition for integral monomorphisms.
    """
    validate_integral_mono(h)
    if not contains(h.codomain, p):
        raise NotAMember(f"{p.coords} is not in the codomain monoid")
    current = p
    acc = h.domain.ambient.zero()
    stripped = True
    while stripped:
        stripped = False
        for qg in h.domain.generators:
            while contains(h.codomain, current - h(qg)):
                current = current - h(qg)
                acc = acc + qg
                stripped = True
    return current, acc


def is_primitive(h: MonoidHom, p: GroupElement) -> bool:
    prim, q = primitive_decompose(h, p)
    return q.is_zero()


def in_ideal(h: MonoidHom, p: GroupElement) -> bool:
    """Membership in I_Q = (Q \\ 0) + P, via the primitive decomposition."""
    prim, q = primitive_decompose(h, p)
    return not q.is_zero()


class Nilpotence(enum.Enum):
    NONE = "none"
    NILPOTENT = "nilpotent"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class NilpotenceReport:
    status: Nilpotence
    witness_p: GroupElement | None = None
    witness_n: int | None = None
    n_max: int | None = None
    degree_cap: int | None = None

    @property
    def found(self) -> bool:
        return self.status is Nilpotence.NILPOTENT


def _nilpotent_multiplier(h: MonoidHom, p: GroupElement, cap: int = 4096) -> int:
    for n in range(2, cap + 1):
        if in_ideal(h, p.scale(n)):
            return n
    raise AssertionError("radical membership promised a multiplier")


@lru_cache(maxsize=None)
def has_nilpotents(
    h: MonoidHom,
    n_max: int = DEFAULT_NILPOTENCE_N_MAX,
    degree_cap: int = DEFAULT_NILPOTENCE_DEGREE,
) -> NilpotenceReport:
    """Search for p not in I_Q with n p in I_Q.

    Exact (face-by-face cone-radical test) when the codomain is
    saturated; otherwise a bounded search that reports inconclusive
    rather than absent.
    """
    validate_integral_mono(h)
    if h.domain.is_zero_monoid:
        return NilpotenceReport(status=Nilpotence.NONE)
    if is_saturated(h.codomain):
        return _has_nilpotents_saturated(h)
    return _has_nilpotents_bounded(h, n_max, degree_cap)


def _has_nilpotents_saturated(h: MonoidHom) -> NilpotenceReport:
    p_monoid = h.codomain
    gp = groupify(p_monoid)
    s = gp.group.rank
    local = [gp.embed(g) for g in p_monoid.generators]
    frees = [e.free_part() for e in local]
    image_frees = [gp.embed(h(qg)).free_part() for qg in h.domain.generators]
    facets = hilbert.facet_normals(frees, s)
    n_t = len(gp.group.torsion_moduli)

    def dot(psi, v):
        return sum(a * b for a, b in zip(psi, v))

    # enumerate faces by the generator subsets they cut out
    faces = {}
    for mask in range(1 << len(facets)):
        chosen = [facets[k] for k in range(len(facets)) if mask >> k & 1]
        gen_set = frozenset(
            i
            for i, v in enumerate(frees)
            if all(dot(psi, v) == 0 for psi in chosen)
        )
        if gen_set in faces or not gen_set:
            continue
        span = [frees[i] for i in gen_set]
        full = [psi for psi in facets if all(dot(psi, v) == 0 for v in span)]
        faces[gen_set] = full
    for gen_set, zero_facets in sorted(faces.items(), key=lambda kv: sorted(kv[0])):
        hits = [
            v
            for v in image_frees
            if all(dot(psi, v) == 0 for psi in zero_facets)
        ]
        if not hits:
            continue
        # minimal generators of the relative-interior ideal on this face
        strict = [psi for psi in facets if psi not in zero_facets]
        rows = []
        for psi in zero_facets:
            rows.append(list(psi) + [-x for x in psi] + [0] * len(strict) + [0])
        for k, psi in enumerate(strict):
            row = list(psi) + [-x for x in psi] + [0] * len(strict) + [-1]
            row[2 * s + k] = -1
            rows.append(row)
        for sol in hilbert.minimal_nonneg_solutions(rows):
            if sol[-1] != 1:
                continue
            m = [sol[j] - sol[s + j] for j in range(s)]
            elem = gp.unembed(gp.group.element(tuple(m) + (0,) * n_t))
            assert contains(p_monoid, elem)
            if not in_ideal(h, elem):
                n = _nilpotent_multiplier(h, elem)
                return NilpotenceReport(
                    status=Nilpotence.NILPOTENT, witness_p=elem, witness_n=n
                )
    return NilpotenceReport(status=Nilpotence.NONE)


def _has_nilpotents_bounded(
    h: MonoidHom, n_max: int, degree_cap: int
) -> NilpotenceReport:
    p_monoid = h.codomain
    for p in members_below(
        p_monoid, lambda e: functional_value(p_monoid, e), degree_cap
    ):
        if p.is_zero() or in_ideal(h, p):
            continue
        for n in range(2, n_max + 1):
            if in_ideal(h, p.scale(n)):
                return NilpotenceReport(
                    status=Nilpotence.NILPOTENT, witness_p=p, witness_n=n
                )
    return NilpotenceReport(
        status=Nilpotence.INCONCLUSIVE, n_max=n_max, degree_cap=degree_cap
    )


class CokernelKind(enum.Enum):
    ZERO = "Zero"
    FREE_RANK_ONE = "FreeRankOne"
    GROUP_Z = "GroupZ"
    OTHER = "Other"


@dataclass(frozen=True)
class CokernelResult:
    kind: CokernelKind
    monoid: FgMonoid  # image of P in P^gp/Q^gp (primitive representatives)
    torsion_free: bool
    generator: GroupElement | None = None  # FreeRankOne: the primitive p
    pair: tuple | None = None  # GroupZ: (p1, pm1), p1 graded-lex minimal
    note: str = ""
    class_values: tuple = ()  # integer class of each codomain generator


@lru_cache(maxsize=None)
def _class_projection(h: MonoidHom):
    gp = groupify(h.codomain)
    images = [gp.embed(h(qg)) for qg in h.domain.generators]
    return gp, quotient_presentation(gp.group, images)


def cokernel_class_of(h: MonoidHom, p: GroupElement) -> GroupElement:
    """Class of a codomain element in P^gp/Q^gp."""
    gp, pres = _class_projection(h)
    return pres.project(gp.embed(p))


@lru_cache(maxsize=None)
def cokernel(h: MonoidHom) -> CokernelResult:
    """The cokernel realized on primitive representatives, classified."""
    validate_integral_mono(h)
    gp, pres = _class_projection(h)
    w = pres.group
    torsion_free = not w.torsion_moduli
    classes = [cokernel_class_of(h, pg) for pg in h.codomain.generators]
    monoid = FgMonoid(w, tuple(classes))
    if all(c.is_zero() for c in classes):
        return CokernelResult(
            kind=CokernelKind.ZERO, monoid=monoid, torsion_free=torsion_free
        )
    sub = subgroup_presentation(w, classes)
    if sub.group != FgAbelianGroup(1):
        return CokernelResult(
            kind=CokernelKind.OTHER,
            monoid=monoid,
            torsion_free=torsion_free,
            note=f"groupified cokernel is {sub.group}",
        )
    values = [sub.to_subgroup(c).coords[0] for c in classes]
    nonzero = [v for v in values if v]
    if all(v >= 0 for v in nonzero) or all(v <= 0 for v in nonzero):
        d = 0
        for v in nonzero:
            d = _gcd(d, abs(v))
        if not any(abs(v) == d for v in nonzero):
            return CokernelResult(
                kind=CokernelKind.OTHER,
                monoid=monoid,
                torsion_free=torsion_free,
                note="rank-one value monoid is not free",
                class_values=tuple(values),
            )
        j = next(i for i, v in enumerate(values) if abs(v) == d)
        prim, _ = primitive_decompose(h, h.codomain.generators[j])
        return CokernelResult(
            kind=CokernelKind.FREE_RANK_ONE,
            monoid=monoid,
            torsion_free=torsion_free,
            generator=prim,
            class_values=tuple(values),
        )
    d = 0
    for v in nonzero:
        d = _gcd(d, abs(v))
    plus = _element_with_class_value(h, values, d)
    minus = _element_with_class_value(h, values, -d)
    p_plus, _ = primitive_decompose(h, plus)
    p_minus, _ = primitive_decompose(h, minus)
    pair = tuple(sorted((p_plus, p_minus), key=lambda e: e.sort_key()))
    return CokernelResult(
        kind=CokernelKind.GROUP_Z,
        monoid=monoid,
        torsion_free=torsion_free,
        pair=pair,
        class_values=tuple(values),
    )


def _element_with_class_value(h: MonoidHom, values, target) -> GroupElement:
    coeffs = hilbert.nonneg_solution([list(values)], [target])
    if coeffs is None:
        raise ConstructionFailure(
            f"no codomain element found in class {target}"
        )
    return _combine(h.codomain, coeffs)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _require_no_nilpotents(h: MonoidHom):
    report = has_nilpotents(h)
    if report.status is Nilpotence.NILPOTENT:
        raise NilpotentsPresent(
            f"nilpotent element {report.witness_p.coords} "
            f"(multiplier {report.witness_n})"
        )
    if report.status is Nilpotence.INCONCLUSIVE:
        raise NilpotenceInconclusive(
            "bounded nilpotence search was inconclusive "
            f"(n_max={report.n_max}, degree_cap={report.degree_cap})"
        )


def split_N(h: MonoidHom) -> GroupElement:
    """The unique p with (h, p) : Q + N -> P an isomorphism."""
    validate_integral_mono(h)
    ck = cokernel(h)
    if ck.kind is not CokernelKind.FREE_RANK_ONE:
        raise WrongCokernelClass(f"cokernel is {ck.kind.value}, not FreeRankOne")
    _require_no_nilpotents(h)
    p = ck.generator
    d = min(abs(v) for v in ck.class_values if v)
    for pg, v in zip(h.codomain.generators, ck.class_values):
        prim, _ = primitive_decompose(h, pg)
        if prim != p.scale(abs(v) // d):
            raise ConstructionFailure(
                "primitive parts are not multiples of the splitting element"
            )
    return p


def pushout_Z_presentation(h: MonoidHom):
    """(q0, p1, pm1) presenting P as the pushout of the diagonal along q0."""
    validate_integral_mono(h)
    ck = cokernel(h)
    if ck.kind is not CokernelKind.GROUP_Z:
        raise WrongCokernelClass(f"cokernel is {ck.kind.value}, not GroupZ")
    _require_no_nilpotents(h)
    p1, pm1 = ck.pair
    q0 = hom_preimage(h, p1 + pm1)
    if q0 is None:
        raise ConstructionFailure("p1 + pm1 has no preimage in the domain")
    return q0, p1, pm1


def hom_preimage(h: MonoidHom, target: GroupElement):
    """The domain member mapping to target, or None (monic h)."""
    p_monoid = h.codomain
    if not contains(p_monoid, target):
        return None
    cap = functional_value(p_monoid, target)

    def weight(q):
        return functional_value(p_monoid, h(q))

    for qg in h.domain.generators:
        if weight(qg) <= 0:
            raise NotIntegralMono("domain generator with degenerate image")
    for q in members_below(h.domain, weight, cap):
        if h(q) == target:
            return q
    return None


@dataclass(frozen=True)
class PushoutResult:
    """P +_Q R with its two insertions and a normal form."""

    monoid: FgMonoid
    into_left: MonoidHom  # P -> S
    into_right: MonoidHom  # R -> S
    left_hom: MonoidHom  # the original h : Q -> P
    right_hom: MonoidHom  # the original f : Q -> R

    def embed(self, p: GroupElement, r: GroupElement) -> GroupElement:
        return self.into_left(p) + self.into_right(r)

    def normal_form(self, p: GroupElement, r: GroupElement):
        """Canonical [p', r + f(q)] with p = p' + h(q), p' primitive."""
        prim, q = primitive_decompose(self.left_hom, p)
        return prim, r + self.right_hom(q)


def monoid_pushout(h: MonoidHom, f: MonoidHom) -> PushoutResult:
    """P +_Q R for an integral monomorphism h and any f to a sharp monoid."""
    validate_integral_mono(h)
    if f.domain != h.domain:
        raise NotAMember("pushout homs must share their domain")
    if not is_sharp(f.codomain):
        raise NotSharp("pushout target must be sharp")
    p, r = h.codomain, f.codomain
    amb, inj_p, inj_r = direct_sum(p.ambient, r.ambient)
    kernel = [
        inj_p(h(qg)) - inj_r(f(qg)) for qg in h.domain.generators
    ]
    pres = quotient_presentation(amb, kernel)
    proj = GroupHom(
        amb, pres.group, tuple(map(tuple, pres.projection_matrix()))
    )
    gens = [proj(inj_p(g)) for g in p.generators]
    gens += [proj(inj_r(g)) for g in r.generators]
    s = FgMonoid(pres.group, tuple(gens))
    into_left = MonoidHom(p, s, proj.compose(inj_p))
    into_right = MonoidHom(r, s, proj.compose(inj_r))
    return PushoutResult(
        monoid=s,
        into_left=into_left,
        into_right=into_right,
        left_hom=h,
        right_hom=f,
    )


def quotient_by_face(monoid: FgMonoid, face: FgMonoid):
    """(C, proj) with C the image of the monoid in M^gp/F^gp."""
    if face.ambient != monoid.ambient:
        raise NotAFace("face must live in the same ambient group")
    for fg in face.generators:
        if not contains(monoid, fg):
            raise NotAFace(f"claimed face generator {fg.coords} is not in M")
    inside = [contains(face, g) for g in monoid.generators]
    # face condition: any monoid combination landing in F uses only
    # generators of F; checked on Hilbert-level relation generators.
    n_m, n_f = len(monoid.generators), len(face.generators)
    if n_f or n_m:
        cols = [lift(g) for g in monoid.generators]
        cols += [[-x for x in lift(fg)] for fg in face.generators]
        rows, _ = _ambient_rows_with_torsion_slacks(cols, monoid.ambient)
        for sol in hilbert.minimal_nonneg_solutions(rows):
            a = sol[:n_m]
            for i, coeff in enumerate(a):
                if coeff and not inside[i]:
                    raise NotAFace(
                        f"generator {monoid.generators[i].coords} divides "
                        "a face element but is not in the face"
                    )
    pres = quotient_presentation(monoid.ambient, list(face.generators))
    images = tuple(pres.project(g) for g in monoid.generators)
    quotient = FgMonoid(pres.group, images)
    proj = MonoidHom(
        monoid,
        quotient,
        GroupHom(
            monoid.ambient,
            pres.group,
            tuple(map(tuple, pres.projection_matrix())),
        ),
    )
    return quotient, proj
