"""Integral splitting, nilpotents, cokernel trichotomy, pushouts, faces."""

import pytest

from logmin.errors import (
    NotAFace,
    NotAMember,
    NotIntegralMono,
    NotSharp,
    WrongCokernelClass,
)
from logmin.monoid_kernel.groups import FgAbelianGroup
from logmin.monoid_kernel.homs import MonoidHom, is_isomorphism, is_monomorphism
from logmin.monoid_kernel.monoids import (
    FgMonoid,
    contains,
    members_by_degree,
    same_submonoid,
)
from logmin.monoid_kernel.structure import (
    CokernelKind,
    Nilpotence,
    cokernel,
    cokernel_class_of,
    has_exchange_witness,
    has_nilpotents,
    hom_preimage,
    in_ideal,
    is_integral_morphism,
    monoid_pushout,
    primitive_decompose,
    pushout_Z_presentation,
    quotient_by_face,
    relation_generators,
    split_N,
)

import oracles

N1 = FgMonoid.free(1)
N2 = FgMonoid.free(2)
Z2 = FgAbelianGroup(2)

DIAG = MonoidHom.from_matrix(N1, N2, [[1], [1]])
FOLD = MonoidHom.from_matrix(N2, N1, [[1, 1]])
DOUBLE = MonoidHom.from_matrix(N1, N1, [[2]])
IDENT = MonoidHom.identity(N1)
AXIS = MonoidHom.from_matrix(N1, N2, [[1], [0]])  # N+0 inside N^2


def test_integral_morphism_examples():
    assert is_integral_morphism(DIAG)
    assert not is_integral_morphism(FOLD)
    assert is_integral_morphism(IDENT)
    assert is_integral_morphism(DOUBLE)
    assert is_integral_morphism(AXIS)


def test_integral_rejects_non_sharp():
    z_monoid = FgMonoid.from_coords(FgAbelianGroup(1), [(1,), (-1,)])
    with pytest.raises(NotSharp):
        is_integral_morphism(MonoidHom.from_matrix(N1, z_monoid, [[1]]))


def test_witness_additivity():
    # solutions with witnesses form a monoid: spot-check sums of
    # relation generators for the diagonal
    rels = relation_generators(DIAG)
    for r1 in rels:
        for r2 in rels:
            total = tuple(a + b for a, b in zip(r1, r2))
            assert has_exchange_witness(DIAG, *total)


def test_primitive_decompose_examples():
    p, q = primitive_decompose(DIAG, Z2.element((3, 1)))
    assert p.coords == (2, 0) and q.coords == (1,)
    p, q = primitive_decompose(DIAG, Z2.element((0, 0)))
    assert p.is_zero() and q.is_zero()
    p, q = primitive_decompose(DIAG, Z2.element((2, 2)))
    assert p.is_zero() and q.coords == (2,)


def test_primitive_decompose_validates():
    with pytest.raises(NotIntegralMono):
        primitive_decompose(FOLD, N1.ambient.element((1,)))
    with pytest.raises(NotAMember):
        primitive_decompose(DIAG, Z2.element((-1, 0)))


def test_splitting_uniqueness_against_oracle():
    # lem:is uniqueness: exactly one splitting p = p' + h(q) with p'
    # primitive, checked exhaustively for bounded p
    for p in members_by_degree(N2, 6):
        prim, q = primitive_decompose(DIAG, p)
        assert prim + DIAG(q) == p
        decomps = []
        for qc in range(0, 7):
            qe = N1.ambient.element((qc,))
            rest = p - DIAG(qe)
            if contains(N2, rest):
                decomps.append((rest, qe))
        # Q is generated by 1, so primitivity means h(1) cannot be stripped
        primitive_decomps = [
            (r, qe)
            for (r, qe) in decomps
            if not contains(N2, r - DIAG(N1.ambient.element((1,))))
        ]
        assert (prim, q) in decomps
        assert len(primitive_decomps) == 1
        assert primitive_decomps[0] == (prim, q)


def test_in_ideal_and_nilpotents_double():
    assert not in_ideal(DOUBLE, N1.ambient.element((1,)))
    assert in_ideal(DOUBLE, N1.ambient.element((2,)))
    report = has_nilpotents(DOUBLE)
    assert report.status is Nilpotence.NILPOTENT
    assert report.witness_p.coords == (1,)
    assert report.witness_n == 2


def test_no_nilpotents_examples():
    assert has_nilpotents(DIAG).status is Nilpotence.NONE
    assert has_nilpotents(IDENT).status is Nilpotence.NONE
    assert has_nilpotents(AXIS).status is Nilpotence.NONE


def test_nilpotents_on_interior_ray():
    # Q = <(2,1)> inside N^2: (1,1) is primitive but 2*(1,1) lands in I_Q
    q = FgMonoid.from_coords(FgAbelianGroup(1), [(1,)])
    h = MonoidHom.from_matrix(q, N2, [[2], [1]])
    assert is_integral_morphism(h) and is_monomorphism(h)
    report = has_nilpotents(h)
    assert report.status is Nilpotence.NILPOTENT
    assert in_ideal(h, report.witness_p.scale(report.witness_n))
    assert not in_ideal(h, report.witness_p)


def test_nilpotents_bounded_inconclusive_path():
    # codomain <2,3> is not saturated; absence cannot be certified
    cusp = FgMonoid.from_coords(FgAbelianGroup(1), [(2,), (3,)])
    ident = MonoidHom.identity(cusp)
    report = has_nilpotents(ident)
    assert report.status in (Nilpotence.NONE, Nilpotence.INCONCLUSIVE)


def test_cokernel_examples():
    ck = cokernel(DIAG)
    assert ck.kind is CokernelKind.GROUP_Z
    assert ck.torsion_free
    assert tuple(e.coords for e in ck.pair) == ((1, 0), (0, 1))

    ck = cokernel(AXIS)
    assert ck.kind is CokernelKind.FREE_RANK_ONE
    assert ck.generator.coords == (0, 1)

    ck = cokernel(IDENT)
    assert ck.kind is CokernelKind.ZERO

    # distinct primitives have distinct classes in P^gp/Q^gp
    a = cokernel_class_of(DIAG, Z2.element((2, 0)))
    b = cokernel_class_of(DIAG, Z2.element((0, 2)))
    assert a != b
    assert (a + b).is_zero()  # (2,0) + (0,2) = 2 * diagonal


def test_cokernel_second_free_example():
    # Q = <(1,1)> inside P = <(1,1),(0,1)>
    q = FgMonoid.free(1)
    p = FgMonoid.from_coords(Z2, [(1, 1), (0, 1)])
    h = MonoidHom.from_matrix(q, p, [[1], [1]])
    ck = cokernel(h)
    assert ck.kind is CokernelKind.FREE_RANK_ONE
    assert split_N(h).coords == (0, 1)


def test_split_N_examples():
    assert split_N(AXIS).coords == (0, 1)
    with pytest.raises(WrongCokernelClass):
        split_N(DIAG)
    with pytest.raises(WrongCokernelClass):
        split_N(IDENT)


def test_split_N_bijection_bounded():
    p = split_N(AXIS)
    # (q, n) -> h(q) + n p is a bijection onto bounded members
    seen = {}
    for qn in range(0, 7):
        for n in range(0, 7):
            x = AXIS(N1.ambient.element((qn,))) + p.scale(n)
            assert x not in seen
            seen[x] = (qn, n)
    for x in members_by_degree(N2, 6):
        prim, q = primitive_decompose(AXIS, x)
        n = prim.coords[1]
        assert prim == p.scale(n)
        assert (x in seen) == (q.coords[0] <= 6 and n <= 6)


def test_pushout_Z_examples():
    q0, p1, pm1 = pushout_Z_presentation(DIAG)
    assert (q0.coords, p1.coords, pm1.coords) == ((1,), (1, 0), (0, 1))
    with pytest.raises(WrongCokernelClass):
        pushout_Z_presentation(AXIS)


def test_pushout_Z_tilted():
    # Q = <(2,1)> inside P = <(1,0),(1,1)>; cokernel is Z
    q = FgMonoid.free(1)
    p = FgMonoid.from_coords(Z2, [(1, 0), (1, 1)])
    h = MonoidHom.from_matrix(q, p, [[2], [1]])
    q0, p1, pm1 = pushout_Z_presentation(h)
    assert q0.coords == (1,)
    assert h(q0) == p1 + pm1
    assert {p1.coords, pm1.coords} == {(1, 0), (1, 1)}
    # multiples of q0 decompose as p_n + p_{-n}
    for n in range(1, 5):
        assert h(q0.scale(n)) == p1.scale(n) + pm1.scale(n)


def test_hom_preimage():
    assert hom_preimage(DIAG, Z2.element((2, 2))).coords == (2,)
    assert hom_preimage(DIAG, Z2.element((2, 1))) is None


def test_monoid_pushout_renormalization():
    # h = diagonal, f = doubling: [(1,1), 0] == [(0,0), 2]
    po = monoid_pushout(DIAG, DOUBLE)
    lhs = po.embed(Z2.element((1, 1)), N1.ambient.element((0,)))
    rhs = po.embed(Z2.element((0, 0)), N1.ambient.element((2,)))
    assert lhs == rhs
    nf = po.normal_form(Z2.element((1, 1)), N1.ambient.element((0,)))
    assert nf[0].is_zero() and nf[1].coords == (2,)


def test_monoid_pushout_identity_cases():
    po = monoid_pushout(DIAG, MonoidHom.identity(N1))
    assert is_isomorphism(po.into_left)
    po = monoid_pushout(MonoidHom.identity(N1), DOUBLE)
    assert is_isomorphism(po.into_right)


def test_monoid_pushout_preserves_cokernel():
    po = monoid_pushout(DIAG, DOUBLE)
    assert is_monomorphism(po.into_right)
    assert is_integral_morphism(po.into_right)
    ck = cokernel(po.into_right)
    assert ck.kind is CokernelKind.GROUP_Z
    # primitive elements stay primitive in the pushout
    for p in members_by_degree(N2, 4):
        prim, q = primitive_decompose(DIAG, p)
        img = po.into_left(prim)
        prim2, q2 = primitive_decompose(po.into_right, img)
        assert q2.is_zero()


def test_quotient_by_face_examples():
    c, proj = quotient_by_face(N2, FgMonoid.from_coords(Z2, [(1, 0)]))
    assert c.ambient.rank == 1 and not c.ambient.torsion_moduli
    assert [g.coords for g in c.generators] == [(1,)]
    assert proj(Z2.element((5, 3))).coords == (3,) or proj(
        Z2.element((5, 3))
    ).coords == (-3,)

    m = FgMonoid.from_coords(FgAbelianGroup(1), [(2,), (3,)])
    c2, _ = quotient_by_face(m, FgMonoid.from_coords(FgAbelianGroup(1), []))
    assert same_submonoid(c2, m)


def test_quotient_by_face_rejects_non_face():
    with pytest.raises(NotAFace):
        quotient_by_face(N2, FgMonoid.from_coords(Z2, [(1, 1)]))
    with pytest.raises(NotAFace):
        quotient_by_face(N1, FgMonoid.from_coords(FgAbelianGroup(1), [(2,)]))


def test_quotient_by_face_matches_congruence_oracle():
    face = FgMonoid.from_coords(Z2, [(1, 0)])
    c, proj = quotient_by_face(N2, face)
    # oracle: congruence closure of m ~ m + f on bounded elements
    pts = [p for p in oracles.brute_members([(1, 0), (0, 1)], 4)]
    classes = {}
    for p in pts:
        classes.setdefault(p[1], set()).add(p)
    for p in pts:
        for q in pts:
            pe, qe = Z2.element(p), Z2.element(q)
            same = proj(pe) == proj(qe)
            assert same == (p[1] == q[1])
