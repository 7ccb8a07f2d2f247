"""Invariant-factor group presentations and coordinate maps."""

import pytest
from hypothesis import given, settings, strategies as st

from logmin.errors import AmbientMismatch, InvalidHom, NotInSubgroup
from logmin.monoid_kernel.groups import (
    FgAbelianGroup,
    GroupHom,
    direct_sum,
    kernel_generators,
    kernel_is_trivial,
    quotient_presentation,
    subgroup_presentation,
)

Z2 = FgAbelianGroup(2)
Z_mod = FgAbelianGroup(1, (4,))


def test_torsion_reduction_and_arithmetic():
    e = Z_mod.element((2, 7))
    assert e.coords == (2, 3)
    assert (e + e).coords == (4, 2)
    assert (-e).coords == (-2, 1)
    assert (e - e).is_zero()


def test_invalid_moduli_rejected():
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (1,))
    with pytest.raises(ValueError):
        FgAbelianGroup(0, (2, 3))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Z2.element((1,))
    with pytest.raises(AmbientMismatch):
        Z2.element((1, 0)) + Z_mod.element((0, 0))


groups = st.sampled_from(
    [
        FgAbelianGroup(0),
        FgAbelianGroup(1),
        FgAbelianGroup(2),
        FgAbelianGroup(3),
        FgAbelianGroup(1, (2,)),
        FgAbelianGroup(2, (2, 4)),
        FgAbelianGroup(0, (3,)),
    ]
)


@st.composite
def group_with_elements(draw, count=3):
    g = draw(groups)
    elts = [
        g.element(draw(st.lists(st.integers(-4, 4), min_size=g.dim, max_size=g.dim)))
        for _ in range(count)
    ]
    return g, elts


@settings(max_examples=120, deadline=None)
@given(group_with_elements())
def test_subgroup_roundtrip(data):
    g, elts = data
    pres = subgroup_presentation(g, elts)
    for e in elts:
        c = pres.to_subgroup(e)
        assert pres.from_subgroup(c) == e
    # random combinations are members too
    combo = g.zero()
    for e in elts:
        combo = combo + e
    assert pres.contains(combo)
    # abstract coordinates roundtrip
    for c in pres.group.basis_vectors():
        assert pres.to_subgroup(pres.from_subgroup(c)) == c


def test_subgroup_membership_negative():
    pres = subgroup_presentation(Z2, [Z2.element((2, 0))])
    assert pres.contains(Z2.element((4, 0)))
    assert not pres.contains(Z2.element((1, 0)))
    assert not pres.contains(Z2.element((0, 1)))
    with pytest.raises(NotInSubgroup):
        pres.to_subgroup(Z2.element((1, 0)))


def test_subgroup_invariant_form():
    # <(2,0),(0,1)> in Z^2 is Z^2 abstractly
    pres = subgroup_presentation(Z2, [Z2.element((2, 0)), Z2.element((0, 1))])
    assert pres.group == FgAbelianGroup(2)


def test_quotient_z2_by_diagonal():
    pres = quotient_presentation(Z2, [Z2.element((1, 1))])
    assert pres.group == FgAbelianGroup(1)
    a = pres.project(Z2.element((1, 0)))
    b = pres.project(Z2.element((0, 1)))
    assert (a + b).is_zero()
    assert not a.is_zero()


def test_quotient_with_torsion():
    pres = quotient_presentation(Z2, [Z2.element((2, 0))])
    assert pres.group == FgAbelianGroup(1, (2,))


@settings(max_examples=120, deadline=None)
@given(group_with_elements())
def test_quotient_section_is_section(data):
    g, elts = data
    pres = quotient_presentation(g, elts)
    # relations die in the quotient
    for e in elts:
        assert pres.project(e).is_zero()
    # project . section == id on the quotient
    for c in pres.group.basis_vectors():
        assert pres.project(pres.section(c)) == c


def test_hom_torsion_compatibility():
    with pytest.raises(InvalidHom):
        GroupHom(FgAbelianGroup(0, (2,)), FgAbelianGroup(1), ((1,),))
    h = GroupHom(FgAbelianGroup(0, (2,)), FgAbelianGroup(0, (4,)), ((2,),))
    assert h(h.domain.element((1,))).coords == (2,)


def test_hom_compose_and_kernel():
    double = GroupHom(FgAbelianGroup(1), FgAbelianGroup(1), ((2,),))
    assert double.compose(double).matrix == ((4,),)
    assert kernel_is_trivial(double)
    fold = GroupHom(FgAbelianGroup(2), FgAbelianGroup(1), ((1, 1),))
    gens = kernel_generators(fold)
    assert any(g.coords in ((1, -1), (-1, 1)) for g in gens)
    mod2 = GroupHom(FgAbelianGroup(1), FgAbelianGroup(0, (2,)), ((1,),))
    assert not kernel_is_trivial(mod2)


def test_direct_sum_invariant_form():
    s, inj_a, inj_b = direct_sum(FgAbelianGroup(0, (2,)), FgAbelianGroup(0, (3,)))
    assert s == FgAbelianGroup(0, (6,))
    a = inj_a(inj_a.domain.element((1,)))
    b = inj_b(inj_b.domain.element((1,)))
    assert a.scale(2).is_zero() and not a.is_zero()
    assert b.scale(3).is_zero() and not b.is_zero()
    assert not (a + b).is_zero()


def test_projection_matrix_matches_project():
    pres = quotient_presentation(Z2, [Z2.element((2, 2))])
    mat = pres.projection_matrix()
    hom = GroupHom(Z2, pres.group, tuple(map(tuple, mat)))
    for coords in [(1, 0), (0, 1), (3, -2)]:
        assert hom(Z2.element(coords)) == pres.project(Z2.element(coords))
