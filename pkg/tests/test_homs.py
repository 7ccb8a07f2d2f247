"""Monoid homomorphisms: construction, composition, injectivity."""

import pytest

from logmin.errors import AmbientMismatch, NotAMember
from logmin.monoid_kernel.groups import FgAbelianGroup
from logmin.monoid_kernel.homs import (
    MonoidHom,
    image_monoid,
    is_isomorphism,
    is_monomorphism,
)
from logmin.monoid_kernel.monoids import FgMonoid, contains

N1 = FgMonoid.free(1)
N2 = FgMonoid.free(2)

DIAG = MonoidHom.from_matrix(N1, N2, [[1], [1]])
FOLD = MonoidHom.from_matrix(N2, N1, [[1, 1]])
DOUBLE = MonoidHom.from_matrix(N1, N1, [[2]])


def test_construction_checks_generator_images():
    with pytest.raises(NotAMember):
        MonoidHom.from_matrix(N1, N2, [[1], [-1]])
    with pytest.raises(AmbientMismatch):
        MonoidHom.from_matrix(N1, N2, [[1, 0], [0, 1]])


def test_apply_and_compose():
    assert DIAG(N1.ambient.element((3,))).coords == (3, 3)
    comp = FOLD.compose(DIAG)
    assert comp.hom.matrix == ((2,),)
    ident = MonoidHom.identity(N2)
    assert ident.compose(DIAG).hom.matrix == DIAG.hom.matrix


def test_monomorphism_examples():
    assert is_monomorphism(DIAG)
    assert not is_monomorphism(FOLD)  # kernel contains (1, -1)
    assert is_monomorphism(DOUBLE)
    assert is_monomorphism(MonoidHom.identity(N2))


def test_monomorphism_with_torsion():
    g = FgAbelianGroup(1, (2,))
    m = FgMonoid.from_coords(g, [(1, 0), (1, 1)])
    # forgetting the torsion coordinate kills (0, 1)
    forget = MonoidHom.from_matrix(m, N1, [[1, 0]])
    assert not is_monomorphism(forget)


def test_image_monoid_and_iso():
    img = image_monoid(DIAG)
    assert contains(img, N2.ambient.element((2, 2)))
    assert not contains(img, N2.ambient.element((1, 0)))
    assert is_isomorphism(MonoidHom.identity(N2))
    assert not is_isomorphism(DIAG)
    assert not is_isomorphism(DOUBLE)
    swap = MonoidHom.from_matrix(N2, N2, [[0, 1], [1, 0]])
    assert is_isomorphism(swap)
