"""Homomorphisms of finitely generated monoids.

A MonoidHom is an ambient group homomorphism that carries every
generator of the domain into the codomain monoid; this is checked at
construction, so values of this type are always genuine monoid maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import AmbientMismatch, NotAMember
from .groups import FgAbelianGroup, GroupElement, GroupHom, kernel_is_trivial
from .monoids import FgMonoid, contains, groupify


@dataclass(frozen=True)
class MonoidHom:
    domain: FgMonoid
    codomain: FgMonoid
    hom: GroupHom

    def __post_init__(self):
        if self.hom.domain != self.domain.ambient:
            raise AmbientMismatch("hom matrix domain mismatch")
        if self.hom.codomain != self.codomain.ambient:
            raise AmbientMismatch("hom matrix codomain mismatch")
        for g in self.domain.generators:
            if not contains(self.codomain, self.hom(g)):
                raise NotAMember(
                    f"image {self.hom(g).coords} of generator {g.coords} "
                    "is not in the codomain monoid"
                )

    @staticmethod
    def from_matrix(domain: FgMonoid, codomain: FgMonoid, rows) -> "MonoidHom":
        return MonoidHom(
            domain,
            codomain,
            GroupHom(domain.ambient, codomain.ambient, tuple(map(tuple, rows))),
        )

    @staticmethod
    def identity(monoid: FgMonoid) -> "MonoidHom":
        return MonoidHom(monoid, monoid, GroupHom.identity(monoid.ambient))

    def __call__(self, elt: GroupElement) -> GroupElement:
        return self.hom(elt)

    def compose(self, other: "MonoidHom") -> "MonoidHom":
        """self after other."""
        if other.codomain != self.domain:
            raise AmbientMismatch("monoid homs are not composable")
        return MonoidHom(other.domain, self.codomain, self.hom.compose(other.hom))


@lru_cache(maxsize=None)
def image_monoid(h: MonoidHom) -> FgMonoid:
    return FgMonoid(
        h.codomain.ambient, tuple(h(g) for g in h.domain.generators)
    )


@lru_cache(maxsize=None)
def is_monomorphism(h: MonoidHom) -> bool:
    """Injective on the domain monoid, decided on the group envelope."""
    gp = groupify(h.domain)
    if gp.group.is_trivial():
        return True
    images = [h(gp.unembed(b)) for b in gp.group.basis_vectors()]
    restricted = GroupHom.from_images(gp.group, images)
    return kernel_is_trivial(restricted)


@lru_cache(maxsize=None)
def is_isomorphism(h: MonoidHom) -> bool:
    """Bijective as a map of monoids: monic and generator-surjective."""
    if not is_monomorphism(h):
        return False
    img = image_monoid(h)
    return all(contains(img, g) for g in h.codomain.generators)
