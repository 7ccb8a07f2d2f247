"""Finite categories, functors, and natural transformations.

Everything is explicit data: object and morphism identifier sets, a
total composition table, and assignment maps.  All laws (associativity,
identity, functoriality, naturality) are checked exhaustively at
construction time, so a value of one of these types is always lawful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import (
    AssociativityViolation,
    BoundExceeded,
    FunctorLawViolation,
    IdentityViolation,
    UnknownObject,
    ValidationFailure,
)


@dataclass
class SizeBounds:
    max_objects: int = 40
    max_morphisms: int = 400


_BOUNDS = SizeBounds()


def get_size_bounds() -> SizeBounds:
    return _BOUNDS


def set_size_bounds(max_objects: int, max_morphisms: int):
    _BOUNDS.max_objects = max_objects
    _BOUNDS.max_morphisms = max_morphisms


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class FiniteCategory:
    objects: tuple
    arrows: tuple
    identities: tuple  # pairs (object, arrow name)
    composition: tuple  # triples (g, f, g after f)

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(sorted(self.objects)))
        arrows = tuple(
            sorted(
                (a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows),
                key=lambda a: a.name,
            )
        )
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "identities", tuple(sorted(self.identities)))
        object.__setattr__(self, "composition", tuple(sorted(self.composition)))
        self._validate()

    # -- views ---------------------------------------------------------

    @cached_property
    def arrow_names(self):
        return tuple(a.name for a in self.arrows)

    @cached_property
    def _arrow_by_name(self):
        return {a.name: a for a in self.arrows}

    @cached_property
    def _identity_of(self):
        return dict(self.identities)

    @cached_property
    def _comp(self):
        return {(g, f): gf for g, f, gf in self.composition}

    def src(self, m: str) -> str:
        return self._arrow_by_name[m].src

    def tgt(self, m: str) -> str:
        return self._arrow_by_name[m].tgt

    def has_arrow(self, m: str) -> bool:
        return m in self._arrow_by_name

    def identity(self, obj: str) -> str:
        if obj not in self._identity_of:
            raise UnknownObject(f"no object {obj!r}")
        return self._identity_of[obj]

    def is_identity(self, m: str) -> bool:
        return self._identity_of.get(self.src(m)) == m

    def compose(self, g: str, f: str) -> str:
        """g after f."""
        return self._comp[(g, f)]

    def hom(self, a: str, b: str):
        return tuple(
            m.name for m in self.arrows if m.src == a and m.tgt == b
        )

    def inverse(self, m: str):
        """The two-sided inverse arrow name, or None."""
        a = self._arrow_by_name[m]
        for w in self.hom(a.tgt, a.src):
            if (
                self.compose(w, m) == self.identity(a.src)
                and self.compose(m, w) == self.identity(a.tgt)
            ):
                return w
        return None

    def is_iso(self, m: str) -> bool:
        return self.inverse(m) is not None

    # -- validation ----------------------------------------------------

    def _validate(self):
        bounds = get_size_bounds()
        if len(self.objects) > bounds.max_objects:
            raise BoundExceeded(
                f"{len(self.objects)} objects exceeds cap {bounds.max_objects}"
            )
        if len(self.arrows) > bounds.max_morphisms:
            raise BoundExceeded(
                f"{len(self.arrows)} morphisms exceeds cap {bounds.max_morphisms}"
            )
        if len(set(self.objects)) != len(self.objects):
            raise ValidationFailure("duplicate object identifiers")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValidationFailure("duplicate morphism identifiers")
        for a in self.arrows:
            if a.src not in self._identity_of or a.tgt not in self._identity_of:
                if a.src not in set(self.objects) or a.tgt not in set(self.objects):
                    raise ValidationFailure(
                        f"morphism {a.name!r} references unknown objects"
                    )
        ids = self._identity_of
        if set(ids) != set(self.objects):
            raise IdentityViolation(
                "identities must be given for exactly the objects",
                witness=sorted(set(self.objects) ^ set(ids)),
            )
        for obj, m in ids.items():
            if m not in self._arrow_by_name:
                raise IdentityViolation(f"unknown identity arrow {m!r}", witness=obj)
            if self.src(m) != obj or self.tgt(m) != obj:
                raise IdentityViolation(
                    f"identity of {obj!r} is not an endomorphism", witness=m
                )
        comp = self._comp
        for (g, f), gf in comp.items():
            for m in (g, f, gf):
                if m not in self._arrow_by_name:
                    raise ValidationFailure(
                        f"composition table references unknown arrow {m!r}"
                    )
            if self.tgt(f) != self.src(g):
                raise ValidationFailure(
                    f"table entry ({g!r}, {f!r}) is not composable"
                )
            if self.src(gf) != self.src(f) or self.tgt(gf) != self.tgt(g):
                raise ValidationFailure(
                    f"composite of ({g!r}, {f!r}) has wrong endpoints",
                    witness=(g, f, gf),
                )
        for f in self.arrow_names:
            for g in self.arrow_names:
                if self.tgt(f) == self.src(g) and (g, f) not in comp:
                    raise ValidationFailure(
                        f"composition table is missing ({g!r}, {f!r})"
                    )
        for f in self.arrow_names:
            if comp[(self.identity(self.tgt(f)), f)] != f:
                raise IdentityViolation("left identity law fails", witness=f)
            if comp[(f, self.identity(self.src(f)))] != f:
                raise IdentityViolation("right identity law fails", witness=f)
        for f in self.arrow_names:
            for g in self.arrow_names:
                if self.tgt(f) != self.src(g):
                    continue
                gf = comp[(g, f)]
                for h in self.arrow_names:
                    if self.tgt(g) != self.src(h):
                        continue
                    if comp[(h, gf)] != comp[(comp[(h, g)], f)]:
                        raise AssociativityViolation(
                            "associativity fails", witness=(h, g, f)
                        )


def make_category(spec: dict) -> FiniteCategory:
    """Build a validated category from plain data.

    spec keys: objects, morphisms (dicts with id/src/tgt), identities
    (object -> id), composition (triples [g, f, gf]).
    """
    arrows = tuple(
        Arrow(m["id"], m["src"], m["tgt"]) for m in spec["morphisms"]
    )
    return FiniteCategory(
        objects=tuple(spec["objects"]),
        arrows=arrows,
        identities=tuple(spec["identities"].items()),
        composition=tuple(tuple(t) for t in spec["composition"]),
    )


@dataclass(frozen=True)
class FunctorData:
    source: FiniteCategory
    target: FiniteCategory
    object_map: tuple
    morphism_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "object_map", tuple(sorted(self.object_map)))
        object.__setattr__(self, "morphism_map", tuple(sorted(self.morphism_map)))
        self._validate()

    @cached_property
    def _obj(self):
        return dict(self.object_map)

    @cached_property
    def _mor(self):
        return dict(self.morphism_map)

    def obj(self, x: str) -> str:
        return self._obj[x]

    def mor(self, m: str) -> str:
        return self._mor[m]

    def _validate(self):
        if set(self._obj) != set(self.source.objects):
            raise FunctorLawViolation("object map is not total")
        if set(self._mor) != set(self.source.arrow_names):
            raise FunctorLawViolation("morphism map is not total")
        for x, fx in self._obj.items():
            if fx not in set(self.target.objects):
                raise FunctorLawViolation(f"image object {fx!r} unknown")
        for m, fm in self._mor.items():
            if not self.target.has_arrow(fm):
                raise FunctorLawViolation(f"image arrow {fm!r} unknown")
            if self.target.src(fm) != self.obj(self.source.src(m)) or (
                self.target.tgt(fm) != self.obj(self.source.tgt(m))
            ):
                raise FunctorLawViolation(
                    "functor does not preserve endpoints", witness=m
                )
        for x in self.source.objects:
            if self.mor(self.source.identity(x)) != self.target.identity(
                self.obj(x)
            ):
                raise FunctorLawViolation(
                    "functor does not preserve identities", witness=x
                )
        for g, f, gf in self.source.composition:
            if self.target.compose(self.mor(g), self.mor(f)) != self.mor(gf):
                raise FunctorLawViolation(
                    "functor does not preserve composition", witness=(g, f)
                )


def make_functor(
    source: FiniteCategory, target: FiniteCategory, spec: dict
) -> FunctorData:
    return FunctorData(
        source=source,
        target=target,
        object_map=tuple(spec["objects"].items()),
        morphism_map=tuple(spec["morphisms"].items()),
    )


def identity_functor(cat: FiniteCategory) -> FunctorData:
    return FunctorData(
        source=cat,
        target=cat,
        object_map=tuple((x, x) for x in cat.objects),
        morphism_map=tuple((m, m) for m in cat.arrow_names),
    )


def compose_functors(outer: FunctorData, inner: FunctorData) -> FunctorData:
    if outer.source != inner.target:
        raise ValidationFailure("functors are not composable")
    return FunctorData(
        source=inner.source,
        target=outer.target,
        object_map=tuple(
            (x, outer.obj(inner.obj(x))) for x in inner.source.objects
        ),
        morphism_map=tuple(
            (m, outer.mor(inner.mor(m))) for m in inner.source.arrow_names
        ),
    )


@dataclass(frozen=True)
class NaturalTransformation:
    source: FunctorData
    target: FunctorData
    components: tuple

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(sorted(self.components)))
        f, g = self.source, self.target
        if f.source != g.source or f.target != g.target:
            raise ValidationFailure(
                "natural transformation needs parallel functors"
            )
        comp = dict(self.components)
        if set(comp) != set(f.source.objects):
            raise ValidationFailure("components must cover every object")
        cat = f.target
        for x, c in comp.items():
            if not cat.has_arrow(c):
                raise ValidationFailure(f"component {c!r} unknown")
            if cat.src(c) != f.obj(x) or cat.tgt(c) != g.obj(x):
                raise ValidationFailure(
                    f"component at {x!r} has wrong endpoints", witness=c
                )
        for m in f.source.arrow_names:
            a, b = f.source.src(m), f.source.tgt(m)
            left = cat.compose(comp[b], f.mor(m))
            right = cat.compose(g.mor(m), comp[a])
            if left != right:
                raise ValidationFailure(
                    "naturality square does not commute", witness=m
                )

    def component(self, x: str) -> str:
        return dict(self.components)[x]

    def is_invertible(self) -> bool:
        cat = self.source.target
        return all(cat.is_iso(c) for _, c in self.components)
