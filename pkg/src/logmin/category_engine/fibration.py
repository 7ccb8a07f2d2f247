"""Cartesian morphisms, fibered categories, groupoid fibrations, fibers.

All decisions are by exhaustive enumeration of completions, exactly
matching the defining universal properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import UnknownObject
from .cats import FiniteCategory, FunctorData


def completions(cat: FiniteCategory, via: str, target: str):
    """All h with via o h == target (h into src(via), same source as target)."""
    return tuple(
        h
        for h in cat.hom(cat.src(target), cat.src(via))
        if cat.compose(via, h) == target
    )


@lru_cache(maxsize=None)
def is_cartesian_morphism(functor: FunctorData, f: str) -> bool:
    """h -> F(h) bijects upper completions with lower completions."""
    cat, down = functor.source, functor.target
    c = cat.tgt(f)
    ff = functor.mor(f)
    for c2 in cat.objects:
        for g in cat.hom(c2, c):
            ups = completions(cat, f, g)
            downs = set(completions(down, ff, functor.mor(g)))
            images = [functor.mor(h) for h in ups]
            if len(set(images)) != len(images):
                return False
            if set(images) != downs:
                return False
    return True


@lru_cache(maxsize=None)
def cartesian_morphisms(functor: FunctorData) -> frozenset:
    return frozenset(
        m
        for m in functor.source.arrow_names
        if is_cartesian_morphism(functor, m)
    )


@lru_cache(maxsize=None)
def is_fibered(functor: FunctorData) -> bool:
    """Every downstairs arrow with a lifted codomain has a cartesian lift."""
    cat, down = functor.source, functor.target
    cart = cartesian_morphisms(functor)
    for phi in down.arrow_names:
        d2 = down.tgt(phi)
        for c_prime in cat.objects:
            if functor.obj(c_prime) != d2:
                continue
            found = any(
                functor.mor(m) == phi
                for m in cart
                if cat.tgt(m) == c_prime
            )
            if not found:
                return False
    return True


def is_groupoid_fibration(functor: FunctorData) -> bool:
    return is_fibered(functor) and len(
        cartesian_morphisms(functor)
    ) == len(functor.source.arrow_names)


@dataclass(frozen=True)
class AssociatedFibration:
    """Restriction of a functor to the cartesian arrows (same objects)."""

    category: FiniteCategory
    functor: FunctorData  # restricted functor to the original target
    inclusion: FunctorData  # into the original source category


def associated_groupoid_fibration(functor: FunctorData) -> AssociatedFibration:
    cat = functor.source
    cart = cartesian_morphisms(functor)
    # identities are isomorphisms, hence cartesian; composites of
    # cartesian arrows are cartesian (2-out-of-3)
    arrows = tuple(a for a in cat.arrows if a.name in cart)
    composition = tuple(
        (g, f, gf)
        for g, f, gf in cat.composition
        if g in cart and f in cart
    )
    for g, f, gf in composition:
        assert gf in cart, "composite of cartesian morphisms must be cartesian"
    sub = FiniteCategory(
        objects=cat.objects,
        arrows=arrows,
        identities=cat.identities,
        composition=composition,
    )
    restricted = FunctorData(
        source=sub,
        target=functor.target,
        object_map=functor.object_map,
        morphism_map=tuple(
            (m, fm) for m, fm in functor.morphism_map if m in cart
        ),
    )
    inclusion = FunctorData(
        source=sub,
        target=cat,
        object_map=tuple((x, x) for x in cat.objects),
        morphism_map=tuple((m, m) for m in sub.arrow_names),
    )
    return AssociatedFibration(
        category=sub, functor=restricted, inclusion=inclusion
    )


def fiber_category(functor: FunctorData, d: str) -> FiniteCategory:
    """The subcategory of objects over d and arrows over its identity."""
    down = functor.target
    if d not in set(down.objects):
        raise UnknownObject(f"no object {d!r} in the target category")
    cat = functor.source
    objs = tuple(x for x in cat.objects if functor.obj(x) == d)
    idd = down.identity(d)
    keep = frozenset(
        m for m in cat.arrow_names if functor.mor(m) == idd
    )
    arrows = tuple(a for a in cat.arrows if a.name in keep)
    return FiniteCategory(
        objects=objs,
        arrows=arrows,
        identities=tuple((x, i) for x, i in cat.identities if x in set(objs)),
        composition=tuple(
            (g, f, gf)
            for g, f, gf in cat.composition
            if g in keep and f in keep
        ),
    )
