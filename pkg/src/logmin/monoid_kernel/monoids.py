"""Finitely generated integral monoids inside an ambient abelian group.

A monoid is a generator list inside an FgAbelianGroup, hence integral
by construction.  Membership is decided by depth-first search on
generator counts pruned by a rational functional strictly positive on
the generators of the sharp quotient; non-sharp monoids first split off
their unit group, which is computed exactly from the rational cone of
the generators (a generator is a unit iff the negative of its free part
lies back in the cone).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import AmbientMismatch, NotSharp
from . import hilbert, rationals
from .groups import (
    FgAbelianGroup,
    GroupElement,
    QuotientPresentation,
    SubgroupPresentation,
    quotient_presentation,
    subgroup_presentation,
)


@dataclass(frozen=True)
class FgMonoid:
    ambient: FgAbelianGroup
    generators: tuple[GroupElement, ...]

    def __post_init__(self):
        canon = []
        seen = set()
        for g in self.generators:
            if not isinstance(g, GroupElement):
                g = self.ambient.element(g)
            if g.group != self.ambient:
                raise AmbientMismatch("generator outside the ambient group")
            if g.is_zero() or g.coords in seen:
                continue
            seen.add(g.coords)
            canon.append(g)
        canon.sort(key=lambda e: e.sort_key())
        object.__setattr__(self, "generators", tuple(canon))

    @staticmethod
    def free(n: int) -> "FgMonoid":
        amb = FgAbelianGroup(n)
        return FgMonoid(amb, tuple(amb.basis_vectors()))

    @staticmethod
    def from_coords(ambient: FgAbelianGroup, coords) -> "FgMonoid":
        return FgMonoid(ambient, tuple(ambient.element(c) for c in coords))

    @property
    def is_zero_monoid(self) -> bool:
        return not self.generators

    def zero(self) -> GroupElement:
        return self.ambient.zero()


@dataclass(frozen=True)
class Groupification:
    """M^gp as an abstract group with coordinate maps both ways."""

    presentation: SubgroupPresentation

    @property
    def group(self) -> FgAbelianGroup:
        return self.presentation.group

    def embed(self, elt: GroupElement) -> GroupElement:
        return self.presentation.to_subgroup(elt)

    def unembed(self, elt: GroupElement) -> GroupElement:
        return self.presentation.from_subgroup(elt)

    def contains(self, elt: GroupElement) -> bool:
        return self.presentation.contains(elt)


@lru_cache(maxsize=None)
def groupify(monoid: FgMonoid) -> Groupification:
    """The group envelope M^gp as a subgroup of the ambient group."""
    return Groupification(
        subgroup_presentation(monoid.ambient, list(monoid.generators))
    )


@lru_cache(maxsize=None)
def _unit_generator_indices(monoid: FgMonoid) -> tuple[int, ...]:
    gens = monoid.generators
    frees = [g.free_part() for g in gens]
    out = []
    for i, g in enumerate(gens):
        neg = tuple(-x for x in frees[i])
        if rationals.cone_member(neg, frees):
            out.append(i)
    return tuple(out)


@lru_cache(maxsize=None)
def units(monoid: FgMonoid) -> FgMonoid:
    """The unit group of the monoid, presented as a monoid."""
    unit_gens = [monoid.generators[i] for i in _unit_generator_indices(monoid)]
    closed = list(unit_gens) + [-g for g in unit_gens]
    return FgMonoid(monoid.ambient, tuple(closed))


def is_sharp(monoid: FgMonoid) -> bool:
    return not _unit_generator_indices(monoid)


@dataclass(frozen=True)
class SharpQuotient:
    """M modulo its unit group, with the projection witness."""

    quotient: QuotientPresentation
    monoid: FgMonoid  # sharp image of the original monoid


@lru_cache(maxsize=None)
def sharp_quotient(monoid: FgMonoid) -> SharpQuotient:
    unit_gens = [monoid.generators[i] for i in _unit_generator_indices(monoid)]
    pres = quotient_presentation(monoid.ambient, unit_gens)
    image = FgMonoid(
        pres.group, tuple(pres.project(g) for g in monoid.generators)
    )
    return SharpQuotient(quotient=pres, monoid=image)


@lru_cache(maxsize=None)
def membership_functional(monoid: FgMonoid) -> tuple[int, ...]:
    """Integer functional with value >= 1 on every generator (sharp only)."""
    if not is_sharp(monoid):
        raise NotSharp("membership functional needs a sharp monoid")
    if monoid.is_zero_monoid:
        return (0,) * monoid.ambient.rank
    phi = rationals.positive_functional(
        [g.free_part() for g in monoid.generators]
    )
    assert phi is not None  # sharp monoids have pointed cones
    return tuple(phi)


def functional_value(monoid: FgMonoid, elt: GroupElement) -> int:
    phi = membership_functional(monoid)
    return sum(p * x for p, x in zip(phi, elt.free_part()))


@lru_cache(maxsize=None)
def _sharp_contains(monoid: FgMonoid, coords: tuple) -> bool:
    elt = monoid.ambient.element(coords)
    if elt.is_zero():
        return True
    if monoid.is_zero_monoid:
        return False
    gens = monoid.generators
    phi = membership_functional(monoid)
    weights = [functional_value(monoid, g) for g in gens]

    memo = {}

    def rec(e: GroupElement, i: int) -> bool:
        if e.is_zero():
            return True
        if i == len(gens):
            return False
        key = (e.coords, i)
        if key in memo:
            return memo[key]
        value = sum(p * x for p, x in zip(phi, e.free_part()))
        result = False
        if value >= weights[i]:
            result = rec(e - gens[i], i)
        if not result:
            result = rec(e, i + 1)
        memo[key] = result
        return result

    return rec(elt, 0)


def contains(monoid: FgMonoid, elt: GroupElement) -> bool:
    """Is elt a nonnegative integer combination of the generators?"""
    if elt.group != monoid.ambient:
        raise AmbientMismatch("element does not live in the monoid's ambient")
    if is_sharp(monoid):
        return _sharp_contains(monoid, elt.coords)
    red = sharp_quotient(monoid)
    return _sharp_contains(red.monoid, red.quotient.project(elt).coords)


def members_below(monoid: FgMonoid, weight, cap: int):
    """All members x with weight(x) <= cap, for an additive weight
    that is strictly positive on every generator.  Sorted graded-lex."""
    gens = monoid.generators
    for g in gens:
        if weight(g) <= 0:
            raise ValueError("weight must be strictly positive on generators")
    seen = {monoid.ambient.zero()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x + g
                if y not in seen and weight(y) <= cap:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda e: e.sort_key())


def members_by_degree(monoid: FgMonoid, degree: int):
    """All members with canonical functional value <= degree (sharp only)."""
    if not is_sharp(monoid):
        raise NotSharp("bounded enumeration needs a sharp monoid")
    return members_below(
        monoid, lambda e: functional_value(monoid, e), degree
    )


def members_by_count(monoid: FgMonoid, depth: int):
    """All sums of at most ``depth`` generators."""
    seen = {monoid.ambient.zero(): 0}
    frontier = [monoid.ambient.zero()]
    for _ in range(depth):
        nxt = []
        for x in frontier:
            for g in monoid.generators:
                y = x + g
                if y not in seen:
                    seen[y] = 0
                    nxt.append(y)
        frontier = nxt
    return sorted(seen, key=lambda e: e.sort_key())


@lru_cache(maxsize=None)
def saturate(monoid: FgMonoid) -> FgMonoid:
    """{x in M^gp : n x in M for some n >= 1}, for sharp M.

    Equals the set of group-envelope elements whose free part lies in
    the rational cone of the generators, computed via a Hilbert basis.
    """
    if not is_sharp(monoid):
        raise NotSharp("saturation is defined here for sharp monoids only")
    if monoid.is_zero_monoid:
        return monoid
    gp = groupify(monoid)
    g = gp.group
    local = [gp.embed(x) for x in monoid.generators]
    frees = [e.free_part() for e in local]
    basis = hilbert.hilbert_basis_lattice(frees, g.rank)
    sat_local = []
    for v in basis:
        sat_local.append(g.element(tuple(v) + (0,) * len(g.torsion_moduli)))
    for j in range(len(g.torsion_moduli)):
        coords = [0] * g.dim
        coords[g.rank + j] = 1
        sat_local.append(g.element(coords))
    sat_gens = tuple(gp.unembed(e) for e in sat_local)
    return FgMonoid(monoid.ambient, sat_gens)


def is_saturated(monoid: FgMonoid) -> bool:
    if not is_sharp(monoid):
        raise NotSharp("saturation test is defined here for sharp monoids only")
    return all(contains(monoid, h) for h in saturate(monoid).generators)


def same_submonoid(a: FgMonoid, b: FgMonoid) -> bool:
    """Equality as subsets of a common ambient group."""
    if a.ambient != b.ambient:
        raise AmbientMismatch("monoids live in different ambient groups")
    return all(contains(a, g) for g in b.generators) and all(
        contains(b, g) for g in a.generators
    )
