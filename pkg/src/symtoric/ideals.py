"""Torus-invariant monomial ideals and symbolic power containment checks.

A monomial ideal lives in the dual semigroup of a simplicial full cone
and is stored by its minimal generating set of lattice points.  Symbolic
powers of pure height one ideals are valuation ideals: a point belongs
to the E-th symbolic power exactly when its pairing against each chosen
ray reaches E times the assigned multiplicity.  Ordinary powers are
generated by sums of generators.  Comparing the two detects whether a
candidate multiplier D makes every D*a-th symbolic power land inside the
a-th ordinary power.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .cones import SemigroupData, Vector, dot, in_semigroup
from .exact_linalg import DimensionError

__all__ = [
    "MonomialIdeal",
    "PureHeightOneIdeal",
    "LevelCheck",
    "ContainmentReport",
    "ray_prime",
    "symbolic_power",
    "ordinary_power",
    "ideal_member",
    "is_principal",
    "intersect_valuation_ideals",
    "divisor_class",
    "verify_containment",
    "find_sharpness_witness",
]


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal with a minimal, lex-sorted generating set.

    ``valuation_bounds`` records, when the ideal was produced as a
    valuation ideal, the (ray index, lower bound) pairs defining it;
    ordinary powers drop it since they are not valuation ideals in
    general.  Equality compares context and generators only.
    """

    context: SemigroupData
    generators: tuple[Vector, ...]
    valuation_bounds: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)


@dataclass(frozen=True)
class PureHeightOneIdeal:
    """Formal intersection of ray primes with multiplicities.

    ``components`` holds (ray index, multiplicity) pairs with distinct
    ray indices and multiplicities >= 1; they are kept sorted by ray.
    """

    context: SemigroupData
    components: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        comps = tuple(sorted(tuple(c) for c in self.components))
        if not comps:
            raise ValueError("at least one ray component is required")
        nrays = len(self.context.cone.rays)
        seen = set()
        for ray_index, mult in comps:
            if not 0 <= ray_index < nrays:
                raise IndexError(f"ray index {ray_index} out of range for {nrays} rays")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} on ray {ray_index} must be >= 1")
            if ray_index in seen:
                raise ValueError(f"ray index {ray_index} appears twice")
            seen.add(ray_index)
        object.__setattr__(self, "components", comps)


def _pairings(point: Vector, data: SemigroupData) -> tuple[int, ...]:
    return tuple(dot(point, ray) for ray in data.cone.rays)


def _minimalize(points: Sequence[Vector], data: SemigroupData) -> tuple[Vector, ...]:
    """Drop every point that is a semigroup translate of another one.

    Translation by a semigroup element only raises ray pairings, so p is
    redundant exactly when some other candidate q has pairings dominated
    by p's componentwise.
    """
    unique = sorted(set(points))
    pairs = {p: _pairings(p, data) for p in unique}
    kept = []
    for p in unique:
        pp = pairs[p]
        if not any(
            q != p and all(a >= b for a, b in zip(pp, pairs[q])) for q in unique
        ):
            kept.append(p)
    return tuple(kept)


def _minimal_generators(data: SemigroupData, bounds: dict[int, int]) -> tuple[Vector, ...]:
    """Minimal generators of {m in the semigroup : <m, ray_i> >= bounds[i]}.

    Search bound: a minimal generator stays strictly below bound + C on
    every ray, where C is the largest pairing of any Hilbert basis element
    with that ray (bound = 0 on unconstrained rays).  If a member met that
    cap on some ray, subtracting the dual ray generator supported on that
    ray alone would keep all other pairings, stay in the semigroup, and
    leave a smaller member, contradicting minimality.  Closure over sums
    of positively paired Hilbert basis elements inside the cap box
    therefore visits every minimal generator.
    """
    rays = data.cone.rays
    caps = tuple(
        bounds.get(i, 0) + max(row[i] for row in data.pairing_table)
        for i in range(len(rays))
    )
    active = [
        (h, row)
        for h, row in zip(data.hilbert_basis, data.pairing_table)
        if any(row[i] > 0 for i in bounds)
    ]
    zero = (0,) * data.cone.ambient_dim
    seen = {zero}
    frontier: list[tuple[Vector, tuple[int, ...]]] = [(zero, (0,) * len(rays))]
    members = []
    while frontier:
        point, pairs = frontier.pop()
        if all(pairs[i] >= b for i, b in bounds.items()):
            # in the ideal; any further sum is a translate of this member
            members.append(point)
            continue
        for h, row in active:
            extended = tuple(a + b for a, b in zip(point, h))
            if extended in seen:
                continue
            pairing = tuple(a + b for a, b in zip(pairs, row))
            if any(p >= cap for p, cap in zip(pairing, caps)):
                continue
            seen.add(extended)
            frontier.append((extended, pairing))
    return _minimalize(members, data)


def ray_prime(data: SemigroupData, ray_index: int) -> MonomialIdeal:
    """Prime of the divisor on one ray: monomials with positive pairing there."""
    if not 0 <= ray_index < len(data.cone.rays):
        raise IndexError(
            f"ray index {ray_index} out of range for {len(data.cone.rays)} rays"
        )
    gens = [
        h
        for h, row in zip(data.hilbert_basis, data.pairing_table)
        if row[ray_index] >= 1
    ]
    return MonomialIdeal(data, _minimalize(gens, data), ((ray_index, 1),))


def symbolic_power(q: PureHeightOneIdeal, power: int) -> MonomialIdeal:
    """E-th symbolic power: pairing on each component ray at least E times
    its multiplicity."""
    if power < 1:
        raise ValueError(f"symbolic power must be >= 1, got {power}")
    bounds = {ray: power * mult for ray, mult in q.components}
    gens = _minimal_generators(q.context, bounds)
    return MonomialIdeal(q.context, gens, tuple(sorted(bounds.items())))


def ordinary_power(ideal: MonomialIdeal, power: int) -> MonomialIdeal:
    """a-th ordinary power: minimalized a-fold sums of the generators."""
    if power < 1:
        raise ValueError(f"ordinary power must be >= 1, got {power}")
    sums = {
        tuple(sum(coords) for coords in zip(*combo))
        for combo in combinations_with_replacement(ideal.generators, power)
    }
    return MonomialIdeal(ideal.context, _minimalize(sums, ideal.context))


def ideal_member(point: Sequence[int], ideal: MonomialIdeal) -> bool:
    """Membership: the point minus some generator lies in the semigroup."""
    data = ideal.context
    if len(point) != data.cone.ambient_dim:
        raise DimensionError(
            f"point length {len(point)} != ambient dimension {data.cone.ambient_dim}"
        )
    vec = tuple(point)
    for g in ideal.generators:
        diff = tuple(a - b for a, b in zip(vec, g))
        if in_semigroup(diff, data):
            return True
    return False


def is_principal(ideal: MonomialIdeal) -> bool:
    return len(ideal.generators) == 1


def intersect_valuation_ideals(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    """Intersection of valuation ideals, computed on their bound descriptions.

    Bounds are exact and intersect by taking the larger bound per ray,
    after which minimal generators are recomputed from scratch.
    """
    if not ideals:
        raise ValueError("nothing to intersect")
    data = ideals[0].context
    merged: dict[int, int] = {}
    for ideal in ideals:
        if ideal.context != data:
            raise ValueError("ideals live in different semigroups")
        if ideal.valuation_bounds is None:
            raise ValueError("intersection needs ideals with a recorded valuation description")
        for ray, bound in ideal.valuation_bounds:
            merged[ray] = max(bound, merged.get(ray, 0))
    gens = _minimal_generators(data, merged)
    return MonomialIdeal(data, gens, tuple(sorted(merged.items())))


def divisor_class(q: PureHeightOneIdeal) -> tuple[int, ...]:
    """Ray-coefficient vector of the divisor underlying q."""
    coeffs = [0] * len(q.context.cone.rays)
    for ray, mult in q.components:
        coeffs[ray] = mult
    return tuple(coeffs)


@dataclass(frozen=True)
class LevelCheck:
    """Containment verdict at one power level."""

    level: int
    passed: bool
    witness: Vector | None


@dataclass(frozen=True)
class ContainmentReport:
    """Per-level results of a symbolic-into-ordinary containment sweep."""

    multiplier: int
    levels: tuple[LevelCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.levels)


def verify_containment(q: PureHeightOneIdeal, multiplier: int, max_level: int) -> ContainmentReport:
    """Check symbolic_power(q, D*a) inside ordinary_power(q, a) for a = 1..max_level.

    Generator containment suffices: every other member is a semigroup
    translate of a generator and ordinary powers absorb translation.  The
    first symbolic generator failing membership is reported as a witness.
    """
    if multiplier < 1:
        raise ValueError(f"multiplier must be >= 1, got {multiplier}")
    if max_level < 1:
        raise ValueError(f"max level must be >= 1, got {max_level}")
    base = symbolic_power(q, 1)
    levels = []
    for a in range(1, max_level + 1):
        sym = symbolic_power(q, multiplier * a)
        ordinary = ordinary_power(base, a)
        witness = next(
            (g for g in sym.generators if not ideal_member(g, ordinary)), None
        )
        levels.append(LevelCheck(a, witness is None, witness))
    return ContainmentReport(multiplier, tuple(levels))


def find_sharpness_witness(
    q: PureHeightOneIdeal, candidate: int, max_level: int
) -> tuple[int, Vector] | None:
    """Smallest level where the candidate multiplier fails, with a monomial
    witnessing the failure; None when no failure shows up to max_level."""
    if candidate < 1:
        raise ValueError(f"candidate multiplier must be >= 1, got {candidate}")
    if max_level < 1:
        raise ValueError(f"max level must be >= 1, got {max_level}")
    base = symbolic_power(q, 1)
    for a in range(1, max_level + 1):
        sym = symbolic_power(q, candidate * a)
        ordinary = ordinary_power(base, a)
        for g in sym.generators:
            if not ideal_member(g, ordinary):
                return a, g
    return None
