"""Divisor class groups of full-dimensional affine toric charts.

The group is presented as the cokernel of the pairing map sending a
lattice character to its vector of valuations along the rays.  Smith
normal form of the ray matrix yields the invariant factors, the free
rank, and a projection taking any integer ray-coefficient vector to a
canonical residue form, so orders of individual classes are computable.

A class is represented by its integer coefficient vector over the rays
of the cone, indexed in the cone's stored (lex-sorted) ray order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Sequence

from .cones import Cone, UnsupportedConeError
from .exact_linalg import DimensionError, IntegerMatrix, determinant, smith_normal_form

__all__ = [
    "DivisorClass",
    "CokernelProjection",
    "AbelianGroupPresentation",
    "presentation_matrix",
    "class_group_of",
    "group_order",
    "group_exponent",
    "det_multiplier",
    "class_of",
    "order_of_class",
]

DivisorClass = tuple[int, ...]


@dataclass(frozen=True)
class CokernelProjection:
    """Change of basis carrying ray-coefficient vectors to residue form.

    ``transform`` is the unimodular U from the Smith decomposition of the
    ray matrix; ``moduli`` gives, per transformed coordinate, the modulus
    of that coordinate in the quotient (1 kills the coordinate, 0 leaves
    it free).
    """

    transform: IntegerMatrix
    moduli: tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroupPresentation:
    """Finitely generated abelian group in invariant factor form.

    ``invariant_factors`` keeps only the factors >= 2, in divisibility
    order.  Presentations built from a cone carry projection data; hand
    built ones (catalog entries) may omit it.
    """

    invariant_factors: tuple[int, ...]
    free_rank: int
    projection: CokernelProjection | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if any(f < 2 for f in self.invariant_factors):
            raise ValueError("factors of 1 are dropped from the presentation")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        if self.free_rank < 0:
            raise ValueError("free rank cannot be negative")

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank == 0 and len(self.invariant_factors) <= 1


def presentation_matrix(cone: Cone) -> IntegerMatrix:
    """Ray matrix presenting the class group; one row per ray."""
    if not cone.is_full:
        raise UnsupportedConeError("class group presentation needs a full-dimensional cone")
    return cone.ray_matrix()


def class_group_of(cone: Cone) -> AbelianGroupPresentation:
    """Class group as the cokernel of the ray pairing map."""
    mat = presentation_matrix(cone)
    dec = smith_normal_form(mat)
    moduli = tuple(dec.invariant_factors) + (0,) * (mat.rows - len(dec.invariant_factors))
    factors = tuple(d for d in moduli if d >= 2)
    free_rank = sum(1 for d in moduli if d == 0)
    return AbelianGroupPresentation(factors, free_rank, CokernelProjection(dec.U, moduli))


def group_order(group: AbelianGroupPresentation) -> int | None:
    """Order of the group; None means infinite."""
    if group.free_rank:
        return None
    return prod(group.invariant_factors)


def group_exponent(group: AbelianGroupPresentation) -> int | None:
    """Exponent of the group (largest invariant factor); None means infinite."""
    if group.free_rank:
        return None
    return group.invariant_factors[-1] if group.invariant_factors else 1


def det_multiplier(cone: Cone) -> int:
    """Unsigned ray-matrix determinant of a simplicial full cone.

    This equals the class group order; the equality is asserted rather
    than assumed.
    """
    if not (cone.is_simplicial and cone.is_full):
        raise UnsupportedConeError("determinant multiplier needs a simplicial full cone")
    d = abs(determinant(cone.ray_matrix()))
    assert d == group_order(class_group_of(cone)), (
        "parallelotope volume disagrees with the class group order"
    )
    return d


def _projection_of(group: AbelianGroupPresentation) -> CokernelProjection:
    if group.projection is None:
        raise ValueError("this presentation carries no projection data")
    return group.projection


def _canonical_parts(
    divisor: Sequence[int], group: AbelianGroupPresentation
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    proj = _projection_of(group)
    if len(divisor) != proj.transform.cols:
        raise DimensionError(
            f"divisor has {len(divisor)} coefficients, expected {proj.transform.cols}"
        )
    image = proj.transform.apply(tuple(divisor))
    residues = tuple(x % d for x, d in zip(image, proj.moduli) if d >= 2)
    frees = tuple(x for x, d in zip(image, proj.moduli) if d == 0)
    return residues, frees


def class_of(divisor: Sequence[int], group: AbelianGroupPresentation) -> tuple[int, ...]:
    """Canonical residue form of a divisor class.

    The first ``len(invariant_factors)`` entries are residues modulo the
    matching invariant factor; the remaining ``free_rank`` entries are the
    signed free coordinates.  The identity is the all-zero tuple.
    """
    residues, frees = _canonical_parts(divisor, group)
    return residues + frees


def order_of_class(divisor: Sequence[int], group: AbelianGroupPresentation) -> int | None:
    """Order of a class in the group; None means infinite.

    Found by iterating multiples up to the torsion exponent and checking
    each against the identity.
    """
    residues, frees = _canonical_parts(divisor, group)
    if any(frees):
        return None
    if not any(residues):
        return 1
    bound = group.invariant_factors[-1] if group.invariant_factors else 1
    for k in range(2, bound + 1):
        scaled = tuple(k * x for x in divisor)
        res, _ = _canonical_parts(scaled, group)
        if not any(res):
            return k
    raise RuntimeError("order search exceeded the group exponent")
