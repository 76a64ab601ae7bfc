"""Strongly convex rational cones and their dual lattice semigroups.

A cone is stored by its primitive ray generators, deduplicated and sorted,
so equal cones compare equal regardless of input order.  For simplicial
full-dimensional cones the module computes the dual cone, the Hilbert
basis of the dual semigroup, and exact membership tests with explicit
decompositions over the Hilbert basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .exact_linalg import (
    DimensionError,
    IntegerMatrix,
    adjugate,
    determinant,
    smith_normal_form,
)

__all__ = [
    "Vector",
    "Cone",
    "SemigroupData",
    "NotStronglyConvexError",
    "UnsupportedConeError",
    "primitive",
    "make_cone",
    "dual_cone",
    "hilbert_basis",
    "in_semigroup",
    "semigroup_member",
    "dot",
]

Vector = tuple[int, ...]


class NotStronglyConvexError(ValueError):
    """The generated cone contains a line through the origin."""


class UnsupportedConeError(ValueError):
    """The operation needs a simplicial and/or full-dimensional cone."""


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def primitive(vector: Sequence[int]) -> Vector:
    """Divide out the gcd of the coordinates; rejects the zero vector."""
    vec = tuple(vector)
    if not any(vec):
        raise ValueError("the zero vector has no primitive form")
    g = gcd(*(abs(x) for x in vec))
    return tuple(x // g for x in vec)


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone given by primitive, lex-sorted ray generators."""

    ambient_dim: int
    rays: tuple[Vector, ...]
    is_simplicial: bool
    is_full: bool

    def ray_matrix(self) -> IntegerMatrix:
        """One row per ray, in stored order."""
        return IntegerMatrix.from_rows(self.rays)


def make_cone(rays: Iterable[Sequence[int]], ambient_dim: int) -> Cone:
    """Validate, primitivize, deduplicate and sort the rays of a cone.

    Rays pointing in the same direction collapse to one.  A cone that
    contains a line through the origin is rejected: that happens exactly
    when the negation of one of its rays is again a nonnegative rational
    combination of the rays, which is decided by exact Fourier-Motzkin
    elimination.
    """
    if ambient_dim < 1:
        raise ValueError("ambient dimension must be at least 1")
    prim = []
    for k, ray in enumerate(rays):
        vec = tuple(ray)
        if len(vec) != ambient_dim:
            raise DimensionError(
                f"ray {k} has length {len(vec)}, expected {ambient_dim}"
            )
        if not any(vec):
            raise ValueError(f"ray {k} is the zero vector")
        prim.append(primitive(vec))
    unique = sorted(set(prim))
    if unique:
        snf = smith_normal_form(IntegerMatrix.from_rows(unique))
        rank = sum(1 for f in snf.invariant_factors if f)
    else:
        rank = 0
    simplicial = rank == len(unique)
    if not simplicial:
        # linearly independent rays always span a pointed cone; only the
        # dependent case needs the feasibility check
        for ray in unique:
            negated = tuple(-x for x in ray)
            if _cone_contains(unique, negated):
                raise NotStronglyConvexError(
                    f"cone contains the line through {ray}"
                )
    return Cone(ambient_dim, tuple(unique), simplicial, rank == ambient_dim)


def _normalize_inequality(coeffs: tuple[int, ...], rhs: int) -> tuple[tuple[int, ...], int]:
    g = gcd(*(abs(c) for c in coeffs), abs(rhs))
    if g > 1:
        coeffs = tuple(c // g for c in coeffs)
        rhs //= g
    return coeffs, rhs


def _cone_contains(rays: Sequence[Vector], target: Vector) -> bool:
    """Exact test: is target a nonnegative rational combination of the rays?

    Encodes the defining equations as pairs of inequalities in the
    combination coefficients and eliminates the coefficients one at a time
    (Fourier-Motzkin over the integers, normalizing by gcd).
    """
    r = len(rays)
    if r == 0:
        return not any(target)
    system: set[tuple[tuple[int, ...], int]] = set()
    for j in range(len(target)):
        row = tuple(ray[j] for ray in rays)
        system.add(_normalize_inequality(row, target[j]))
        system.add(_normalize_inequality(tuple(-x for x in row), -target[j]))
    for i in range(r):
        unit = tuple(1 if k == i else 0 for k in range(r))
        system.add((unit, 0))
    for k in range(r):
        pos = [q for q in system if q[0][k] > 0]
        neg = [q for q in system if q[0][k] < 0]
        keep = {q for q in system if q[0][k] == 0}
        for cp, rp in pos:
            for cn, rn in neg:
                a, b = cp[k], -cn[k]
                coeffs = tuple(b * cp[idx] + a * cn[idx] for idx in range(r))
                keep.add(_normalize_inequality(coeffs, b * rp + a * rn))
        system = keep
    return all(rhs <= 0 for _, rhs in system)


def dual_cone(cone: Cone) -> Cone:
    """Dual of a simplicial full cone.

    With A the square ray matrix, the columns of its adjugate pair to
    det(A) with the matching ray and to zero with every other ray, so
    after fixing the overall sign they generate the dual cone.
    """
    if not (cone.is_simplicial and cone.is_full):
        raise UnsupportedConeError("dualization needs a simplicial full-dimensional cone")
    mat = cone.ray_matrix()
    det = determinant(mat)
    adj = adjugate(mat)
    sign = 1 if det > 0 else -1
    n = cone.ambient_dim
    duals = [
        primitive(tuple(sign * adj.at(i, j) for i in range(n))) for j in range(n)
    ]
    return make_cone(duals, n)


@dataclass(frozen=True)
class SemigroupData:
    """Dual semigroup of a simplicial full cone, ready for monomial work.

    ``pairing_table[i][j]`` is the pairing of Hilbert basis element i with
    cone ray j; both lists are lex-sorted.
    """

    cone: Cone
    dual_rays: tuple[Vector, ...]
    hilbert_basis: tuple[Vector, ...]
    pairing_table: tuple[tuple[int, ...], ...]


def hilbert_basis(cone: Cone) -> SemigroupData:
    """Hilbert basis of the dual semigroup of a simplicial full cone.

    Every semigroup element is a dual-ray translate of a lattice point of
    the half-open fundamental parallelotope of the dual rays, so the
    irreducible elements all sit among those points and the dual rays
    themselves.  Candidates are enumerated over the integer bounding box
    of the parallelotope and filtered down to the irreducible ones.
    """
    dual = dual_cone(cone)
    n = cone.ambient_dim
    w = dual.rays
    # columns of wmat are the dual rays
    wmat = IntegerMatrix.from_rows([[w[j][i] for j in range(n)] for i in range(n)])
    det = determinant(wmat)
    adj = adjugate(wmat)
    sign = 1 if det > 0 else -1
    absdet = abs(det)
    lo = [0] * n
    hi = [0] * n
    for subset in itertools.product((0, 1), repeat=n):
        vertex = [sum(subset[j] * w[j][i] for j in range(n)) for i in range(n)]
        lo = [min(a, b) for a, b in zip(lo, vertex)]
        hi = [max(a, b) for a, b in zip(hi, vertex)]
    candidates: set[Vector] = set(w)
    for point in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(n))):
        if not any(point):
            continue
        coords = [
            sign * sum(adj.at(i, k) * point[k] for k in range(n)) for i in range(n)
        ]
        # 0 <= t_i < 1 in the parallelotope coordinates, scaled by |det|
        if all(0 <= c < absdet for c in coords):
            candidates.add(point)
    rays = cone.rays

    def reducible(h: Vector) -> bool:
        for g in candidates:
            if g == h:
                continue
            diff = tuple(a - b for a, b in zip(h, g))
            if all(dot(diff, ray) >= 0 for ray in rays):
                return True
        return False

    basis = tuple(h for h in sorted(candidates) if not reducible(h))
    table = tuple(tuple(dot(h, ray) for ray in rays) for h in basis)
    return SemigroupData(cone, dual.rays, basis, table)


def in_semigroup(point: Sequence[int], data: SemigroupData) -> bool:
    """Membership in the dual semigroup: all ray pairings nonnegative."""
    if len(point) != data.cone.ambient_dim:
        raise DimensionError(
            f"point length {len(point)} != ambient dimension {data.cone.ambient_dim}"
        )
    return all(dot(point, ray) >= 0 for ray in data.cone.rays)


def semigroup_member(point: Sequence[int], data: SemigroupData) -> tuple[int, ...] | None:
    """Decompose a point over the Hilbert basis, or report non-membership.

    Returns a coefficient tuple aligned with ``data.hilbert_basis`` such
    that the weighted sum reproduces the point, or None when the point is
    outside the semigroup.  Depth-first search over basis elements in
    lexicographic order; pairings against every ray stay nonnegative at
    each step, which bounds the search.
    """
    vec = tuple(point)
    if not in_semigroup(vec, data):
        return None
    table = data.pairing_table
    target = tuple(dot(vec, ray) for ray in data.cone.rays)
    counts = [0] * len(data.hilbert_basis)

    def search(idx: int, remaining: tuple[int, ...]) -> bool:
        if not any(remaining):
            return True
        if idx == len(table):
            return False
        pairings = table[idx]
        cmax = min(rem // p for rem, p in zip(remaining, pairings) if p > 0)
        for c in range(cmax, -1, -1):
            counts[idx] = c
            nxt = tuple(rem - c * p for rem, p in zip(remaining, pairings))
            if search(idx + 1, nxt):
                return True
        counts[idx] = 0
        return False

    if search(0, target):
        return tuple(counts)
    raise RuntimeError("point passed the facet test but no decomposition was found")
