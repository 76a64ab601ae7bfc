from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cone_zoo import CONE_FIXTURES, all_cones, an_cone, splits_of
from symtoric.cones import (
    NotStronglyConvexError,
    UnsupportedConeError,
    dot,
    dual_cone,
    hilbert_basis,
    in_semigroup,
    make_cone,
    primitive,
    semigroup_member,
)
from symtoric.exact_linalg import DimensionError


class TestPrimitive:
    def test_examples(self):
        assert primitive((2, 4)) == (1, 2)
        assert primitive((0, -3)) == (0, -1)
        assert primitive((5,)) == (1,)
        assert primitive((-2, -4, -6)) == (-1, -2, -3)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            primitive((0, 0))

    def test_idempotent_and_sign_preserving(self):
        for vec in [(3, -6), (7, 7), (-4, 2), (0, 9)]:
            p = primitive(vec)
            assert primitive(p) == p
            # p is a positive rational multiple of vec
            assert all(a * b >= 0 for a, b in zip(p, vec))


class TestMakeCone:
    def test_canonicalization(self):
        cone = make_cone([(2, 4), (1, 0)], 2)
        assert cone.rays == ((1, 0), (1, 2))
        assert cone.is_simplicial and cone.is_full

    def test_duplicate_directions_collapse(self):
        cone = make_cone([(1, 2), (2, 4), (3, 6)], 2)
        assert cone.rays == ((1, 2),)
        assert cone.is_simplicial and not cone.is_full

    def test_line_rejected(self):
        with pytest.raises(NotStronglyConvexError):
            make_cone([(1, 0), (-1, 0)], 2)
        with pytest.raises(NotStronglyConvexError):
            make_cone([(1, 0), (0, 1), (-1, -1)], 2)
        with pytest.raises(NotStronglyConvexError):
            make_cone([(1, 1), (-2, -2)], 2)

    def test_zero_ray_rejected(self):
        with pytest.raises(ValueError, match="ray 1"):
            make_cone([(1, 0), (0, 0)], 2)

    def test_length_mismatch_rejected(self):
        with pytest.raises(DimensionError, match="ray 0"):
            make_cone([(1, 0, 0)], 2)

    def test_square_base_cone_flags(self):
        cone = make_cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3)
        assert len(cone.rays) == 4
        assert cone.is_full
        assert not cone.is_simplicial

    def test_empty_cone(self):
        cone = make_cone([], 2)
        assert cone.rays == ()
        assert cone.is_simplicial and not cone.is_full

    @given(st.permutations(range(4)))
    def test_order_independence(self, perm):
        rays = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)]
        shuffled = [rays[i] for i in perm]
        assert make_cone(shuffled, 3) == make_cone(rays, 3)

    @given(st.integers(1, 9), st.integers(1, 9))
    def test_scaling_rays_changes_nothing(self, s1, s2):
        base = make_cone([(1, 0), (1, 2)], 2)
        scaled = make_cone([(s1, 0), (s2, 2 * s2)], 2)
        assert scaled == base


class TestDualCone:
    def test_a1_example(self):
        dual = dual_cone(make_cone([(1, 0), (1, 2)], 2))
        assert dual.rays == ((0, 1), (2, -1))

    def test_orthant_self_dual(self):
        cone = make_cone([(1, 0), (0, 1)], 2)
        assert dual_cone(cone) == cone

    def test_unsupported_inputs(self):
        with pytest.raises(UnsupportedConeError):
            dual_cone(make_cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3))
        with pytest.raises(UnsupportedConeError):
            dual_cone(make_cone([(1, 2)], 2))

    def test_involution_on_zoo(self, zoo_cones):
        for name, cone in zoo_cones:
            assert dual_cone(dual_cone(cone)) == cone, name

    def test_pairing_signs_on_zoo(self, zoo_cones):
        # dual ray j pairs nonnegatively with every ray, zero off-diagonal
        for name, cone in zoo_cones:
            dual = dual_cone(cone)
            for w in dual.rays:
                pairings = [dot(w, v) for v in cone.rays]
                assert all(p >= 0 for p in pairings), name
                assert pairings.count(0) == len(cone.rays) - 1, name


class TestHilbertBasis:
    def test_a1_frozen(self):
        data = hilbert_basis(make_cone([(1, 0), (1, 2)], 2))
        assert data.hilbert_basis == ((0, 1), (1, 0), (2, -1))
        assert data.dual_rays == ((0, 1), (2, -1))
        assert data.pairing_table == ((0, 2), (1, 1), (2, 0))

    def test_a2_frozen(self):
        # computed by the box enumeration oracle below before freezing
        data = hilbert_basis(make_cone([(1, 0), (1, 3)], 2))
        assert data.hilbert_basis == ((0, 1), (1, 0), (3, -1))

    def test_orthant_frozen(self):
        data = hilbert_basis(make_cone([(1, 0), (0, 1)], 2))
        assert data.hilbert_basis == ((0, 1), (1, 0))

    def test_an_basis_has_three_elements(self):
        for n in range(1, 8):
            data = hilbert_basis(an_cone(n))
            assert data.hilbert_basis == ((0, 1), (1, 0), (n + 1, -1))

    def test_unsupported_cone(self):
        with pytest.raises(UnsupportedConeError):
            hilbert_basis(make_cone([(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)], 3))

    def test_pairings_nonnegative_and_sorted(self, zoo_semigroups):
        for name, data in zoo_semigroups:
            assert list(data.hilbert_basis) == sorted(data.hilbert_basis), name
            for row in data.pairing_table:
                assert all(p >= 0 for p in row), name
                assert any(p > 0 for p in row), name

    def test_dual_rays_belong_to_basis(self, zoo_semigroups):
        for name, data in zoo_semigroups:
            assert set(data.dual_rays) <= set(data.hilbert_basis), name

    def test_no_element_splits(self, zoo_semigroups):
        for name, data in zoo_semigroups:
            for h in data.hilbert_basis:
                assert splits_of(h, data) == [], (name, h)

    def test_box_completeness_2d(self, zoo_semigroups):
        # every lattice point of a box around twice the fundamental
        # parallelotope that passes the facet test must decompose
        for name, data in zoo_semigroups:
            if data.cone.ambient_dim != 2:
                continue
            w = data.dual_rays
            corners = [
                (2 * (a * w[0][0] + b * w[1][0]), 2 * (a * w[0][1] + b * w[1][1]))
                for a, b in itertools.product((0, 1), repeat=2)
            ]
            xs = [c[0] for c in corners]
            ys = [c[1] for c in corners]
            for pt in itertools.product(
                range(min(xs), max(xs) + 1), range(min(ys), max(ys) + 1)
            ):
                if not in_semigroup(pt, data):
                    assert semigroup_member(pt, data) is None
                    continue
                counts = semigroup_member(pt, data)
                assert counts is not None, (name, pt)
                rebuilt = tuple(
                    sum(c * h[i] for c, h in zip(counts, data.hilbert_basis))
                    for i in range(2)
                )
                assert rebuilt == pt, (name, pt)


class TestSemigroupMember:
    def test_examples(self):
        data = hilbert_basis(make_cone([(1, 0), (1, 2)], 2))
        counts = semigroup_member((2, 0), data)
        assert counts is not None
        rebuilt = tuple(
            sum(c * h[i] for c, h in zip(counts, data.hilbert_basis)) for i in range(2)
        )
        assert rebuilt == (2, 0)
        assert semigroup_member((-1, 0), data) is None
        assert semigroup_member((0, 0), data) == (0, 0, 0)

    def test_membership_matches_facet_test(self, zoo_semigroups):
        for name, data in zoo_semigroups:
            n = data.cone.ambient_dim
            for pt in itertools.product(range(-2, 5), repeat=n):
                member = in_semigroup(pt, data)
                decomposition = semigroup_member(pt, data)
                assert (decomposition is not None) == member, (name, pt)

    def test_dimension_check(self):
        data = hilbert_basis(make_cone([(1, 0), (1, 2)], 2))
        with pytest.raises(DimensionError):
            semigroup_member((1, 2, 3), data)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from([name for name, _ in CONE_FIXTURES]),
    st.data(),
)
def test_random_basis_sums_decompose(name, data_strategy):
    """Random nonnegative combinations of the basis always decompose back."""
    cones = dict(all_cones())
    data = hilbert_basis(cones[name])
    coeffs = data_strategy.draw(
        st.lists(
            st.integers(0, 3),
            min_size=len(data.hilbert_basis),
            max_size=len(data.hilbert_basis),
        )
    )
    point = tuple(
        sum(c * h[i] for c, h in zip(coeffs, data.hilbert_basis))
        for i in range(data.cone.ambient_dim)
    )
    counts = semigroup_member(point, data)
    assert counts is not None
    rebuilt = tuple(
        sum(c * h[i] for c, h in zip(counts, data.hilbert_basis))
        for i in range(data.cone.ambient_dim)
    )
    assert rebuilt == point
