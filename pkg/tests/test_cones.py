# 多面锥测试
"""
测试双描述法、规范形式、包含关系与面
"""

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from src.cones import (
    Cone,
    cone_from_inequalities,
    cone_from_rays,
    dd_h_to_v,
    intersect_all,
    is_interior_facet,
    orthant_face,
)
from src.core import DimensionMismatch

coordinates = st.integers(min_value=-3, max_value=3)


def generators(dim: int, min_size: int = 1):
    vector = st.tuples(*[coordinates] * dim).filter(any)
    return st.lists(vector, min_size=min_size, max_size=5)


@pytest.fixture
def quadrant():
    return Cone.from_rays([(1, 0), (0, 1)])


class TestConversion:
    """V ↔ H 转换与规范形式"""

    def test_quadrant(self, quadrant):
        assert quadrant.inequalities == [(0, 1), (1, 0)]
        assert quadrant.equations == []
        assert quadrant.dim == 2

    def test_free_constructors(self, quadrant):
        assert cone_from_rays([(1, 0), (0, 1)]) == quadrant
        assert cone_from_inequalities([(1, 0), (0, 1)]) == quadrant
        assert cone_from_rays([(1, 0)], lineality=[(0, 1)]).lineality == [(0, 1)]

    def test_redundant_generator_dropped(self):
        cone = Cone.from_rays([(1, 0), (1, 1), (0, 1), (2, 2)])
        assert cone.rays == [(0, 1), (1, 0)]

    def test_lineality_split(self):
        half_plane = Cone.from_rays([(1, 0), (-1, 0), (0, 1)])
        assert half_plane.lineality == [(1, 0)]
        assert half_plane.rays == [(0, 1)]
        assert half_plane.inequalities == [(0, 1)]
        assert not half_plane.is_pointed()

    def test_both_descriptions_agree(self, quadrant):
        assert Cone.from_inequalities([(1, 0), (0, 1), (1, 1)]) == quadrant

    def test_fractional_generators(self):
        cone = Cone.from_rays([(Fraction(1, 2), Fraction(1, 3))])
        assert cone.rays == [(3, 2)]
        assert cone.dim == 1

    def test_dd_h_to_v_direct(self):
        rays, lineality = dd_h_to_v([(1, 0, 0), (0, 1, 0)], [], 3)
        assert rays == [(0, 1, 0), (1, 0, 0)]
        assert lineality == [(0, 0, 1)]

    def test_origin_and_full_space(self):
        assert Cone.origin(3).dim == 0
        assert Cone.full_space(3).dim == 3
        assert Cone.full_space(2).contains((-5, 7))

    @settings(max_examples=60, deadline=None)
    @given(generators(3))
    def test_random_cones_consistent(self, rays):
        cone = Cone.from_rays(rays).dd_convert()
        assert cone.verify()
        assert all(cone.contains(r) for r in rays)
        again = Cone.from_inequalities(cone.inequalities, cone.equations, ambient_dim=3)
        assert again == cone
        assert again.rays == cone.rays

    @settings(max_examples=60, deadline=None)
    @given(generators(2))
    def test_random_relative_interior(self, rays):
        cone = Cone.from_rays(rays)
        point = cone.relative_interior_point()
        assert cone.contains_in_relint(point)

    @settings(max_examples=40, deadline=None)
    @given(generators(3))
    def test_double_dual(self, rays):
        cone = Cone.from_rays(rays)
        assert cone.dual().dual() == cone


class TestContainment:
    """包含、求交与维数检查"""

    def test_contains(self, quadrant):
        assert quadrant.contains((2, 0))
        assert not quadrant.contains((-1, 1))
        assert quadrant.contains_in_relint((1, 3))
        assert not quadrant.contains_in_relint((0, 3))

    def test_contains_cone(self, quadrant):
        assert quadrant.contains_cone(Cone.from_rays([(1, 1)]))
        assert not quadrant.contains_cone(Cone.from_rays([(1, 0), (-1, 0)]))

    def test_intersection(self):
        left = Cone.from_rays([(1, 0), (1, 1)])
        right = Cone.from_rays([(0, 1), (1, 1)])
        meet = left.intersect(right)
        assert meet.dim == 1
        assert meet.rays == [(1, 1)]

    def test_intersect_all(self, quadrant):
        assert intersect_all([], 2) == Cone.full_space(2)
        upper = Cone.from_inequalities([(0, 1)])
        assert intersect_all([quadrant, upper], 2) == quadrant

    def test_dimension_mismatch(self, quadrant):
        with pytest.raises(DimensionMismatch):
            quadrant.contains((1, 2, 3))
        with pytest.raises(DimensionMismatch):
            quadrant.contains_cone(Cone.origin(3))

    def test_orthant_face(self):
        face = orthant_face([2, 0], 3)
        assert face.rays == [(0, 0, 1), (1, 0, 0)]
        with pytest.raises(DimensionMismatch):
            orthant_face([3], 3)


class TestFacets:
    """面与线性作用"""

    def test_facet_count(self, quadrant):
        facets = quadrant.facets()
        assert len(facets) == 2
        assert all(f.cone.dim == 1 for f in facets)

    def test_interior_facets(self, quadrant):
        cone = Cone.from_rays([(1, 0), (1, 1)])
        verdicts = {f.normal: is_interior_facet(f, quadrant) for f in cone.facets()}
        assert verdicts == {(0, 1): False, (1, -1): True}

    def test_act(self):
        cone = Cone.from_rays([(1, 0), (1, 1)])
        swapped = cone.act([[0, 1], [1, 0]])
        assert swapped == Cone.from_rays([(0, 1), (1, 1)])

    def test_dual_of_quadrant(self, quadrant):
        assert quadrant.dual() == quadrant

    def test_to_dict(self, quadrant):
        data = quadrant.to_dict()
        assert data["rays"] == [[0, 1], [1, 0]]
        assert data["equations"] == []
        restored = Cone.from_canonical(data["rays"], data["lineality"], data["inequalities"], data["equations"], 2)
        assert restored == quadrant


def meets_interior(eta: Cone, support: Cone) -> bool:
    """η ∩ support° ≠ {0}: η ∩ support 的内点严格满足 support 的全部不等式"""
    meet = Cone.from_inequalities(
        eta.inequalities + support.inequalities, eta.equations + support.equations, ambient_dim=eta.ambient_dim
    )
    point = [sum(column) for column in zip(*meet.rays, *meet.lineality)]
    if not any(point):
        return False
    return all(sum(a * b for a, b in zip(n, point)) > 0 for n in support.inequalities)


class TestRandomFacets:
    """随机锥上的内部面判定与规范键"""

    @settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
    @given(st.integers(2, 3).flatmap(lambda d: st.tuples(generators(d, d), generators(d, d))))
    def test_interior_facet_matches_feasibility(self, pair):
        support = Cone.from_rays(pair[0])
        cone = Cone.from_rays(pair[1])
        assume(support.is_full_dimensional() and cone.is_full_dimensional())
        for facet in cone.facets():
            assert is_interior_facet(facet, support) == meets_interior(facet.cone, support)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 3).flatmap(generators))
    def test_key_survives_dd(self, rays):
        cone = Cone.from_rays(rays)
        key = cone.canonical_key()
        extreme, lineality = dd_h_to_v(cone.inequalities, cone.equations, cone.ambient_dim)
        rebuilt = Cone.from_extreme_rays(extreme, lineality, ambient_dim=cone.ambient_dim)
        assert rebuilt.canonical_key() == key
        assert Cone.from_inequalities(rebuilt.inequalities, rebuilt.equations, ambient_dim=cone.ambient_dim) == cone
