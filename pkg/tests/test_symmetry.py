# 对称群测试
"""
测试带符号置换、群闭包、诱导矩阵与子集轨道
"""

from fractions import Fraction

import pytest

from src.cones import Cone
from src.core import BoundExceeded, IntMatrix, NotASymmetry, ParseError, ValidationError, matmul
from src.polynomial import parse_polynomial
from src.symmetry import (
    SignedPermutation,
    SymmetryGroup,
    act_on_cone,
    act_on_ideal,
    group_closure,
    induced_matrix,
    iter_subset_orbit_representatives,
    mask_of,
    orbit_of_cone,
    parse_cycles,
    subset_orbit_representatives,
    verify_ideal_invariance,
)


class TestSignedPermutation:
    """置换的解析、复合与作用"""

    def test_parse_cycles(self):
        assert parse_cycles("(1,2)(3,4)", 4) == (1, 0, 3, 2)
        assert parse_cycles("()", 3) == (0, 1, 2)
        assert parse_cycles("(1,2,3)", 4) == (1, 2, 0, 3)

    @pytest.mark.parametrize("text", ["(1,5)", "(1,2)(2,3)", "(1,a)", "1,2"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            parse_cycles(text, 4)

    def test_cycles_round_trip(self):
        sigma = SignedPermutation.parse("(1,5,9,10,3)(2,7,8,4,6)", 10)
        assert sigma.cycles() == "(1,5,9,10,3)(2,7,8,4,6)"
        assert SignedPermutation.identity(3).cycles() == "()"

    def test_composition_convention(self):
        sigma = SignedPermutation.parse("(1,2)", 3)
        tau = SignedPermutation.parse("(2,3)", 3)
        product = sigma * tau
        assert all(product(j) == sigma(tau(j)) for j in range(3))

    def test_inverse_with_signs(self):
        sigma = SignedPermutation.parse("(1,2,3)", 3, [2, -1, 1])
        assert (sigma * sigma.inverse()).is_identity()
        assert (sigma.inverse() * sigma).is_identity()

    def test_bad_signs(self):
        with pytest.raises(ValidationError):
            SignedPermutation((0, 1), (1, 0))
        with pytest.raises(ValidationError):
            SignedPermutation((0, 1), (1,))

    def test_act_on_mask_and_vector(self):
        sigma = SignedPermutation.parse("(1,2,3,4)", 4)
        assert sigma.act_on_mask(mask_of([0, 2])) == mask_of([1, 3])
        assert sigma.act_on_vector((1, 2, 3, 4)) == (4, 1, 2, 3)

    def test_act_on_polynomial_uses_signs(self, cube):
        sigma = SignedPermutation((0, 1, 2, 3), (-1, 1, 1, 1))
        image = sigma.act_on_polynomial(cube.ideal.generators[0])
        assert image == parse_polynomial("-T(1)*T(3) - T(2)*T(4)", cube.ring)


class TestInducedMatrix:
    """A_σ q_j = q_{σ(j)}"""

    def test_cube_rotation(self, cube):
        rotation = SignedPermutation.parse("(1,2,3,4)", 4)
        assert induced_matrix(rotation, cube.grading).rows == ((0, -1), (1, 0))

    def test_cube_reflection(self, cube):
        reflection = SignedPermutation.parse("(1,2)(3,4)", 4)
        assert induced_matrix(reflection, cube.grading).rows == ((-1, 0), (0, 1))

    def test_not_a_symmetry(self, cube):
        with pytest.raises(NotASymmetry):
            induced_matrix(SignedPermutation.parse("(1,2)", 4), cube.grading)

    def test_degree_mismatch(self, cube):
        with pytest.raises(NotASymmetry):
            induced_matrix(SignedPermutation.identity(3), cube.grading)

    def test_non_integral(self):
        grading = IntMatrix.from_rows([[1, 0], [0, 2]])
        with pytest.raises(NotASymmetry, match="non-integral"):
            induced_matrix(SignedPermutation.parse("(1,2)", 2), grading)

    def test_matrices_are_multiplicative(self, g25):
        group = g25.group
        a, b = group.elements[1], group.elements[2]
        product = group.index_of(a * b)
        left, right = group.matrix(group.index_of(a)), group.matrix(group.index_of(b))
        assert IntMatrix.from_rows(matmul(left.rows, right.rows)) == group.matrix(product)


class TestGroup:
    """群闭包与轨道"""

    def test_cube_order(self, cube):
        assert len(cube.group) == 8
        assert cube.group.order_check() == 8
        assert cube.group.elements[0].is_identity()

    def test_g25_order(self, g25):
        assert len(g25.group) == 120
        assert g25.group.order_check() == 120

    def test_bound_exceeded(self, cube):
        with pytest.raises(BoundExceeded):
            group_closure(cube.group.generators, bound=4)

    def test_ideal_invariance(self, cube, g25):
        assert verify_ideal_invariance(cube.group, cube.ideal)
        assert verify_ideal_invariance(g25.group, g25.ideal)
        assert not verify_ideal_invariance([SignedPermutation.parse("(1,2)", 4)], cube.ideal)

    def test_generators_suffice(self, g25):
        # 生成元通过后，全部 120 个元素也保持理想
        assert verify_ideal_invariance(g25.group.elements, g25.ideal)

    def test_signs_matter(self, g25):
        # 去掉符号后 g25 的理想不再不变
        unsigned = [SignedPermutation(g.images) for g in g25.group.generators]
        assert not verify_ideal_invariance(unsigned, g25.ideal)

    def test_act_on_ideal(self, g25):
        sigma = g25.group.elements[7]
        assert act_on_ideal(sigma, g25.ideal).equals(g25.ideal)

    def test_subset_orbits(self, cube, g25):
        cube_orbits = subset_orbit_representatives(cube.group, 4)
        assert len(cube_orbits) == 6
        assert sum(length for _, length in cube_orbits) == 16
        g25_orbits = subset_orbit_representatives(g25.group, 10)
        assert len(g25_orbits) == 34
        assert sum(length for _, length in g25_orbits) == 1024

    def test_streaming_orbits_agree(self, cube):
        assert list(iter_subset_orbit_representatives(cube.group, 4)) == subset_orbit_representatives(cube.group, 4)

    def test_stabilizer(self, cube):
        # 轨道长度 × 稳定子阶 = 群阶
        for mask, length in subset_orbit_representatives(cube.group, 4):
            assert length * cube.group.stabilizer_size(mask) == 8

    def test_orbit_of_cone(self, cube):
        ray = Cone.from_rays([(1, 1)])
        orbit = orbit_of_cone(cube.group, ray)
        assert len(orbit) == 4
        assert Cone.from_rays([(Fraction(-1), Fraction(-1))]) in orbit.values()

    def test_orbit_of_subset(self, cube):
        orbit = cube.group.orbit_of_subset([0, 1])
        assert orbit == {frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3}), frozenset({0, 3})}

    def test_act_on_cone(self):
        rotation = [[0, -1], [1, 0]]
        assert act_on_cone(rotation, Cone.from_rays([(1, 1)])) == Cone.from_rays([(-1, 1)])
        quadrant = Cone.from_rays([(1, 0), (0, 1)])
        assert act_on_cone(rotation, quadrant) == Cone.from_rays([(0, 1), (-1, 0)])

    def test_orbit_without_grading(self):
        group = SymmetryGroup([SignedPermutation.parse("(1,2)", 2)])
        assert group.matrices is None
        with pytest.raises(NotASymmetry):
            orbit_of_cone(group, Cone.origin(2))
