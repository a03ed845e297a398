# 饱和测试
"""
测试四种饱和做法以及它们之间的一致性
"""

import numpy as np
import pytest

from src.core import HypothesisViolated, NotHomogeneous
from src.polynomial import (
    Ideal,
    PolynomialRing,
    choose_saturation_order,
    contains_monomial_rabinowitsch,
    ideal_quotient,
    intersect_ideals,
    parse_polynomial,
    parse_polynomials,
    saturate_iterated_quotient,
    saturate_product,
    saturate_stepwise,
    saturate_variable,
    standard_ordering,
)
from src.polynomial.sampling import random_homogeneous_ideal, weighted_monomials


@pytest.fixture
def xyz():
    return PolynomialRing(["x", "y", "z"])


def ideal_of(ring, *texts):
    return Ideal(ring, parse_polynomials(texts, ring))


class TestSaturateProduct:
    """边约化边除去变量幂次的饱和"""

    def test_removes_common_factor(self, xyz):
        ideal = ideal_of(xyz, "x*y - x*z")
        saturated = Ideal(xyz, saturate_product(ideal, range(3), (1, 1, 1)))
        assert saturated.equals(ideal_of(xyz, "y - z"))

    def test_removes_hidden_factor(self, xyz):
        ideal = ideal_of(xyz, "x^2*y - x*z^2")
        saturated = Ideal(xyz, saturate_product(ideal, range(3), (1, 1, 1)))
        assert saturated.equals(ideal_of(xyz, "x*y - z^2"))

    def test_monomial_gives_unit(self, xyz):
        basis = saturate_product(ideal_of(xyz, "x*y"), range(3), (1, 1, 1))
        assert len(basis) == 1 and basis[0].is_ground

    def test_needs_homogeneity(self, xyz):
        with pytest.raises(NotHomogeneous):
            saturate_product(ideal_of(xyz, "x - y^2"), range(3), (1, 1, 1))

    def test_sequence_must_match(self, xyz):
        with pytest.raises(ValueError):
            saturate_product(ideal_of(xyz, "x - y"), range(3), (1, 1, 1), sequence=[0, 1])

    def test_empty_ideal(self, xyz):
        assert saturate_product(Ideal(xyz, []), range(3), (1, 1, 1)) == []

    def test_weighted(self):
        ring = PolynomialRing(["a", "b"])
        ideal = ideal_of(ring, "a^3*b - a*b^2")
        weight = (1, 2)
        saturated = Ideal(ring, saturate_product(ideal, range(2), weight))
        assert saturated.equals(ideal_of(ring, "a^2 - b"))


class TestSaturateVariable:
    """单变量饱和"""

    def test_strips_power(self, xyz):
        order = standard_ordering(3)
        f = xyz.convert(parse_polynomial("x*z^2 - y*z^2", xyz), order)
        assert saturate_variable([f], 2) == [xyz.convert(parse_polynomial("x - y", xyz), order)]

    def test_hypothesis_violated(self, xyz):
        # y 整除首项 y^2 但不整除 f
        f = xyz.convert(parse_polynomial("x*z + y^2", xyz), standard_ordering(3))
        with pytest.raises(HypothesisViolated):
            saturate_variable([f], 1)


class TestQuotients:
    """理想商与交"""

    def test_intersection(self, xyz):
        meet = intersect_ideals(ideal_of(xyz, "x"), ideal_of(xyz, "y"))
        assert meet.equals(ideal_of(xyz, "x*y"))

    def test_quotient(self, xyz):
        quotient = ideal_quotient(ideal_of(xyz, "x*y", "x*z"), parse_polynomial("x", xyz))
        assert quotient.equals(ideal_of(xyz, "y", "z"))

    def test_iterated_quotient(self, xyz):
        saturated = saturate_iterated_quotient(ideal_of(xyz, "x^3*y - x^3*z"), range(3))
        assert saturated.equals(ideal_of(xyz, "y - z"))

    def test_rabinowitsch(self, xyz):
        assert contains_monomial_rabinowitsch(ideal_of(xyz, "x*y*z^2"), range(3))
        assert not contains_monomial_rabinowitsch(ideal_of(xyz, "x - y"), range(3))
        assert not contains_monomial_rabinowitsch(Ideal(xyz, []), range(3))


class TestVariableOrder:
    """启发式饱和顺序"""

    def test_returns_permutation(self, xyz):
        ideal = ideal_of(xyz, "x*y - z^2", "x^2 - y*z")
        order = choose_saturation_order(ideal, range(3), (1, 1, 1), candidates=3)
        assert sorted(order) == [0, 1, 2]
        assert order[1:] == sorted(order[1:])

    def test_same_saturation_any_order(self, xyz):
        ideal = ideal_of(xyz, "x*y^2 - x*z^2", "x^2*y - y*z^2")
        ascending = Ideal(xyz, saturate_product(ideal, range(3), (1, 1, 1)))
        reverse = Ideal(xyz, saturate_product(ideal, range(3), (1, 1, 1), sequence=[2, 1, 0]))
        assert ascending.equals(reverse)


class TestAgreement:
    """随机加权齐次理想上各方法结果一致"""

    def test_weighted_monomials(self):
        monomials = weighted_monomials([1, 2], 4)
        assert sorted(monomials) == [(0, 2), (2, 1), (4, 0)]

    @pytest.mark.parametrize("seed", range(100))
    def test_random_ideal(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 5))
        ring = PolynomialRing([f"Y{i}" for i in range(n)])
        weight = tuple(int(x) for x in rng.integers(1, 3, size=n))
        ideal = random_homogeneous_ideal(
            ring, weight, rng, generators=int(rng.integers(1, 4)), max_degree=3, terms=3
        )
        variables = range(n)

        fast = Ideal(ring, saturate_product(ideal, variables, weight))
        stepwise = Ideal(ring, saturate_stepwise(ideal, variables, weight))
        quotient = saturate_iterated_quotient(ideal, variables)

        assert fast.equals(quotient)
        assert stepwise.equals(quotient)
        assert fast.is_unit() == contains_monomial_rabinowitsch(ideal, variables)

    @pytest.mark.parametrize("seed", range(30))
    def test_quotient_tower(self, seed):
        # I ⊆ I : ∏Y ⊆ I : (∏Y)^∞，单变量时同样成立
        rng = np.random.default_rng(1000 + seed)
        n = int(rng.integers(2, 4))
        ring = PolynomialRing([f"Y{i}" for i in range(n)])
        weight = tuple(int(x) for x in rng.integers(1, 3, size=n))
        ideal = random_homogeneous_ideal(ring, weight, rng, generators=2, max_degree=3, terms=3)

        for variables in (range(n), [0]):
            product = ring.one()
            for i in variables:
                product = product * ring.variable(i)
            quotient = ideal_quotient(ideal, product)
            saturated = saturate_iterated_quotient(ideal, variables)
            assert quotient.contains_ideal(ideal)
            assert saturated.contains_ideal(quotient)
            assert ideal_quotient(saturated, product).equals(saturated)
