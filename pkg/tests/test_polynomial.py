# 多项式引擎测试
"""
测试解析器、单项式序、Buchberger 算法
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import IntMatrix, NonPositiveWeight, ParseError
from src.polynomial import (
    Ideal,
    PolynomialRing,
    WeightedOrdering,
    buchberger,
    compare,
    format_polynomial,
    is_groebner,
    is_homogeneous,
    is_reduced,
    normal_form,
    parse_polynomial,
    parse_polynomials,
    restrict_to_face,
    spoly,
    standard_ordering,
    strip_variables,
    t_variables,
    tokenize,
    variable_names,
)


@pytest.fixture
def xyz():
    return PolynomialRing(["x", "y", "z"])


class TestParser:
    """解析器测试"""

    def test_t_variables(self):
        ring = PolynomialRing(t_variables(4))
        f = parse_polynomial("T(1)*T(3) - T(2)*T(4)", ring)
        assert len(f) == 2
        assert f.coeff(ring.variable(0) * ring.variable(2)) == 1

    def test_spaces_inside_t_variable(self):
        ring = PolynomialRing(t_variables(2))
        assert parse_polynomial("T( 1 )^2", ring) == parse_polynomial("T(1)^2", ring)

    def test_parentheses_and_powers(self, xyz):
        f = parse_polynomial("(x + y)^2 - 2*x*y", xyz)
        assert f == parse_polynomial("x^2 + y^2", xyz)

    def test_unary_minus(self, xyz):
        assert parse_polynomial("-x + y", xyz) == -parse_polynomial("x - y", xyz)

    def test_double_caret_is_error(self):
        ring = PolynomialRing(t_variables(1))
        with pytest.raises(ParseError) as info:
            parse_polynomial("T(1)^^2", ring)
        assert info.value.col == 6

    def test_implicit_multiplication_is_error(self, xyz):
        with pytest.raises(ParseError):
            parse_polynomial("2x", xyz)
        with pytest.raises(ParseError):
            parse_polynomial("x y", xyz)

    def test_unknown_variable(self, xyz):
        with pytest.raises(ParseError) as info:
            parse_polynomial("x + w", xyz)
        assert info.value.col == 5

    def test_error_line(self, xyz):
        with pytest.raises(ParseError) as info:
            parse_polynomial("x +\n  * y", xyz)
        assert info.value.line == 2

    def test_empty_input(self, xyz):
        with pytest.raises(ParseError):
            parse_polynomial("   ", xyz)

    def test_variable_names(self):
        assert variable_names("x12*z134 - T(3)") == ["x12", "z134", "T(3)"]

    def test_tokenize_ends_with_end(self):
        assert tokenize("x")[-1].kind == "end"

    def test_format_round_trip(self, xyz):
        f = parse_polynomial("3*x^2*y - z^3 + 7", xyz)
        assert parse_polynomial(format_polynomial(f, xyz.names), xyz) == f


class TestOrdering:
    """单项式序测试"""

    def test_degree_first(self):
        order = standard_ordering(3)
        assert compare((0, 0, 2), (1, 0, 0), order) == 1

    def test_reverse_lex_tiebreak(self):
        order = standard_ordering(3)
        # 同次数时末变量指数小者为大
        assert compare((0, 2, 0), (1, 0, 1), order) == 1

    def test_with_last_moves_variable(self):
        order = standard_ordering(3).with_last(0)
        assert order.tiebreak_sequence == (1, 2, 0)
        assert compare((0, 1, 1), (1, 1, 0), order) == 1

    def test_weight_counts(self):
        order = WeightedOrdering([1, 3])
        assert compare((0, 1), (2, 0), order) == 1

    def test_rejects_non_positive_weight(self):
        with pytest.raises(NonPositiveWeight):
            WeightedOrdering([1, 0, 2])

    def test_bad_tiebreak(self):
        with pytest.raises(ValueError):
            WeightedOrdering([1, 1], [0, 0])

    @given(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.tuples(st.integers(0, 3), st.integers(0, 3)))
    def test_total(self, m1, m2):
        order = WeightedOrdering([2, 1])
        assert compare(m1, m2, order) == -compare(m2, m1, order)
        assert (compare(m1, m2, order) == 0) == (m1 == m2)


class TestBuchberger:
    """Buchberger 算法测试"""

    def test_spoly_cancels_leads(self, xyz):
        f, g = parse_polynomials(["x*y - z^2", "y^2 - x*z"], xyz)
        s = spoly(f, g)
        assert s.LM != f.LM and s.LM != g.LM

    def test_twisted_cubic(self, xyz):
        gens = parse_polynomials(["x*z - y^2", "x^3 - y*z", "x^2*y - z^2"], xyz)
        basis = buchberger(gens)
        assert is_groebner(basis)
        assert is_reduced(basis)
        for g in gens:
            assert not normal_form(g, basis)

    def test_unit_ideal(self, xyz):
        basis = buchberger(parse_polynomials(["x - 1", "x"], xyz))
        assert len(basis) == 1 and basis[0] == 1

    def test_empty(self):
        assert buchberger([]) == []

    def test_reduce_hook_applied(self, xyz):
        f = parse_polynomial("x*y - x*z", xyz)
        basis = buchberger([f], reduce_hook=lambda h: strip_variables(h, [0]))
        assert basis == [parse_polynomial("y - z", xyz)]

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(
            st.dictionaries(
                st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
                st.integers(-3, 3).filter(bool),
                min_size=1,
                max_size=3,
            ),
            min_size=1,
            max_size=3,
        )
    )
    def test_result_is_groebner(self, term_maps):
        ring = PolynomialRing(["a", "b", "c"])
        basis = buchberger([ring.from_terms(t) for t in term_maps])
        assert is_groebner(basis)
        assert is_reduced(basis)


class TestIdeal:
    """理想测试"""

    def test_contains(self, xyz):
        ideal = Ideal(xyz, parse_polynomials(["x - y", "y - z"], xyz))
        assert ideal.contains(parse_polynomial("x - z", xyz))
        assert not ideal.contains(parse_polynomial("x", xyz))

    def test_equals(self, xyz):
        a = Ideal(xyz, parse_polynomials(["x - y", "y - z"], xyz))
        b = Ideal(xyz, parse_polynomials(["x - z", "x - y"], xyz))
        assert a.equals(b)

    def test_zero_generators_dropped(self, xyz):
        ideal = Ideal(xyz, [parse_polynomial("x - x", xyz)])
        assert ideal.is_zero()

    def test_restrict_to_face(self, xyz):
        ideal = Ideal(xyz, parse_polynomials(["x*y - z^2", "x - y"], xyz))
        restricted = restrict_to_face(ideal, [0, 1])
        assert [xyz.format(g) for g in restricted.generators] == ["x*y", "x - y"]

    def test_homogeneity(self, cube):
        assert is_homogeneous(cube.ideal, cube.grading)
        other = IntMatrix.from_rows([[1, 0, 0, 0], [0, 1, 1, 1]])
        assert not is_homogeneous(cube.ideal, other)
