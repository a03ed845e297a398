# 精确线性代数测试
"""
测试有理数工具、整数矩阵与异常层次
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core import (
    CheckpointError,
    ComputationError,
    DatasetError,
    DimensionMismatch,
    GitFanError,
    IntMatrix,
    NoSolution,
    ParseError,
    ValidationError,
    dot,
    format_scalar,
    inverse,
    kernel_basis,
    mat_vec,
    matmul,
    primitive,
    rank,
    row_space_basis,
    rref,
    solve_right,
)

small_ints = st.integers(min_value=-6, max_value=6)


def matrices(max_rows: int = 4, max_cols: int = 5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


class TestRational:
    """标量与向量工具测试"""

    def test_primitive_clears_denominators(self):
        assert primitive([Fraction(1, 2), Fraction(3, 4)]) == (2, 3)

    def test_primitive_keeps_direction(self):
        assert primitive([-4, 6, 0]) == (-2, 3, 0)

    def test_primitive_zero(self):
        assert primitive([0, 0]) == (0, 0)

    @given(st.lists(small_ints, min_size=1, max_size=5))
    def test_primitive_idempotent(self, vector):
        once = primitive(vector)
        assert primitive(once) == once

    def test_dot(self):
        assert dot([1, 2, 3], [4, -5, 6]) == 12

    def test_dot_length_mismatch(self):
        with pytest.raises(ValueError):
            dot([1, 2], [1, 2, 3])

    def test_format_scalar(self):
        assert format_scalar(Fraction(6, 4)) == "3/2"
        assert format_scalar(Fraction(4, 2)) == "2"


class TestIntMatrix:
    """整数矩阵模型测试"""

    def test_from_rows(self):
        m = IntMatrix.from_rows([[1, -1, -1, 1], [1, 1, -1, -1]])
        assert (m.nrows, m.ncols) == (2, 4)
        assert m.column(1) == (-1, 1)
        assert m.transpose().rows[0] == (1, 1)

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_rejects_fractions(self):
        with pytest.raises(ValueError):
            IntMatrix.from_rows([[Fraction(1, 2)]])

    def test_frozen(self):
        m = IntMatrix.from_rows([[1]])
        with pytest.raises(Exception):
            m.rows = ((2,),)


class TestLinearAlgebra:
    """秩、零空间、求解测试"""

    def test_rank_square(self):
        assert rank([[1, -1, -1, 1], [1, 1, -1, -1]]) == 2
        assert rank([[1, 2], [2, 4]]) == 1

    def test_rref(self):
        reduced, pivots = rref([[2, 4], [1, 3]])
        assert pivots == [0, 1]
        assert reduced == [[1, 0], [0, 1]]

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_rank_nullity(self, rows):
        ncols = len(rows[0])
        kernel = kernel_basis(rows, ncols)
        assert rank(rows) + len(kernel) == ncols
        for vector in kernel:
            assert all(x == 0 for x in mat_vec(rows, vector))

    def test_kernel_of_empty_matrix(self):
        assert kernel_basis([], 2) == [(1, 0), (0, 1)]

    def test_kernel_needs_column_count(self):
        with pytest.raises(DimensionMismatch):
            kernel_basis([])

    def test_row_space_basis_canonical(self):
        assert row_space_basis([[1, 1], [2, 2]]) == row_space_basis([[3, 3]])

    def test_solve_right(self):
        a = [[1, 0, 1], [0, 1, 1]]
        x = solve_right(a, [[2, 3, 5]])
        assert x == [[2, 3]]

    def test_solve_right_no_solution(self):
        with pytest.raises(NoSolution):
            solve_right([[1, 0, 0]], [[0, 1, 0]])

    def test_inverse(self):
        a = [[2, 1], [1, 1]]
        assert matmul(a, inverse(a)) == [[1, 0], [0, 1]]

    def test_inverse_singular(self):
        with pytest.raises(NoSolution):
            inverse([[1, 2], [2, 4]])


class TestErrors:
    """异常层次测试"""

    def test_hierarchy(self):
        assert issubclass(ParseError, ValidationError)
        assert issubclass(DatasetError, ValidationError)
        assert issubclass(NoSolution, ComputationError)
        assert issubclass(CheckpointError, GitFanError)
        assert not issubclass(CheckpointError, ValidationError)

    def test_parse_error_position(self):
        error = ParseError("bad token", 3, 7)
        assert (error.line, error.col) == (3, 7)
        assert error.kind == "Parse"
        assert "line 3, col 7" in str(error)
