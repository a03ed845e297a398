# 精确线性代数
"""
整数/有理矩阵的精确线性代数内核

- 秩与阶梯形: Bareiss 无分数消元 (整数运算，控制系数增长)
- 简化阶梯形、零空间、线性方程求解: 在阶梯形基础上用 Fraction 回代
- IntMatrix: 可序列化的整数矩阵模型 (分次矩阵 Q、诱导矩阵 A_σ 等)
"""

from collections.abc import Sequence
from fractions import Fraction
from math import lcm

from pydantic import BaseModel, ConfigDict, field_validator

from .errors import DimensionMismatch, NoSolution
from .rational import IntVector, Scalar, primitive, to_fraction

Rows = Sequence[Sequence[Scalar]]


class IntMatrix(BaseModel):
    """整数矩阵 (按行存储，不可变)"""

    model_config = ConfigDict(frozen=True)

    rows: tuple[tuple[int, ...], ...]

    @field_validator("rows")
    @classmethod
    def _check_rectangular(cls, rows: tuple[tuple[int, ...], ...]):
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be at least 1")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("matrix rows must have equal length")
        return rows

    @classmethod
    def from_rows(cls, rows: Rows) -> "IntMatrix":
        converted = []
        for row in rows:
            values = [to_fraction(x) for x in row]
            if any(x.denominator != 1 for x in values):
                raise ValueError("IntMatrix entries must be integers")
            converted.append(tuple(int(x) for x in values))
        return cls(rows=tuple(converted))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, j: int) -> IntVector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(rows=tuple(zip(*self.rows)))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{x:>3}" for x in row) for row in self.rows)


def _integer_rows(matrix: Rows) -> list[list[int]]:
    """每行乘以分母的最小公倍数，得到等价的整数行 (不改变行空间)"""
    result = []
    for row in matrix:
        values = [to_fraction(x) for x in row]
        denominator = 1
        for x in values:
            denominator = lcm(denominator, x.denominator)
        result.append([int(x * denominator) for x in values])
    return result


def echelon_form(matrix: Rows) -> tuple[list[list[int]], list[int]]:
    """Bareiss 无分数消元，返回 (整数阶梯形的非零行, 主元列)"""
    rows = _integer_rows(matrix)
    if not rows:
        return [], []
    nrows, ncols = len(rows), len(rows[0])
    pivots: list[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][c]
        for i in range(r + 1, nrows):
            factor = rows[i][c]
            row_i = rows[i]
            row_r = rows[r]
            for j in range(c + 1, ncols):
                row_i[j] = (pivot * row_i[j] - factor * row_r[j]) // previous
            row_i[c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rank(matrix: Rows) -> int:
    """ℚ 上的秩"""
    return len(echelon_form(matrix)[1])


def rref(matrix: Rows) -> tuple[list[list[Fraction]], list[int]]:
    """简化行阶梯形 (只返回非零行) 及主元列"""
    echelon, pivots = echelon_form(matrix)
    reduced = [[Fraction(x) for x in row] for row in echelon]
    for i, c in enumerate(pivots):
        pivot = reduced[i][c]
        reduced[i] = [x / pivot for x in reduced[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            factor = reduced[k][c]
            if factor:
                reduced[k] = [a - factor * b for a, b in zip(reduced[k], reduced[i])]
    return reduced, pivots


def kernel_basis(matrix: Rows, ncols: int | None = None) -> list[IntVector]:
    """右零空间的基 (本原整数向量)，个数 = 列数 − 秩

    Args:
        matrix: 矩阵 (可以没有行，此时需给出 ncols)
        ncols: 列数
    """
    if ncols is None:
        if not matrix:
            raise DimensionMismatch("column count unknown for an empty matrix")
        ncols = len(matrix[0])
    if not matrix:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    reduced, pivots = rref(matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector: list[Fraction] = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for i, c in enumerate(pivots):
            vector[c] = -reduced[i][free]
        basis.append(primitive(vector))
    return basis


def row_space_basis(matrix: Rows) -> list[IntVector]:
    """行空间的规范基: 简化阶梯形各行的本原化 (同一子空间得到同一组向量)"""
    if not matrix:
        return []
    reduced, _ = rref(matrix)
    return [primitive(row) for row in reduced]


def transpose(matrix: Rows) -> list[list[Scalar]]:
    return [list(col) for col in zip(*matrix)]


def matmul(a: Rows, b: Rows) -> list[list[Scalar]]:
    columns = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in columns] for row in a]


def mat_vec(a: Rows, v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(sum((x * y for x, y in zip(row, v, strict=True)), 0) for row in a)


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def solve_right(a: Rows, b: Rows) -> list[list[Fraction]]:
    """求 X 使 X·A = B (左因子)

    化为 Aᵀ·Xᵀ = Bᵀ，对增广矩阵 [Aᵀ | Bᵀ] 做简化阶梯形；
    若出现落在 B 部分的主元，则方程无解。

    Raises:
        NoSolution: B 的行不在 A 的行空间中
    """
    k = len(a)
    if not k:
        raise DimensionMismatch("left factor system needs at least one row")
    ncols = len(a[0])
    if any(len(row) != ncols for row in b):
        raise DimensionMismatch("A and B must have the same column count")
    m = len(b)
    augmented = [
        [a[i][j] for i in range(k)] + [b[i][j] for i in range(m)]
        for j in range(ncols)
    ]
    reduced, pivots = rref(augmented)
    if any(c >= k for c in pivots):
        raise NoSolution("right-hand side is not in the row space of A")
    solution_t = [[Fraction(0)] * m for _ in range(k)]
    for i, c in enumerate(pivots):
        solution_t[c] = reduced[i][k:]
    return [[solution_t[i][j] for i in range(k)] for j in range(m)]


def inverse(a: Rows) -> list[list[Fraction]]:
    """方阵的逆 (不可逆时抛出 NoSolution)"""
    n = len(a)
    if rank(a) != n:
        raise NoSolution("matrix is singular")
    return solve_right(a, identity(n))


def as_integer_rows(matrix: Rows) -> list[list[int]] | None:
    """若所有元素为整数则返回整数矩阵，否则返回 None"""
    result = []
    for row in matrix:
        values = [to_fraction(x) for x in row]
        if any(x.denominator != 1 for x in values):
            return None
        result.append([int(x) for x in values])
    return result


def project_onto_complement(vector: Sequence[Scalar], basis: Rows) -> tuple[Fraction, ...]:
    """向量在 span(basis) 的正交补上的正交投影"""
    v = tuple(to_fraction(x) for x in vector)
    if not basis:
        return v
    gram = matmul(basis, transpose(basis))
    rhs = mat_vec(basis, v)
    coefficients = solve_right(gram, [list(rhs)])[0]
    projected = list(v)
    for c, b in zip(coefficients, basis):
        if c:
            projected = [x - c * y for x, y in zip(projected, b)]
    return tuple(projected)
