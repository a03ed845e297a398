# 有理数与向量工具
"""
精确有理数标量与向量的基础运算

域 𝕂 取为 ℚ，标量统一使用 fractions.Fraction (自动约分、分母为正)。
整数向量的"本原"形式: 整数分量且 gcd 为 1，与原向量同向。
"""

from collections.abc import Iterable, Sequence
from fractions import Fraction
from math import gcd, lcm

Scalar = int | Fraction
IntVector = tuple[int, ...]
QVector = tuple[Fraction, ...]


def to_fraction(value: Scalar | str) -> Fraction:
    """转换为 Fraction，支持 "3/4" 形式的字符串"""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


def as_qvector(values: Iterable[Scalar | str]) -> QVector:
    return tuple(to_fraction(v) for v in values)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """内积 (两向量长度需一致)"""
    return sum((a * b for a, b in zip(u, v, strict=True)), 0)


def primitive(vector: Sequence[Scalar]) -> IntVector:
    """返回同方向的本原整数向量

    零向量原样返回为整数零向量。正数倍缩放保证方向不变，
    因此本原化是幂等的。
    """
    fractions = [to_fraction(x) for x in vector]
    denominator = 1
    for x in fractions:
        denominator = lcm(denominator, x.denominator)
    scaled = [int(x * denominator) for x in fractions]
    divisor = 0
    for x in scaled:
        divisor = gcd(divisor, x)
    if divisor == 0:
        return tuple(scaled)
    return tuple(x // divisor for x in scaled)


def is_zero(vector: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in vector)


def scale(vector: Sequence[Scalar], factor: Scalar) -> tuple[Scalar, ...]:
    return tuple(factor * x for x in vector)


def add(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[Scalar], v: Sequence[Scalar]) -> tuple[Scalar, ...]:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vector_sum(vectors: Iterable[Sequence[Scalar]], dim: int) -> tuple[Scalar, ...]:
    total: tuple[Scalar, ...] = (0,) * dim
    for v in vectors:
        total = add(total, v)
    return total


def format_scalar(value: Scalar) -> str:
    """规范打印: 整数或约分后的 p/q"""
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
