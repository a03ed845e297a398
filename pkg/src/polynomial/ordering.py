# 单项式序
"""
带权次数序 + 负反字典序决胜

比较规则: 先比较 w-加权次数 (大者为大)；次数相同时，沿决胜序列
从最后一个变量往前找第一个指数不同的位置，指数较小者为大。
作为 sympy MonomialOrder 的子类，可直接用作 sympy 多项式环的序。
"""

from collections.abc import Sequence

from sympy.polys.orderings import MonomialOrder

from src.core import NonPositiveWeight, primitive, to_fraction
from src.core.rational import Scalar

Monomial = tuple[int, ...]


class WeightedOrdering(MonomialOrder):
    """w-加权次数序，负反字典序决胜 (全局序，要求权重全部为正)

    Args:
        weight: 权重向量，分量全部为正 (有理数会按比例化为本原整数)
        tiebreak_sequence: 变量下标的排列 (0 起)，越靠后的变量越"小"
    """

    alias = "wnrs"
    is_global = True

    def __init__(self, weight: Sequence[Scalar], tiebreak_sequence: Sequence[int] | None = None):
        values = [to_fraction(x) for x in weight]
        if not values or any(x <= 0 for x in values):
            raise NonPositiveWeight(f"weight must be strictly positive, got {list(weight)}")
        self.weight: tuple[int, ...] = primitive(values)
        n = len(self.weight)
        sequence = tuple(range(n)) if tiebreak_sequence is None else tuple(tiebreak_sequence)
        if sorted(sequence) != list(range(n)):
            raise ValueError(f"tiebreak sequence {sequence} is not a permutation of 0..{n - 1}")
        self.tiebreak_sequence = sequence
        self._scan = tuple(reversed(sequence))

    def __call__(self, monomial: Monomial) -> tuple:
        degree = 0
        for w, e in zip(self.weight, monomial):
            degree += w * e
        return (degree, tuple(-monomial[i] for i in self._scan))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, WeightedOrdering)
            and self.weight == other.weight
            and self.tiebreak_sequence == other.tiebreak_sequence
        )

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.weight, self.tiebreak_sequence))

    def __repr__(self) -> str:
        return f"WeightedOrdering(weight={self.weight}, tiebreak={self.tiebreak_sequence})"

    def __str__(self) -> str:
        return self.alias

    @property
    def nvars(self) -> int:
        return len(self.weight)

    def with_last(self, index: int) -> "WeightedOrdering":
        """把变量 index 移到决胜序列末尾 (该变量成为最"小"的变量)"""
        sequence = [i for i in self.tiebreak_sequence if i != index] + [index]
        return WeightedOrdering(self.weight, sequence)

    def weighted_degree(self, monomial: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weight, monomial))


class EliminationOrdering(MonomialOrder):
    """块消元序: 先比较被消元变量的总次数，再按 WeightedOrdering 比较

    用于理想求交 (t·I + (1−t)·J 消去 t)。
    """

    alias = "elim"
    is_global = True

    def __init__(self, eliminate: Sequence[int], rest: WeightedOrdering):
        self.eliminate = tuple(sorted(eliminate))
        self.rest = rest

    def __call__(self, monomial: Monomial) -> tuple:
        return (sum(monomial[i] for i in self.eliminate), self.rest(monomial))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EliminationOrdering)
            and self.eliminate == other.eliminate
            and self.rest == other.rest
        )

    def __hash__(self) -> int:
        return hash((self.__class__.__name__, self.eliminate, self.rest))

    def __repr__(self) -> str:
        return f"EliminationOrdering(eliminate={self.eliminate}, rest={self.rest!r})"

    def __str__(self) -> str:
        return self.alias


def standard_ordering(nvars: int) -> WeightedOrdering:
    """标准权重 (1,…,1) 与升序决胜序列"""
    return WeightedOrdering((1,) * nvars)


def compare(m1: Monomial, m2: Monomial, ordering: MonomialOrder) -> int:
    """比较两个单项式: 返回 1 (m1 > m2)、0 (相等) 或 -1"""
    k1, k2 = ordering(m1), ordering(m2)
    if k1 == k2:
        return 0
    return 1 if k1 > k2 else -1
