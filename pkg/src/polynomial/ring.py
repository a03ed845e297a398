# 多项式环与理想
"""
ℚ 上的多元多项式环与理想

多项式直接使用 sympy 的 PolyElement (稀疏字典: 指数元组 → 有理系数)。
同一组变量在不同单项式序下对应不同的 sympy 环，这里按序缓存；
理想的 Gröbner 基同样按序缓存。
"""

import threading
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder
from sympy.polys.rings import PolyElement, PolyRing

from src.core import IntMatrix, format_scalar
from src.utils import get_logger

from .ordering import Monomial, WeightedOrdering, standard_ordering

logger = get_logger(__name__)

TermMap = Mapping[Monomial, Fraction | int]


def to_fraction_coeff(coeff) -> Fraction:
    """sympy 域元素 → Fraction"""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def to_domain_coeff(value: Fraction | int):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


class PolynomialRing:
    """带变量名的多项式环 ℚ[T_1,…,T_r]

    Args:
        names: 变量名序列，如 ["T(1)", "T(2)"] 或 ["x12", "z134"]
    """

    def __init__(self, names: Sequence[str]):
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        self.names: tuple[str, ...] = tuple(names)
        self.symbols = tuple(Symbol(name) for name in self.names)
        self._rings: dict[MonomialOrder, PolyRing] = {}
        self._lock = threading.Lock()
        self.default_ordering = standard_ordering(len(self.names)) if self.names else None

    @property
    def ngens(self) -> int:
        return len(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolynomialRing) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"PolynomialRing({', '.join(self.names)})"

    def __getstate__(self) -> dict:
        return {"names": self.names}

    def __setstate__(self, state: dict) -> None:
        self.__init__(state["names"])

    def sympy_ring(self, ordering: MonomialOrder | None = None) -> PolyRing:
        """给定单项式序下的 sympy 环 (缓存)"""
        ordering = ordering or self.default_ordering
        with self._lock:
            ring = self._rings.get(ordering)
            if ring is None:
                ring = PolyRing(self.symbols, QQ, ordering)
                self._rings[ordering] = ring
            return ring

    def index(self, name: str) -> int:
        return self.names.index(name)

    def from_terms(self, terms: TermMap, ordering: MonomialOrder | None = None) -> PolyElement:
        ring = self.sympy_ring(ordering)
        return ring.from_dict({m: to_domain_coeff(c) for m, c in terms.items() if c})

    def variable(self, i: int, ordering: MonomialOrder | None = None) -> PolyElement:
        return self.sympy_ring(ordering).gens[i]

    def one(self, ordering: MonomialOrder | None = None) -> PolyElement:
        return self.sympy_ring(ordering).one

    def convert(self, f: PolyElement, ordering: MonomialOrder | None = None) -> PolyElement:
        """把多项式换到本环的另一个单项式序下"""
        return f.set_ring(self.sympy_ring(ordering))

    def subring(self, indices: Sequence[int]) -> "PolynomialRing":
        return PolynomialRing([self.names[i] for i in indices])

    def extended(self, name: str) -> "PolynomialRing":
        """追加一个新变量 (放在最后)"""
        candidate = name
        while candidate in self.names:
            candidate = f"_{candidate}"
        return PolynomialRing(self.names + (candidate,))

    def format(self, f: PolyElement) -> str:
        return format_polynomial(f, self.names)


def format_polynomial(f: PolyElement, names: Sequence[str]) -> str:
    """规范打印: 按环的当前序降序排列各项，系数为约分分数"""
    if not f:
        return "0"
    pieces: list[str] = []
    for monom, coeff in f.terms():
        c = to_fraction_coeff(coeff)
        factors = []
        for name, e in zip(names, monom):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        magnitude = abs(c)
        if factors:
            body = "*".join(factors)
            text = body if magnitude == 1 else f"{format_scalar(magnitude)}*{body}"
        else:
            text = format_scalar(magnitude)
        if not pieces:
            pieces.append(f"-{text}" if c < 0 else text)
        else:
            pieces.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(pieces)


def monomial_degree(monomial: Monomial, grading: IntMatrix) -> tuple[int, ...]:
    """单项式关于分次矩阵 Q 的次数 Σ e_i q_i"""
    return tuple(sum(row[i] * e for i, e in enumerate(monomial) if e) for row in grading.rows)


def polynomial_degrees(f: PolyElement, grading: IntMatrix) -> set[tuple[int, ...]]:
    return {monomial_degree(m, grading) for m in f.keys()}


def strip_variables(f: PolyElement, indices: Iterable[int]) -> PolyElement:
    """除去给定变量的最大可能幂次: f / (Y_1^{α_1}⋯Y_m^{α_m})"""
    if not f:
        return f
    monoms = list(f.keys())
    exponents = [0] * len(monoms[0])
    changed = False
    for i in indices:
        alpha = min(m[i] for m in monoms)
        if alpha:
            exponents[i] = alpha
            changed = True
    if not changed:
        return f
    return f.new([(tuple(a - b for a, b in zip(m, exponents)), c) for m, c in f.items()])


def power_of_variable(f: PolyElement, index: int) -> int:
    """最大的 i 使 Y_index^i 整除 f"""
    if not f:
        return 0
    return min(m[index] for m in f.keys())


class Ideal:
    """多项式理想 (生成元 + 按序缓存的 Gröbner 基)

    生成元不可变；零生成元在构造时丢弃。

    Args:
        ring: 所在多项式环
        generators: 生成元 (任意序下的 PolyElement 或指数字典)
    """

    def __init__(self, ring: PolynomialRing, generators: Iterable[PolyElement | TermMap]):
        self.ring = ring
        converted = []
        for g in generators:
            if isinstance(g, PolyElement):
                p = ring.convert(g)
            else:
                p = ring.from_terms(g)
            if p:
                converted.append(p)
        self._generators: tuple[PolyElement, ...] = tuple(converted)
        self._bases: dict[MonomialOrder, list[PolyElement]] = {}
        self._lock = threading.Lock()

    def __getstate__(self) -> dict:
        return {
            "ring": self.ring,
            "terms": [{m: to_fraction_coeff(c) for m, c in g.items()} for g in self._generators],
        }

    def __setstate__(self, state: dict) -> None:
        self.__init__(state["ring"], state["terms"])

    @property
    def generators(self) -> tuple[PolyElement, ...]:
        return self._generators

    def __len__(self) -> int:
        return len(self._generators)

    def __repr__(self) -> str:
        return f"Ideal<{', '.join(self.ring.format(g) for g in self._generators)}>"

    def is_zero(self) -> bool:
        return not self._generators

    def generators_in(self, ordering: MonomialOrder | None = None) -> list[PolyElement]:
        return [self.ring.convert(g, ordering) for g in self._generators]

    def groebner_basis(self, ordering: MonomialOrder | None = None) -> list[PolyElement]:
        """约化 Gröbner 基 (按序缓存，首次计算后发布)"""
        from .groebner import buchberger

        ordering = ordering or self.ring.default_ordering
        with self._lock:
            cached = self._bases.get(ordering)
        if cached is not None:
            return cached
        basis = buchberger(self.generators_in(ordering))
        with self._lock:
            return self._bases.setdefault(ordering, basis)

    def is_unit(self) -> bool:
        basis = self.groebner_basis()
        return len(basis) == 1 and basis[0].is_ground and bool(basis[0])

    def contains(self, f: PolyElement) -> bool:
        """理想成员判定: f 关于 Gröbner 基的正规形为 0"""
        f = self.ring.convert(f)
        if not f:
            return True
        if self.is_zero():
            return False
        return not f.rem(self.groebner_basis())

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        """理想相等 (双向正规形成员判定)"""
        return self.contains_ideal(other) and other.contains_ideal(self)

    def restrict_to_face(self, face: Iterable[int]) -> "Ideal":
        return restrict_to_face(self, face)

    def to_subring(self, indices: Sequence[int]) -> "Ideal":
        """把只含 indices 变量的理想搬到子环 ℚ[T_indices]"""
        subring = self.ring.subring(indices)
        terms = []
        for g in self._generators:
            mapped = {}
            for m, c in g.items():
                if any(e for i, e in enumerate(m) if i not in indices):
                    raise ValueError("generator uses variables outside the subring")
                mapped[tuple(m[i] for i in indices)] = to_fraction_coeff(c)
            terms.append(mapped)
        return Ideal(subring, terms)

    def format_generators(self) -> list[str]:
        return [self.ring.format(g) for g in self._generators]


def restrict_to_face(ideal: Ideal, face: Iterable[int]) -> Ideal:
    """把 face 之外的变量置零，丢弃变为零的生成元"""
    keep = set(face)
    restricted = []
    for g in ideal.generators:
        terms = {
            m: to_fraction_coeff(c)
            for m, c in g.items()
            if all(e == 0 or i in keep for i, e in enumerate(m))
        }
        if terms:
            restricted.append(terms)
    return Ideal(ideal.ring, restricted)


def is_homogeneous(ideal: Ideal, grading: IntMatrix) -> bool:
    """每个生成元的所有单项式 Q-次数相同"""
    if grading.ncols != ideal.ring.ngens:
        raise ValueError("grading matrix column count differs from the variable count")
    return all(len(polynomial_degrees(g, grading)) == 1 for g in ideal.generators)


def is_weighted_homogeneous(polys: Iterable[PolyElement], weight: Sequence[int]) -> bool:
    for f in polys:
        degrees = {sum(w * e for w, e in zip(weight, m)) for m in f.keys()}
        if len(degrees) > 1:
            return False
    return True


def default_ordering_for(ring: PolynomialRing) -> WeightedOrdering:
    return ring.default_ordering
