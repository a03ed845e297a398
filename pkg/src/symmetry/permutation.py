# 带符号的变量置换
"""
带符号常数的变量置换 σ(T_j) = c_{σ,j} · T_{σ(j)}

内部下标从 0 开始；文本形式沿用 1 起的轮换记号，如 "(2,3)(5,6)(9,10)"。
复合约定: (στ)(j) = σ(τ(j))，c_{στ,j} = c_{τ,j} · c_{σ,τ(j)}。
"""

import re
from collections.abc import Iterable, Sequence
from fractions import Fraction

from sympy.combinatorics import Permutation
from sympy.polys.rings import PolyElement

from src.core import ParseError, ValidationError
from src.core.rational import Scalar, format_scalar, to_fraction

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, r: int) -> tuple[int, ...]:
    """把 1 起的轮换记号解析为 0 起的像列表

    Raises:
        ParseError: 记号格式错误、下标越界或重复
    """
    stripped = text.strip()
    if stripped in ("", "()"):
        return tuple(range(r))
    cycles: list[list[int]] = []
    pos = 0
    seen: set[int] = set()
    for match in _CYCLE_RE.finditer(stripped):
        gap = stripped[pos:match.start()]
        if gap.strip():
            raise ParseError(f"unexpected text {gap.strip()!r} in cycle notation", 1, pos + 1)
        body = match.group(1).strip()
        if not body:
            pos = match.end()
            continue
        cycle = []
        for part in body.split(","):
            part = part.strip()
            if not part.isdigit():
                raise ParseError(f"invalid point {part!r} in cycle notation", 1, match.start() + 1)
            point = int(part)
            if point < 1 or point > r:
                raise ParseError(f"point {point} out of range 1..{r}", 1, match.start() + 1)
            if point in seen:
                raise ParseError(f"point {point} appears twice", 1, match.start() + 1)
            seen.add(point)
            cycle.append(point - 1)
        cycles.append(cycle)
        pos = match.end()
    if stripped[pos:].strip():
        raise ParseError(f"unexpected text {stripped[pos:].strip()!r} in cycle notation", 1, pos + 1)
    return tuple(Permutation(cycles, size=r).array_form)


class SignedPermutation:
    """带符号常数的置换

    Args:
        images: 像列表，images[j] = σ(j) (0 起)
        signs: 符号常数 c_{σ,j} (非零有理数，缺省全为 1)
    """

    __slots__ = ("images", "signs", "_bit_images")

    def __init__(self, images: Sequence[int], signs: Sequence[Scalar] | None = None):
        r = len(images)
        if sorted(images) != list(range(r)):
            raise ValidationError("Permutation", f"{list(images)} is not a permutation of 0..{r - 1}")
        self.images: tuple[int, ...] = tuple(images)
        values = tuple(to_fraction(c) for c in signs) if signs is not None else (Fraction(1),) * r
        if len(values) != r:
            raise ValidationError("Permutation", f"sign vector has length {len(values)}, expected {r}")
        if any(c == 0 for c in values):
            raise ValidationError("Permutation", "sign constants must be nonzero")
        self.signs: tuple[Fraction, ...] = values
        self._bit_images = tuple(1 << i for i in self.images)

    @classmethod
    def identity(cls, r: int) -> "SignedPermutation":
        return cls(tuple(range(r)))

    @classmethod
    def parse(cls, cycles: str, r: int, signs: Sequence[Scalar] | None = None) -> "SignedPermutation":
        return cls(parse_cycles(cycles, r), signs)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """复合 self ∘ other"""
        images = tuple(self.images[other.images[j]] for j in range(self.degree))
        signs = tuple(other.signs[j] * self.signs[other.images[j]] for j in range(self.degree))
        return SignedPermutation(images, signs)

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.degree
        signs = [Fraction(1)] * self.degree
        for j, k in enumerate(self.images):
            images[k] = j
            signs[k] = 1 / self.signs[j]
        return SignedPermutation(images, signs)

    def is_identity(self) -> bool:
        return all(i == j for j, i in enumerate(self.images)) and all(c == 1 for c in self.signs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SignedPermutation) and self.images == other.images and self.signs == other.signs

    def __hash__(self) -> int:
        return hash((self.images, self.signs))

    def __getstate__(self) -> tuple:
        return (self.images, self.signs)

    def __setstate__(self, state: tuple) -> None:
        self.images, self.signs = state
        self._bit_images = tuple(1 << i for i in self.images)

    def cycles(self) -> str:
        """1 起的轮换记号 (恒等置换为 "()")"""
        cyclic = Permutation(list(self.images)).cyclic_form
        if not cyclic:
            return "()"
        return "".join("(" + ",".join(str(i + 1) for i in cycle) + ")" for cycle in cyclic)

    def __repr__(self) -> str:
        if all(c == 1 for c in self.signs):
            return f"SignedPermutation({self.cycles()})"
        return f"SignedPermutation({self.cycles()}, signs=[{', '.join(format_scalar(c) for c in self.signs)}])"

    # ------------------------------------------------------------------
    # 作用
    # ------------------------------------------------------------------

    def act_on_subset(self, face: Iterable[int]) -> frozenset[int]:
        """σ(γ₀) = {σ(j) : j ∈ γ₀} (忽略符号)"""
        return frozenset(self.images[j] for j in face)

    def act_on_mask(self, mask: int) -> int:
        """对位集合 (第 j 位表示下标 j) 的作用"""
        result = 0
        bits = self._bit_images
        j = 0
        while mask:
            if mask & 1:
                result |= bits[j]
            mask >>= 1
            j += 1
        return result

    def act_on_vector(self, x: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """ℚ^r 上的坐标置换: (σx)_{σ(j)} = x_j"""
        result: list[Scalar] = [0] * self.degree
        for j, value in enumerate(x):
            result[self.images[j]] = value
        return tuple(result)

    def act_on_polynomial(self, f: PolyElement) -> PolyElement:
        """代入 T_j ↦ c_{σ,j} T_{σ(j)}"""
        ring = f.ring
        terms = []
        for monom, coeff in f.items():
            image = [0] * self.degree
            factor = Fraction(1)
            for j, e in enumerate(monom):
                if e:
                    image[self.images[j]] = e
                    factor *= self.signs[j] ** e
            terms.append((tuple(image), coeff * ring.domain(factor.numerator, factor.denominator)))
        return ring.from_terms(terms)
