# 对称群
"""
对称群: 生成元闭包、诱导线性作用 A_σ、子集与锥上的轨道

A_σ 满足 A_σ q_j = q_{σ(j)}，于是 A_{στ} = A_σ A_τ。
面与锥上的作用忽略符号常数；只有理想上的作用使用符号。
"""

from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from sympy.combinatorics import PermutationGroup
from sympy.combinatorics import Permutation as SymPermutation

from src.cones import Cone
from src.core import BoundExceeded, IntMatrix, NoSolution, NotASymmetry, solve_right
from src.polynomial import Ideal
from src.utils import get_logger

from .permutation import SignedPermutation

logger = get_logger(__name__)


def induced_matrix(sigma: SignedPermutation, grading: IntMatrix) -> IntMatrix:
    """求整数矩阵 A_σ 使 A_σ·Q = Q·P_σ (第 j 列为 q_{σ(j)})

    Raises:
        NotASymmetry: σ(ker Q) ⊄ ker Q，或 A_σ 有非整数元素
    """
    if sigma.degree != grading.ncols:
        raise NotASymmetry(f"permutation degree {sigma.degree} differs from {grading.ncols} columns")
    target = [[row[sigma(j)] for j in range(grading.ncols)] for row in grading.rows]
    try:
        solution = solve_right(grading.rows, target)
    except NoSolution as exc:
        raise NotASymmetry(f"{sigma.cycles()} does not preserve ker(Q)") from exc
    if any(x.denominator != 1 for row in solution for x in row):
        raise NotASymmetry(f"{sigma.cycles()} induces a non-integral matrix")
    return IntMatrix.from_rows(solution)


def group_closure(generators: Sequence[SignedPermutation], bound: int = 10_000) -> list[SignedPermutation]:
    """生成元的闭包 (广度优先，恒等元在首位)

    Raises:
        BoundExceeded: 元素个数超过 bound
    """
    if not generators:
        raise ValueError("at least one generator is needed to fix the degree")
    r = generators[0].degree
    identity = SignedPermutation.identity(r)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = g * current
            if product not in seen:
                seen.add(product)
                elements.append(product)
                if len(elements) > bound:
                    raise BoundExceeded(f"group has more than {bound} elements")
                queue.append(product)
    return elements


class SymmetryGroup:
    """作用在变量上的有限对称群

    Args:
        generators: 生成元
        grading: 分次矩阵 Q (给出时计算每个元素的 A_σ 并校验)
        bound: 元素个数上限
    """

    def __init__(
        self,
        generators: Sequence[SignedPermutation],
        grading: IntMatrix | None = None,
        bound: int = 10_000,
    ):
        self.generators = list(generators)
        self.elements = group_closure(self.generators, bound)
        self.degree = self.elements[0].degree
        self.grading = grading
        self.matrices: list[IntMatrix] | None = None
        if grading is not None:
            self.matrices = [induced_matrix(g, grading) for g in self.elements]
        logger.debug(f"symmetry group closed with {len(self.elements)} elements")

    @classmethod
    def trivial(cls, r: int, grading: IntMatrix | None = None) -> "SymmetryGroup":
        return cls([SignedPermutation.identity(r)], grading)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[SignedPermutation]:
        return iter(self.elements)

    def order_check(self) -> int:
        """用 sympy 的置换群独立核对阶 (仅置换部分)"""
        perms = [SymPermutation(list(g.images)) for g in self.generators]
        return int(PermutationGroup(perms).order())

    def matrix(self, index: int) -> IntMatrix:
        if self.matrices is None:
            raise NotASymmetry("group has no grading attached")
        return self.matrices[index]

    def index_of(self, sigma: SignedPermutation) -> int:
        return self.elements.index(sigma)

    # ------------------------------------------------------------------
    # 子集轨道
    # ------------------------------------------------------------------

    def orbit_of_mask(self, mask: int) -> set[int]:
        return {g.act_on_mask(mask) for g in self.elements}

    def orbit_of_subset(self, face: Iterable[int]) -> set[frozenset[int]]:
        face = list(face)
        return {g.act_on_subset(face) for g in self.elements}

    def stabilizer_size(self, mask: int) -> int:
        return sum(1 for g in self.elements if g.act_on_mask(mask) == mask)


def mask_of(face: Iterable[int]) -> int:
    mask = 0
    for i in face:
        mask |= 1 << i
    return mask


def face_of(mask: int) -> tuple[int, ...]:
    face = []
    i = 0
    while mask:
        if mask & 1:
            face.append(i)
        mask >>= 1
        i += 1
    return tuple(face)


def subset_orbit_representatives(group: SymmetryGroup, r: int | None = None) -> list[tuple[int, int]]:
    """全部 2^r 个子集的轨道代表 (整数值最小的位集合) 与轨道长度

    按位集合的整数值递增枚举；遇到未标记的子集即为其轨道的最小元。
    """
    r = group.degree if r is None else r
    total = 1 << r
    marked = bytearray(total)
    result: list[tuple[int, int]] = []
    for mask in range(total):
        if marked[mask]:
            continue
        orbit = group.orbit_of_mask(mask)
        for image in orbit:
            marked[image] = 1
        result.append((mask, len(orbit)))
    return result


def iter_subset_orbit_representatives(group: SymmetryGroup, r: int | None = None) -> Iterator[tuple[int, int]]:
    """流式版本: 不保存标记表，逐个检查子集是否为其轨道最小元"""
    r = group.degree if r is None else r
    for mask in range(1 << r):
        orbit = group.orbit_of_mask(mask)
        if min(orbit) == mask:
            yield mask, len(orbit)


def act_on_ideal(sigma: SignedPermutation, ideal: Ideal) -> Ideal:
    """对每个生成元做代入 T_j ↦ c_{σ,j} T_{σ(j)}"""
    return Ideal(ideal.ring, [sigma.act_on_polynomial(g) for g in ideal.generators])


def verify_ideal_invariance(group: SymmetryGroup | Sequence[SignedPermutation], ideal: Ideal) -> bool:
    """G·𝔞 = 𝔞: 每个理想生成元在每个群生成元下的像都属于 𝔞

    只检查群生成元即可: σ 作用是环自同构，σ·𝔞 ⊆ 𝔞 对生成元成立则对其乘积也成立；
    有限群中 σ⁻¹ 是 σ 的幂，于是 σ·𝔞 ⊆ 𝔞 推出 σ·𝔞 = 𝔞。
    """
    generators = group.generators if isinstance(group, SymmetryGroup) else list(group)
    for sigma in generators:
        for g in ideal.generators:
            if not ideal.contains(sigma.act_on_polynomial(g)):
                logger.debug(f"{sigma.cycles()} moves {ideal.ring.format(g)} out of the ideal")
                return False
    return True


def act_on_cone(matrix: IntMatrix | Sequence[Sequence[int]], cone: Cone) -> Cone:
    """A 作用在锥上 (射线乘 A，不等式乘 A^{-T})"""
    return cone.act(matrix)


def orbit_of_cone(group: SymmetryGroup, cone: Cone) -> dict[bytes, Cone]:
    """锥在 G 下的轨道，按规范键去重"""
    if group.matrices is None:
        raise NotASymmetry("group has no grading attached")
    orbit: dict[bytes, Cone] = {}
    for matrix in group.matrices:
        image = cone.act(matrix)
        orbit.setdefault(image.canonical_key(), image)
    return orbit
