# a-面判定
"""
正象限的面 γ₀ 是 𝔞-面，当且仅当 1 ∉ 𝔞_{γ₀} : (∏_{i∈γ₀} T_i)^∞

𝔞_{γ₀} 是把 γ₀ 以外的变量置零后的理想。四种判定方法结果一致:
- fast: 在变量乘积处饱和 (需要严格正的齐次权重)
- stepwise: 逐变量饱和
- sat: 反复理想商
- rabinowitsch: 判定 ∏ T_i ∈ √𝔞_{γ₀}
"""

from collections.abc import Iterable, Sequence
from enum import Enum

from src.cones import Cone
from src.core import IntMatrix, ValidationError, kernel_basis
from src.utils import get_logger

from .ring import Ideal, is_weighted_homogeneous
from .saturation import (
    choose_saturation_order,
    contains_monomial_rabinowitsch,
    saturate_iterated_quotient,
    saturate_product,
    saturate_stepwise,
)

logger = get_logger(__name__)


class AFaceMethod(str, Enum):
    """a-面判定方法"""
    FAST = "fast"
    STEPWISE = "stepwise"
    SAT = "sat"
    RABINOWITSCH = "rabinowitsch"


def restricted_grading(grading: IntMatrix, face: Sequence[int]) -> list[list[int]]:
    """Q 中属于 face 的列"""
    return [[row[i] for i in face] for row in grading.rows]


def positive_weight(ideal: Ideal, grading: IntMatrix | None = None, face: Sequence[int] | None = None) -> tuple[int, ...] | None:
    """为 Q_{γ₀}-齐次理想找一个严格正的齐次权重

    先试 (1,…,1)；否则取锥 {x ≥ 0} ∩ rowspace(Q_{γ₀}) 的相对内点，
    其分量全部为正时可用。都不行返回 None。
    """
    n = ideal.ring.ngens
    ones = (1,) * n
    if is_weighted_homogeneous(ideal.generators, ones):
        return ones
    if grading is None:
        return None
    columns = list(face) if face is not None else list(range(n))
    sub = restricted_grading(grading, columns)
    kernel = kernel_basis(sub, len(columns))
    orthant = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    candidate = Cone.from_inequalities(orthant, kernel, ambient_dim=n).relative_interior_point()
    if all(x > 0 for x in candidate) and is_weighted_homogeneous(ideal.generators, candidate):
        return candidate
    return None


def _saturation_is_unit(
    ideal: Ideal,
    method: AFaceMethod,
    grading: IntMatrix | None,
    face: Sequence[int],
    heuristic: bool,
    candidates: int,
) -> bool:
    variables = list(range(ideal.ring.ngens))
    if method in (AFaceMethod.FAST, AFaceMethod.STEPWISE):
        weight = positive_weight(ideal, grading, face)
        if weight is None:
            logger.debug(f"no positive weight for face {list(face)}, falling back to iterated quotients")
            method = AFaceMethod.SAT
        elif method is AFaceMethod.FAST:
            sequence = choose_saturation_order(ideal, variables, weight, candidates) if heuristic else None
            basis = saturate_product(ideal, variables, weight, sequence)
            return len(basis) == 1 and basis[0].is_ground
        else:
            basis = saturate_stepwise(ideal, variables, weight)
            return len(basis) == 1 and basis[0].is_ground

    if method is AFaceMethod.SAT:
        return saturate_iterated_quotient(ideal, variables).is_unit()
    return contains_monomial_rabinowitsch(ideal, variables)


def is_aface(
    ideal: Ideal,
    face: Iterable[int],
    method: AFaceMethod | str = AFaceMethod.FAST,
    grading: IntMatrix | None = None,
    heuristic: bool = False,
    candidates: int = 4,
) -> bool:
    """γ₀ 是否为 𝔞-面 (下标从 0 开始)

    Args:
        ideal: 不含单项式的理想
        face: 面 γ₀ 的变量下标
        method: 判定方法
        grading: 分次矩阵 Q (fast 方法寻找权重时使用)
        heuristic: fast 方法是否启发式选择第一个饱和变量
        candidates: 启发式候选变量个数
    """
    method = AFaceMethod(method)
    indices = sorted(set(face))
    restricted = ideal.restrict_to_face(indices)
    if restricted.is_zero():
        return True
    sub = restricted.to_subring(indices)
    return not _saturation_is_unit(sub, method, grading, indices, heuristic, candidates)


def validate_monomial_free(ideal: Ideal, grading: IntMatrix | None = None) -> None:
    """输入理想不得含单项式: 生成元不能是单项式，且整个正象限须是 𝔞-面

    Raises:
        ValidationError: 理想含单项式
    """
    for g in ideal.generators:
        if len(g) == 1:
            raise ValidationError("MonomialFree", f"generator {ideal.ring.format(g)} is a single term")
    full = range(ideal.ring.ngens)
    if not is_aface(ideal, full, AFaceMethod.SAT if grading is None else AFaceMethod.FAST, grading):
        raise ValidationError("MonomialFree", "the ideal contains a monomial")
