# 𝔞-面枚举
"""
按对称群的轨道枚举 𝔞-面

正象限的 2^r 个面先按 G 分成轨道，每个轨道只判定其代表 (位集合整数值最小者)。
判定彼此独立，workers > 1 时放进进程池。
"""

from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from src.config import get_settings
from src.core import IntMatrix
from src.polynomial import AFaceMethod, Ideal, is_aface
from src.symmetry import SymmetryGroup, face_of, subset_orbit_representatives
from src.utils import get_logger

from .models import AFaceOrbit

logger = get_logger(__name__)


def check_face(
    ideal: Ideal,
    mask: int,
    method: AFaceMethod,
    grading: IntMatrix | None,
    heuristic: bool,
    candidates: int,
) -> bool:
    return is_aface(ideal, face_of(mask), method, grading, heuristic, candidates)


def enumerate_afaces(
    ideal: Ideal,
    group: SymmetryGroup,
    r: int | None = None,
    method: AFaceMethod | str | None = None,
    grading: IntMatrix | None = None,
    heuristic: bool | None = None,
    candidates: int | None = None,
    workers: int = 1,
) -> list[AFaceOrbit]:
    """𝔞-面轨道代表与轨道长度

    Args:
        ideal: 不含单项式、关于 Q 齐次的理想
        group: 对称群 (平凡群即逐个枚举全部面)
        r: 变量个数 (缺省取理想的变量数)
        method: 判定方法 (缺省读配置)
        grading: 分次矩阵，fast 方法用它寻找正权重
        heuristic: 是否启发式选择饱和顺序 (缺省读配置)
        candidates: 启发式候选数 (缺省读配置)
        workers: 进程数

    Returns:
        list[AFaceOrbit]: 按位集合整数值递增排列
    """
    engine = get_settings().engine
    method = AFaceMethod(method or engine.aface_method)
    heuristic = engine.variable_order == "heuristic" if heuristic is None else heuristic
    candidates = candidates or engine.heuristic_candidates
    r = ideal.ring.ngens if r is None else r

    representatives = subset_orbit_representatives(group, r)
    logger.info(f"testing {len(representatives)} face orbits with method {method.value}")

    masks = [mask for mask, _ in representatives]
    if workers > 1 and len(masks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            verdicts = list(
                pool.map(
                    check_face,
                    [ideal] * len(masks),
                    masks,
                    [method] * len(masks),
                    [grading] * len(masks),
                    [heuristic] * len(masks),
                    [candidates] * len(masks),
                )
            )
    else:
        verdicts = [check_face(ideal, mask, method, grading, heuristic, candidates) for mask in masks]

    orbits = collect_orbits(representatives, verdicts)
    logger.info(f"found {len(orbits)} a-face orbits, {sum(o.orbit_length for o in orbits)} a-faces in total")
    return orbits


def collect_orbits(representatives: Sequence[tuple[int, int]], verdicts: Sequence[bool]) -> list[AFaceOrbit]:
    return [
        AFaceOrbit(face=[i + 1 for i in face_of(mask)], mask=mask, orbit_length=length)
        for (mask, length), verdict in zip(representatives, verdicts)
        if verdict
    ]


def expand_afaces(orbits: Sequence[AFaceOrbit], group: SymmetryGroup) -> list[int]:
    """全部 𝔞-面的位集合 (升序)"""
    masks: set[int] = set()
    for orbit in orbits:
        masks.update(group.orbit_of_mask(orbit.mask))
    return sorted(masks)
