# 双描述法
"""
精确的双描述法 (H → V)

给定 {x : A x ≥ 0, E x = 0}，先分离线性空间 L = ker([E; A])，
在 ker([E; L]) 的坐标中锥是尖锥，按字典序逐条插入不等式，
用"公共活跃约束的秩 = d − 2"判定射线相邻。
"""

from collections.abc import Sequence
from fractions import Fraction

from src.core import IntVector, Scalar, dot, inverse, kernel_basis, primitive, rank, row_space_basis
from src.core.matrix import project_onto_complement
from src.utils import get_logger

logger = get_logger(__name__)


def canonicalize_v(
    rays: Sequence[Sequence[Scalar]], lineality: Sequence[Sequence[Scalar]]
) -> tuple[list[IntVector], list[IntVector]]:
    """规范 V-形式 (要求 rays 已是极射线)

    线性空间取简化阶梯形的本原行；射线投影到线性空间的正交补后本原化、去重、排序。
    """
    lin = row_space_basis(lineality) if lineality else []
    seen: set[IntVector] = set()
    for ray in rays:
        v = primitive(project_onto_complement(ray, lin))
        if any(v):
            seen.add(v)
    return sorted(seen), lin


def canonicalize_h(
    inequalities: Sequence[Sequence[Scalar]], equations: Sequence[Sequence[Scalar]]
) -> tuple[list[IntVector], list[IntVector]]:
    """规范 H-形式 (要求 inequalities 已无冗余)，规则与 canonicalize_v 相同"""
    return canonicalize_v(inequalities, equations)


class _RankCache:
    def __init__(self, rows: list[IntVector]):
        self.rows = rows
        self.cache: dict[int, int] = {}

    def rank_of(self, mask: int) -> int:
        cached = self.cache.get(mask)
        if cached is None:
            selected = [self.rows[i] for i in range(len(self.rows)) if mask >> i & 1]
            cached = rank(selected) if selected else 0
            self.cache[mask] = cached
        return cached


def _pointed_extreme_rays(rows: list[IntVector], d: int) -> list[IntVector]:
    """尖锥 {y ∈ ℚ^d : rows·y ≥ 0} 的极射线 (rows 的秩为 d)"""
    chosen: list[int] = []
    for i, row in enumerate(rows):
        if rank([rows[j] for j in chosen] + [row]) > len(chosen):
            chosen.append(i)
            if len(chosen) == d:
                break

    # 初始单纯锥: M_S 的逆矩阵的列
    inv = inverse([rows[i] for i in chosen])
    rays: list[IntVector] = []
    active: list[int] = []
    for j in range(d):
        ray = primitive([inv[i][j] for i in range(d)])
        rays.append(ray)
        mask = 0
        for i in chosen:
            if dot(rows[i], ray) == 0:
                mask |= 1 << i
        active.append(mask)

    ranks = _RankCache(rows)
    chosen_set = set(chosen)
    for idx, row in enumerate(rows):
        if idx in chosen_set:
            continue
        bit = 1 << idx
        values = [dot(row, ray) for ray in rays]
        plus = [k for k, v in enumerate(values) if v > 0]
        minus = [k for k, v in enumerate(values) if v < 0]
        zero = [k for k, v in enumerate(values) if v == 0]

        new_rays: list[IntVector] = [rays[k] for k in plus]
        new_active: list[int] = [active[k] for k in plus]
        for k in zero:
            new_rays.append(rays[k])
            new_active.append(active[k] | bit)

        for p in plus:
            for n in minus:
                common = active[p] & active[n]
                if common.bit_count() < d - 2:
                    continue
                if ranks.rank_of(common) != d - 2:
                    continue
                vp, vn = values[p], values[n]
                combined = primitive([vp * a - vn * b for a, b in zip(rays[n], rays[p])])
                new_rays.append(combined)
                new_active.append(common | bit)

        rays, active = new_rays, new_active

    return rays


def dd_h_to_v(
    inequalities: Sequence[Sequence[Scalar]],
    equations: Sequence[Sequence[Scalar]],
    dim: int,
) -> tuple[list[IntVector], list[IntVector]]:
    """H-描述 → (极射线, 线性空间基)

    Args:
        inequalities: 内法向量 a，约束 a·x ≥ 0
        equations: 约束 e·x = 0
        dim: 外围维数

    Returns:
        (本原极射线 (已与线性空间正交), 线性空间的规范基)
    """
    ineqs = [primitive(a) for a in inequalities]
    eqns = [primitive(e) for e in equations]
    lineality = kernel_basis(eqns + ineqs, dim)
    lin_basis = row_space_basis(lineality) if lineality else []

    complement = kernel_basis(eqns + lin_basis, dim)
    d = len(complement)
    if d == 0:
        return [], lin_basis

    projected: set[IntVector] = set()
    for a in ineqs:
        row = primitive([dot(a, b) for b in complement])
        if any(row):
            projected.add(row)
    rows = sorted(projected)
    if not rows:
        # 尖锥且无不等式只可能 d = 0
        return [], lin_basis

    reduced = _pointed_extreme_rays(rows, d)

    rays: set[IntVector] = set()
    for y in reduced:
        x: list[Fraction | int] = [0] * dim
        for coefficient, b in zip(y, complement):
            if coefficient:
                x = [xi + coefficient * bi for xi, bi in zip(x, b)]
        v = primitive(x)
        if any(v):
            rays.add(v)
    logger.debug(f"double description: {len(rows)} rows, {len(rays)} rays, lineality {len(lin_basis)}")
    return sorted(rays), lin_basis
