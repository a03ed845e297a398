# 起点与相邻锥
"""
遍历的两个几何步骤:

- start_point: 在支撑锥相对内部找 w₀，使 λ(w₀) 全维
- find_neighbor: 从一个内部面 η 出发，沿外法向走一小步，得到 η 另一侧的极大锥

w₀ 用矩曲线方向扰动: w = p + d_j / 2^j，d_j = (1, j, j², …)；
单一方向的扰动可能一直停在墙上。
"""

from dataclasses import dataclass
from fractions import Fraction

from src.cones import Cone, Facet, is_interior_facet
from src.core import IntVector, NoFullDimStart, NoNeighbor, QVector
from src.utils import get_logger

from .orbit_cones import OrbitConeTable, cone_of_mask

logger = get_logger(__name__)


@dataclass(frozen=True)
class FrontierEntry:
    """待跨越的内部面

    Attributes:
        key: 面的规范键
        normal: 所属锥在该面上的内法向量 v
        owner: 所属代表的编号
        facet: 面锥 η
    """

    key: bytes
    normal: IntVector
    owner: int
    facet: Cone

    @classmethod
    def from_facet(cls, facet: Facet, owner: int) -> "FrontierEntry":
        return cls(key=facet.key, normal=tuple(facet.normal), owner=owner, facet=facet.cone)


@dataclass(frozen=True)
class Neighbor:
    """find_neighbor 的结果"""

    point: QVector
    cone: Cone
    hash: int


def start_point(table: OrbitConeTable, support: Cone, max_perturbations: int = 64) -> tuple[QVector, Cone, int]:
    """支撑锥相对内部中 λ(w) 全维的点

    Returns:
        (w₀, λ(w₀), 哈希)

    Raises:
        NoFullDimStart: 扰动次数用完
    """
    k = table.ambient_dim
    p = support.relative_interior_point()
    for j in range(1, max_perturbations + 1):
        scale = Fraction(1, 2**j)
        w = tuple(Fraction(p[i]) + scale * j**i for i in range(k))
        if not support.contains_in_relint(w):
            continue
        mask = table.containing_mask(w)
        if mask == 0:
            continue
        cone = cone_of_mask(table, mask, w)
        if cone.dim == k:
            logger.debug(f"start point found after {j} perturbations")
            return w, cone, mask
    raise NoFullDimStart(f"no full-dimensional GIT-cone after {max_perturbations} perturbations")


def interior_entries(cone: Cone, owner: int, support: Cone) -> list[FrontierEntry]:
    """锥的全部内部面 (按法向量顺序)"""
    return [FrontierEntry.from_facet(f, owner) for f in cone.facets() if is_interior_facet(f, support)]


def facet_point(entry: FrontierEntry, support: Cone) -> tuple[int, ...]:
    """η 与支撑锥内部相交处的一个相对内点"""
    if support.contains_cone(entry.facet):
        return entry.facet.relative_interior_point()
    return entry.facet.intersect(support).relative_interior_point()


def find_neighbor(
    table: OrbitConeTable, entry: FrontierEntry, support: Cone, max_halvings: int = 200
) -> Neighbor:
    """η 另一侧的极大 GIT 锥

    w = p − ε·v，ε 从 1 起逐次减半，直到 λ(w) 全维、以 −v 为无冗余内法向量，
    且其在 −v 处的面就是 η。

    Raises:
        NoNeighbor: 减半次数用完 (内部面不会发生)
    """
    k = table.ambient_dim
    p = facet_point(entry, support)
    outward = tuple(-x for x in entry.normal)
    eps = Fraction(1)
    for _ in range(max_halvings):
        w = tuple(p[i] + eps * outward[i] for i in range(k))
        mask = table.containing_mask(w)
        if mask:
            cone = cone_of_mask(table, mask, w)
            if cone.dim == k and outward in cone.inequalities and cone.facet_cone(outward).v_key() == entry.key:
                return Neighbor(point=w, cone=cone, hash=mask)
        eps /= 2
    raise NoNeighbor(f"no neighbor across facet of cone {entry.owner} after {max_halvings} halvings")
