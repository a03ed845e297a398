# 派生锥与轨道图
"""
由分次矩阵或遍历结果派生的对象

- moving_cone: 动锥 = ⋂_i cone(q_j : j ≠ i)
- extract_semiample_and_mori: 唯一的长度为 1 的轨道给出半丰富锥，其对偶为 Mori 锥
- orbit_adjacency_graph: 轨道级相邻图
- expand_fan: 把代表按群展开为全部极大锥
"""

from collections import Counter
from dataclasses import dataclass, field

from src.cones import Cone, intersect_all
from src.core import IntMatrix, NoUniqueFixedOrbit
from src.symmetry import SymmetryGroup, orbit_of_cone
from src.utils import get_logger

from .models import GitFanResult

logger = get_logger(__name__)


def moving_cone(grading: IntMatrix) -> Cone:
    """r 个去掉一列的锥之交 (规范 H-描述)"""
    columns = grading.columns()
    k = grading.nrows
    leave_one_out = []
    for i in range(len(columns)):
        rest = columns[:i] + columns[i + 1:]
        leave_one_out.append(Cone.from_rays(rest, ambient_dim=k) if rest else Cone.origin(k))
    cone = intersect_all(leave_one_out, k)
    logger.info(f"moving cone has dimension {cone.dim} and {len(cone.inequalities)} facets")
    return cone


def extract_semiample_and_mori(result: GitFanResult) -> tuple[Cone, Cone]:
    """
    Returns:
        (半丰富锥, Mori 锥)

    Raises:
        NoUniqueFixedOrbit: 长度为 1 的轨道不是恰好一个
    """
    fixed = [i for i, length in enumerate(result.orbit_lengths) if length == 1]
    if len(fixed) != 1:
        raise NoUniqueFixedOrbit(f"expected exactly one orbit of length 1, found {len(fixed)}")
    semiample = result.representatives[fixed[0]].to_cone(result.ambient_dim)
    return semiample, semiample.dual()


@dataclass
class OrbitGraph:
    """轨道级相邻图

    Attributes:
        orbit_lengths: 每个顶点 (轨道) 的长度
        edges: 无向边 (小编号在前) 到重数的映射，自环表示轨道内部相邻
    """

    orbit_lengths: list[int]
    edges: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def vertices(self) -> list[int]:
        return list(range(len(self.orbit_lengths)))

    def neighbors(self, vertex: int) -> set[int]:
        found = set()
        for a, b in self.edges:
            if a == vertex:
                found.add(b)
            if b == vertex:
                found.add(a)
        return found

    def is_connected(self) -> bool:
        if not self.orbit_lengths:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for nxt in self.neighbors(stack.pop()):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == len(self.orbit_lengths)


def orbit_adjacency_graph(result: GitFanResult) -> OrbitGraph:
    """有向边取无向支撑，重数累加"""
    counts: Counter[tuple[int, int]] = Counter()
    for edge in result.adjacency:
        pair = (min(edge.source, edge.target), max(edge.source, edge.target))
        counts[pair] += edge.multiplicity
    return OrbitGraph(orbit_lengths=list(result.orbit_lengths), edges=dict(sorted(counts.items())))


def expand_fan(result: GitFanResult, group: SymmetryGroup) -> dict[bytes, Cone]:
    """全部极大锥，按规范键去重"""
    cones: dict[bytes, Cone] = {}
    for cone in result.representative_cones():
        cones.update(orbit_of_cone(group, cone))
    return cones
