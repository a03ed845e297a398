# GIT 扇数据模型
"""
GIT 扇计算的可序列化结果模型

- ConeModel: 锥的 JSON 形式 (四组本原整数向量)
- AFaceOrbit: 𝔞-面轨道代表
- AdjacencyEdge: 轨道之间的相邻边 (带重数)
- FanStatistics: 汇总统计
- GitFanResult: 完整结果
"""

from enum import Enum

from pydantic import BaseModel, Field

from src.cones import Cone


class ConeModel(BaseModel):
    """锥的序列化形式"""
    rays: list[list[int]] = Field(default_factory=list)
    lineality: list[list[int]] = Field(default_factory=list)
    inequalities: list[list[int]] = Field(default_factory=list)
    equations: list[list[int]] = Field(default_factory=list)

    @classmethod
    def from_cone(cls, cone: Cone) -> "ConeModel":
        return cls(**cone.to_dict())

    def to_cone(self, ambient_dim: int) -> Cone:
        return Cone.from_canonical(self.rays, self.lineality, self.inequalities, self.equations, ambient_dim)


class TraversalMode(str, Enum):
    """遍历方式"""
    SYMMETRIC = "symmetric"
    PLAIN = "plain"


class AFaceOrbit(BaseModel):
    """𝔞-面轨道: 代表 (变量下标从 1 开始) 与轨道长度"""
    face: list[int]
    mask: int
    orbit_length: int

    @property
    def indices(self) -> list[int]:
        """0 起的下标"""
        return [i - 1 for i in self.face]


class AdjacencyEdge(BaseModel):
    """有向相邻边: 源轨道代表的一个内部面通向目标轨道"""
    source: int
    target: int
    multiplicity: int = 1


class FanStatistics(BaseModel):
    """扇的汇总统计"""
    total_maximal_cones: int = 0
    fan_rays: int | None = None
    orbit_length_histogram: dict[int, int] = Field(default_factory=dict)
    aface_count: int | None = None
    aface_orbits: int | None = None
    orbit_cone_count: int | None = None
    full_dim_orbit_cones: int | None = None
    table_size: int | None = None


class GitFanResult(BaseModel):
    """GIT 扇计算结果 (每个极大锥轨道一个代表)"""
    dataset: str | None = None
    mode: TraversalMode = TraversalMode.SYMMETRIC
    restricted: bool = False
    complete: bool = True
    ambient_dim: int
    group_order: int = 1
    representatives: list[ConeModel] = Field(default_factory=list)
    orbit_lengths: list[int] = Field(default_factory=list)
    hashes: list[str] = Field(default_factory=list)
    adjacency: list[AdjacencyEdge] = Field(default_factory=list)
    support: ConeModel
    statistics: FanStatistics = Field(default_factory=FanStatistics)

    def representative_cones(self) -> list[Cone]:
        return [model.to_cone(self.ambient_dim) for model in self.representatives]

    def support_cone(self) -> Cone:
        return self.support.to_cone(self.ambient_dim)
