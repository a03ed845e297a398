# 有理多面锥
"""
精确有理多面锥

同时维护两种描述:
- V-描述: 极射线 + 线性空间基
- H-描述: 无冗余内法向量 (⟨n,x⟩ ≥ 0) + 等式

构造时只给出其中一种，另一种在首次使用时用双描述法计算并发布 (加锁，只算一次)。
规范形式: 本原整数向量，线性部分取简化阶梯形，其余向量投影到其正交补，排序去重。
"""

import threading
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from src.core import DimensionMismatch, IntMatrix, IntVector, Scalar, dot, inverse, mat_vec, primitive, rank, transpose
from src.core.rational import vector_sum

from .dd import canonicalize_h, canonicalize_v, dd_h_to_v

Vectors = Sequence[Sequence[Scalar]]


def _check_dim(vectors: Iterable[Sequence[Scalar]], dim: int) -> None:
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatch(f"vector of length {len(v)} in ambient dimension {dim}")


def _infer_dim(*groups: Vectors, ambient_dim: int | None) -> int:
    if ambient_dim is not None:
        return ambient_dim
    for group in groups:
        for v in group:
            return len(v)
    raise DimensionMismatch("ambient dimension cannot be inferred from empty input")


def _encode(vectors: Iterable[Sequence[int]]) -> str:
    return ";".join(",".join(str(x) for x in v) for v in vectors)


class Cone:
    """有理多面锥

    不要直接调用构造函数，使用 from_rays / from_inequalities。
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rays: list[IntVector] | None = None
        self._lineality: list[IntVector] | None = None
        self._inequalities: list[IntVector] | None = None
        self._equations: list[IntVector] | None = None
        self._raw_h: tuple[list[IntVector], list[IntVector]] | None = None
        self._raw_v: tuple[list[IntVector], list[IntVector]] | None = None
        self._key: bytes | None = None
        self._lock = threading.RLock()

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def from_rays(cls, rays: Vectors, lineality: Vectors = (), ambient_dim: int | None = None) -> "Cone":
        """由生成元构造 (生成元可以冗余)"""
        dim = _infer_dim(rays, lineality, ambient_dim=ambient_dim)
        _check_dim(rays, dim)
        _check_dim(lineality, dim)
        cone = cls(dim)
        cone._raw_v = ([primitive(r) for r in rays], [primitive(v) for v in lineality])
        return cone

    @classmethod
    def from_inequalities(
        cls, inequalities: Vectors, equations: Vectors = (), ambient_dim: int | None = None
    ) -> "Cone":
        """由不等式 ⟨n,x⟩ ≥ 0 与等式 ⟨e,x⟩ = 0 构造 (可以冗余)"""
        dim = _infer_dim(inequalities, equations, ambient_dim=ambient_dim)
        _check_dim(inequalities, dim)
        _check_dim(equations, dim)
        cone = cls(dim)
        cone._raw_h = ([primitive(n) for n in inequalities], [primitive(e) for e in equations])
        return cone

    @classmethod
    def from_extreme_rays(cls, rays: Vectors, lineality: Vectors = (), ambient_dim: int | None = None) -> "Cone":
        """由已知是极射线的生成元构造 (直接规范化，不跑双描述法)"""
        dim = _infer_dim(rays, lineality, ambient_dim=ambient_dim)
        cone = cls(dim)
        cone._rays, cone._lineality = canonicalize_v(rays, lineality)
        return cone

    @classmethod
    def from_facets(cls, inequalities: Vectors, equations: Vectors = (), ambient_dim: int | None = None) -> "Cone":
        """由已知无冗余的不等式构造"""
        dim = _infer_dim(inequalities, equations, ambient_dim=ambient_dim)
        cone = cls(dim)
        cone._inequalities, cone._equations = canonicalize_h(inequalities, equations)
        return cone

    @classmethod
    def from_canonical(
        cls,
        rays: Vectors,
        lineality: Vectors,
        inequalities: Vectors,
        equations: Vectors,
        ambient_dim: int,
    ) -> "Cone":
        """由已规范化的两种描述恢复 (检查点与结果文件读取时使用)"""
        cone = cls(ambient_dim)
        cone._rays = [tuple(int(x) for x in v) for v in rays]
        cone._lineality = [tuple(int(x) for x in v) for v in lineality]
        cone._inequalities = [tuple(int(x) for x in v) for v in inequalities]
        cone._equations = [tuple(int(x) for x in v) for v in equations]
        return cone

    @classmethod
    def full_space(cls, dim: int) -> "Cone":
        cone = cls(dim)
        cone._rays = []
        cone._lineality = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
        cone._inequalities, cone._equations = [], []
        return cone

    @classmethod
    def origin(cls, dim: int) -> "Cone":
        cone = cls(dim)
        cone._rays, cone._lineality = [], []
        cone._inequalities = []
        cone._equations = [tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)]
        return cone

    def __getstate__(self) -> dict:
        self._ensure_v()
        self._ensure_h()
        return {
            "ambient_dim": self.ambient_dim,
            "rays": self._rays,
            "lineality": self._lineality,
            "inequalities": self._inequalities,
            "equations": self._equations,
        }

    def __setstate__(self, state: dict) -> None:
        self.__init__(state["ambient_dim"])
        self._rays = [tuple(v) for v in state["rays"]]
        self._lineality = [tuple(v) for v in state["lineality"]]
        self._inequalities = [tuple(v) for v in state["inequalities"]]
        self._equations = [tuple(v) for v in state["equations"]]

    # ------------------------------------------------------------------
    # 双描述转换 (只算一次)
    # ------------------------------------------------------------------

    def _ensure_v(self) -> None:
        if self._rays is not None:
            return
        with self._lock:
            if self._rays is not None:
                return
            if self._inequalities is None:
                # 冗余描述: 先得到无冗余的 H-描述 (冗余不等式的情形顺带求出极射线)
                self._ensure_h_locked()
            if self._rays is not None:
                return
            assert self._inequalities is not None and self._equations is not None
            rays, lineality = dd_h_to_v(self._inequalities, self._equations, self.ambient_dim)
            self._lineality = canonicalize_v([], lineality)[1]
            self._rays = canonicalize_v(rays, self._lineality)[0]

    def _ensure_h(self) -> None:
        if self._inequalities is not None:
            return
        with self._lock:
            self._ensure_h_locked()

    def _ensure_h_locked(self) -> None:
        if self._inequalities is not None:
            return
        if self._rays is not None:
            gens, lineality = self._rays, self._lineality or []
        elif self._raw_v is not None:
            gens, lineality = self._raw_v
        else:
            # 冗余不等式: 先求极射线，再由极射线得到无冗余的面
            assert self._raw_h is not None
            rays, lin = dd_h_to_v(self._raw_h[0], self._raw_h[1], self.ambient_dim)
            self._lineality = canonicalize_v([], lin)[1]
            self._rays = canonicalize_v(rays, self._lineality)[0]
            gens, lineality = self._rays, self._lineality
        # 对偶锥的极射线 = 本锥的面法向量
        normals, eqs = dd_h_to_v(gens, lineality, self.ambient_dim)
        equations = canonicalize_h([], eqs)[1]
        self._equations = equations
        self._inequalities = canonicalize_h(normals, equations)[0]

    # ------------------------------------------------------------------
    # 描述
    # ------------------------------------------------------------------

    @property
    def rays(self) -> list[IntVector]:
        self._ensure_v()
        return list(self._rays or [])

    @property
    def lineality(self) -> list[IntVector]:
        self._ensure_v()
        return list(self._lineality or [])

    @property
    def inequalities(self) -> list[IntVector]:
        self._ensure_h()
        return list(self._inequalities or [])

    @property
    def equations(self) -> list[IntVector]:
        self._ensure_h()
        return list(self._equations or [])

    def dd_convert(self) -> "Cone":
        """两种描述都算好并规范化"""
        self._ensure_v()
        self._ensure_h()
        return self

    @property
    def dim(self) -> int:
        if self._equations is not None:
            return self.ambient_dim - len(self._equations)
        if self._rays is not None:
            return len(self._lineality or []) + (rank(self._rays) if self._rays else 0)
        self._ensure_h()
        return self.ambient_dim - len(self._equations or [])

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def is_pointed(self) -> bool:
        return not self.lineality

    # ------------------------------------------------------------------
    # 包含关系
    # ------------------------------------------------------------------

    def _check_vector(self, w: Sequence[Scalar]) -> None:
        if len(w) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(w)} in ambient dimension {self.ambient_dim}")

    def contains(self, w: Sequence[Scalar]) -> bool:
        self._check_vector(w)
        return all(dot(e, w) == 0 for e in self.equations) and all(dot(n, w) >= 0 for n in self.inequalities)

    def contains_in_relint(self, w: Sequence[Scalar]) -> bool:
        """w 在相对内部: 满足所有等式，且对每个无冗余不等式严格成立"""
        self._check_vector(w)
        return all(dot(e, w) == 0 for e in self.equations) and all(dot(n, w) > 0 for n in self.inequalities)

    def contains_cone(self, other: "Cone") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("cones live in different ambient spaces")
        if not all(self.contains(r) for r in other.rays):
            return False
        for v in other.lineality:
            if not self.contains(v) or not self.contains(tuple(-x for x in v)):
                return False
        return True

    def intersect(self, other: "Cone") -> "Cone":
        if other.ambient_dim != self.ambient_dim:
            raise DimensionMismatch("cones live in different ambient spaces")
        return Cone.from_inequalities(
            self.inequalities + other.inequalities,
            self.equations + other.equations,
            ambient_dim=self.ambient_dim,
        )

    # ------------------------------------------------------------------
    # 面、内点、对偶
    # ------------------------------------------------------------------

    def facet_cone(self, normal: Sequence[Scalar]) -> "Cone":
        """锥与超平面 ⟨normal,x⟩ = 0 的交 (normal 为本锥的面法向量)"""
        on_plane = [r for r in self.rays if dot(normal, r) == 0]
        return Cone.from_extreme_rays(on_plane, self.lineality, ambient_dim=self.ambient_dim)

    def facets(self) -> list["Facet"]:
        """每个无冗余不等式对应一个面"""
        key = self.canonical_key()
        return [Facet(parent_key=key, normal=n, cone=self.facet_cone(n)) for n in self.inequalities]

    def relative_interior_point(self) -> tuple[int, ...]:
        """确定性的相对内点: 规范极射线之和加上线性空间基之和"""
        point = vector_sum(self.rays, self.ambient_dim)
        point = vector_sum([point, *self.lineality], self.ambient_dim)
        return tuple(int(x) for x in point)

    def dual(self) -> "Cone":
        """对偶锥 {y : ⟨y,x⟩ ≥ 0 对所有 x ∈ 本锥}，两种描述直接互换"""
        self.dd_convert()
        cone = Cone(self.ambient_dim)
        cone._rays, cone._lineality = list(self.inequalities), list(self.equations)
        cone._inequalities, cone._equations = list(self.rays), list(self.lineality)
        return cone

    def act(self, matrix: IntMatrix | Sequence[Sequence[Scalar]]) -> "Cone":
        """线性同构 A 作用: 射线乘 A，不等式乘 A^{-T}"""
        if isinstance(matrix, IntMatrix):
            matrix = matrix.rows
        cone = Cone(self.ambient_dim)
        if self._rays is not None:
            cone._rays, cone._lineality = canonicalize_v(
                [mat_vec(matrix, r) for r in self.rays], [mat_vec(matrix, v) for v in self.lineality]
            )
        if self._inequalities is not None or cone._rays is None:
            inv_t = transpose(inverse(matrix))
            cone._inequalities, cone._equations = canonicalize_h(
                [primitive(mat_vec(inv_t, n)) for n in self.inequalities],
                [primitive(mat_vec(inv_t, e)) for e in self.equations],
            )
        return cone

    # ------------------------------------------------------------------
    # 规范键、序列化
    # ------------------------------------------------------------------

    def canonical_key(self) -> bytes:
        """由规范 H-描述得到的键: 集合相等的锥键相等"""
        if self._key is None:
            text = f"H{self.ambient_dim}|{_encode(self.equations)}|{_encode(self.inequalities)}"
            self._key = text.encode()
        return self._key

    def v_key(self) -> bytes:
        """由规范 V-描述得到的键 (面比较使用，不需要 H-描述)"""
        return f"V{self.ambient_dim}|{_encode(self.lineality)}|{_encode(self.rays)}".encode()

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cone) and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash(self.canonical_key())

    def __repr__(self) -> str:
        if self._rays is not None:
            return f"Cone(rays={self._rays}, lineality={self._lineality})"
        if self._inequalities is not None:
            return f"Cone(inequalities={self._inequalities}, equations={self._equations})"
        return f"Cone(ambient_dim={self.ambient_dim}, unconverted)"

    def to_dict(self) -> dict[str, list[list[int]]]:
        self.dd_convert()
        return {
            "rays": [list(v) for v in self.rays],
            "lineality": [list(v) for v in self.lineality],
            "inequalities": [list(v) for v in self.inequalities],
            "equations": [list(v) for v in self.equations],
        }

    def verify(self) -> bool:
        """两种描述一致: 每条射线满足每个不等式与等式"""
        self.dd_convert()
        for r in self.rays:
            if not self.contains(r):
                return False
        for v in self.lineality:
            if any(dot(n, v) != 0 for n in self.inequalities + self.equations):
                return False
        return True


@dataclass(frozen=True, eq=False)
class Facet:
    """锥的面: 父锥键、父锥在该面上为零的内法向量、面锥"""

    parent_key: bytes
    normal: IntVector
    cone: Cone

    @property
    def key(self) -> bytes:
        return self.cone.v_key()


def cone_from_rays(rays: Vectors, lineality: Vectors = (), ambient_dim: int | None = None) -> Cone:
    return Cone.from_rays(rays, lineality, ambient_dim)


def cone_from_inequalities(inequalities: Vectors, equations: Vectors = (), ambient_dim: int | None = None) -> Cone:
    return Cone.from_inequalities(inequalities, equations, ambient_dim)


def intersect_all(cones: Iterable[Cone], ambient_dim: int) -> Cone:
    """多个锥的交 (H-描述拼接后一次规范化)；空族返回全空间"""
    ineqs: list[IntVector] = []
    eqns: list[IntVector] = []
    count = 0
    for cone in cones:
        ineqs.extend(cone.inequalities)
        eqns.extend(cone.equations)
        count += 1
    if count == 0:
        return Cone.full_space(ambient_dim)
    return Cone.from_inequalities(ineqs, eqns, ambient_dim=ambient_dim)


def orthant_face(face: Iterable[int], r: int) -> Cone:
    """正象限的面 cone(e_i : i ∈ face) (下标从 0 开始)"""
    indices = sorted(set(face))
    if any(i < 0 or i >= r for i in indices):
        raise DimensionMismatch(f"face indices {indices} out of range for r={r}")
    rays = [tuple(1 if j == i else 0 for j in range(r)) for i in indices]
    return Cone.from_extreme_rays(rays, [], ambient_dim=r)


def is_interior_facet(facet: Facet, support: Cone) -> bool:
    """面是否与支撑锥的相对内部相交

    面含于支撑锥时: 不是内部面当且仅当支撑锥的某个不等式在面上恒为零。
    否则先与支撑锥求交，交的维数需与面相同，且交的相对内点落在支撑锥的相对内部。
    """
    eta = facet.cone
    generators = eta.rays + eta.lineality + [tuple(-x for x in v) for v in eta.lineality]
    if support.contains_cone(eta):
        for n in support.inequalities:
            if all(dot(n, g) == 0 for g in generators):
                return False
        return True
    meet = eta.intersect(support)
    if meet.dim != eta.dim:
        return False
    return support.contains_in_relint(meet.relative_interior_point())
