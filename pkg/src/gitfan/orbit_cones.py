# 轨道锥表
"""
轨道锥 Q(γ₀) 的表: 规范键排序、去重，并记录每个群元素在表上诱导的下标置换

- project_orbit_cones: Ω = ⋃ G·Q(γ₀)
- minimal_full_dim: Ω(k) 中包含关系下的极小元
- reduce_by_orbit_inclusion: 直接在 𝔞-面轨道上做比较的 Ω₁ / Ω₂
- gitcone_at: λ(w) = 表中所有含 w 的锥之交
"""

import hashlib
from collections.abc import Iterable, Iterator, Sequence

from src.cones import Cone, intersect_all
from src.core import IntMatrix, NotASymmetry, OutsideSupport, Scalar
from src.symmetry import SymmetryGroup
from src.utils import get_logger

from .models import AFaceOrbit

logger = get_logger(__name__)


class OrbitConeTable:
    """按规范键排序的轨道锥表

    Args:
        cones: 锥 (重复的按规范键合并)
        ambient_dim: 环境维数 k
        group: 对称群 (需带诱导矩阵)；None 表示平凡群
    """

    def __init__(self, cones: Iterable[Cone], ambient_dim: int, group: SymmetryGroup | None = None):
        unique: dict[bytes, Cone] = {}
        for cone in cones:
            unique.setdefault(cone.canonical_key(), cone)
        self.ambient_dim = ambient_dim
        self.keys: list[bytes] = sorted(unique)
        self.cones: list[Cone] = [unique[key] for key in self.keys]
        self.index_by_key: dict[bytes, int] = {key: i for i, key in enumerate(self.keys)}
        self.group = group
        self.permutations: list[tuple[int, ...]] = self._index_permutations()

    def _index_permutations(self) -> list[tuple[int, ...]]:
        identity = tuple(range(len(self.cones)))
        if self.group is None or self.group.matrices is None:
            return [identity]
        permutations = [identity]
        for matrix in self.group.matrices[1:]:
            images = []
            for cone in self.cones:
                key = cone.act(matrix).canonical_key()
                if key not in self.index_by_key:
                    raise NotASymmetry("orbit cone table is not invariant under the group")
                images.append(self.index_by_key[key])
            permutations.append(tuple(images))
        return permutations

    def __len__(self) -> int:
        return len(self.cones)

    def __getitem__(self, index: int) -> Cone:
        return self.cones[index]

    def __iter__(self) -> Iterator[Cone]:
        return iter(self.cones)

    def containing_mask(self, w: Sequence[Scalar]) -> int:
        """第 i 位为 1 当且仅当 w ∈ Ω[i]"""
        mask = 0
        for i, cone in enumerate(self.cones):
            if cone.contains(w):
                mask |= 1 << i
        return mask

    def restricted(self, indices: Iterable[int]) -> "OrbitConeTable":
        return OrbitConeTable([self.cones[i] for i in indices], self.ambient_dim, self.group)

    def without_symmetry(self) -> "OrbitConeTable":
        """同一张表，只保留恒等置换"""
        table = OrbitConeTable.__new__(OrbitConeTable)
        table.ambient_dim = self.ambient_dim
        table.keys = self.keys
        table.cones = self.cones
        table.index_by_key = self.index_by_key
        table.group = None
        table.permutations = [tuple(range(len(self.cones)))]
        return table

    def full_dimensional(self) -> list[int]:
        return [i for i, cone in enumerate(self.cones) if cone.dim == self.ambient_dim]

    def orbit_lengths(self, indices: Iterable[int] | None = None) -> list[int]:
        """indices (缺省为全表) 在群作用下分成的各轨道长度，升序"""
        remaining = set(range(len(self.cones)) if indices is None else indices)
        lengths = []
        while remaining:
            seed = min(remaining)
            orbit = {perm[seed] for perm in self.permutations}
            remaining -= orbit
            lengths.append(len(orbit))
        return sorted(lengths)

    def digest(self) -> str:
        """表内容的 SHA-256 摘要 (检查点核对用)"""
        h = hashlib.sha256()
        for key in self.keys:
            h.update(key)
            h.update(b"\n")
        return h.hexdigest()

    def __getstate__(self) -> dict:
        return {
            "ambient_dim": self.ambient_dim,
            "keys": self.keys,
            "cones": self.cones,
            "permutations": self.permutations,
        }

    def __setstate__(self, state: dict) -> None:
        self.ambient_dim = state["ambient_dim"]
        self.keys = state["keys"]
        self.cones = state["cones"]
        self.index_by_key = {key: i for i, key in enumerate(self.keys)}
        self.group = None
        self.permutations = state["permutations"]


def face_cone(grading: IntMatrix, face: Iterable[int]) -> Cone:
    """Q(γ₀) = cone(q_i : i ∈ γ₀)，空面为原点"""
    columns = [grading.column(i) for i in face]
    if not columns:
        return Cone.origin(grading.nrows)
    return Cone.from_rays(columns, ambient_dim=grading.nrows)


def _orbit_images(cone: Cone, group: SymmetryGroup | None) -> list[Cone]:
    if group is None or group.matrices is None:
        return [cone]
    return [cone.act(matrix) for matrix in group.matrices]


def project_orbit_cones(
    afaces: Sequence[AFaceOrbit], grading: IntMatrix, group: SymmetryGroup | None = None
) -> OrbitConeTable:
    """Ω: 全部 𝔞-面在 Q 下的像 (对代表的像作用 A_σ 得到整条轨道)"""
    images: list[Cone] = []
    for orbit in afaces:
        images.extend(_orbit_images(face_cone(grading, orbit.indices), group))
    table = OrbitConeTable(images, grading.nrows, group)
    logger.info(f"orbit cone table has {len(table)} cones, {len(table.full_dimensional())} full-dimensional")
    return table


def _inclusion_minimal(cones: Sequence[Cone]) -> list[int]:
    minimal = []
    for i, cone in enumerate(cones):
        if not any(j != i and cone.contains_cone(other) for j, other in enumerate(cones)):
            minimal.append(i)
    return minimal


def minimal_full_dim(table: OrbitConeTable, k: int | None = None) -> OrbitConeTable:
    """Ω(k)_min: 全维锥中不真包含其他全维锥者"""
    k = table.ambient_dim if k is None else k
    full = [table[i] for i in range(len(table)) if table[i].dim == k]
    kept = [full[i] for i in _inclusion_minimal(full)]
    result = OrbitConeTable(kept, table.ambient_dim, table.group)
    logger.info(f"{len(result)} minimal full-dimensional orbit cones out of {len(full)}")
    return result


def reduce_by_orbit_inclusion(
    afaces: Sequence[AFaceOrbit],
    grading: IntMatrix,
    group: SymmetryGroup,
    inclusion_minimal: bool = True,
) -> OrbitConeTable:
    """Ω₁ (inclusion_minimal=False) 或 Ω₂ (True)

    在 Q(γ₁) 全维的 𝔞-面轨道中取关于 ⊑ 极小者:
    G·γ₀ ⊑ G·γ₁ 当且仅当存在 σ 使 σ(γ₀) ⊆ γ₁。
    """
    k = grading.nrows
    full = [orbit for orbit in afaces if face_cone(grading, orbit.indices).dim == k]
    orbit_masks = [group.orbit_of_mask(orbit.mask) for orbit in full]

    minimal: list[AFaceOrbit] = []
    for i, orbit in enumerate(full):
        below = any(
            j != i and any(image & ~orbit.mask == 0 for image in orbit_masks[j]) for j in range(len(full))
        )
        if not below:
            minimal.append(orbit)

    images: list[Cone] = []
    for orbit in minimal:
        images.extend(_orbit_images(face_cone(grading, orbit.indices), group))
    table = OrbitConeTable(images, k, group)
    if inclusion_minimal:
        table = table.restricted(_inclusion_minimal(table.cones))
    logger.info(f"orbit inclusion kept {len(minimal)} a-face orbits, {len(table)} cones")
    return table


def gitcone_at(table: OrbitConeTable, w: Sequence[Scalar], support: Cone | None = None) -> Cone:
    """λ(w) = ⋂ {Ω[i] : w ∈ Ω[i]}

    Raises:
        OutsideSupport: w 不在支撑锥内，或不在任何表中锥内
    """
    if support is not None and not support.contains(w):
        raise OutsideSupport(f"{list(w)} is outside the support cone")
    return cone_of_mask(table, table.containing_mask(w), w)


def cone_of_mask(table: OrbitConeTable, mask: int, w: Sequence[Scalar] | None = None) -> Cone:
    if mask == 0:
        raise OutsideSupport(f"{list(w) if w is not None else 'point'} lies in no orbit cone")
    members = [table[i] for i in range(len(table)) if mask >> i & 1]
    if len(members) == 1:
        return members[0]
    return intersect_all(members, table.ambient_dim)
