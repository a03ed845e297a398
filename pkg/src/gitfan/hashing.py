# GIT 锥哈希
"""
GIT 锥的哈希: 第 i 位为 1 当且仅当 λ ⊆ Ω[i]，按二进制读作整数

对 λ = λ(w)，λ ⊆ Ω[i] 与 w ∈ Ω[i] 等价，所以知道内点时只需做点的包含测试。
群作用就是位的置换；轨道用其中最小的整数表示。
"""

import bisect
from collections.abc import Iterable, Sequence

from src.cones import Cone
from src.core import Scalar

from .orbit_cones import OrbitConeTable


def hash_of(table: OrbitConeTable, cone: Cone) -> int:
    """由生成元逐个做半空间测试"""
    value = 0
    for i, member in enumerate(table.cones):
        if member.contains_cone(cone):
            value |= 1 << i
    return value


def hash_at(table: OrbitConeTable, w: Sequence[Scalar]) -> int:
    """λ(w) 的哈希"""
    return table.containing_mask(w)


def act_on_hash(permutation: Sequence[int], value: int) -> int:
    """第 i 位移到 permutation[i]"""
    result = 0
    i = 0
    while value:
        if value & 1:
            result |= 1 << permutation[i]
        value >>= 1
        i += 1
    return result


def hash_orbit(table: OrbitConeTable, value: int) -> set[int]:
    return {act_on_hash(p, value) for p in table.permutations}


def orbit_min_hash(table: OrbitConeTable, value: int) -> int:
    return min(act_on_hash(p, value) for p in table.permutations)


class HashStore:
    """有序整数列表 ℋ: 二分查找与有序插入"""

    def __init__(self, values: Iterable[int] = ()):
        self._values: list[int] = sorted(set(values))

    def __contains__(self, value: int) -> bool:
        i = bisect.bisect_left(self._values, value)
        return i < len(self._values) and self._values[i] == value

    def add(self, value: int) -> bool:
        """插入；已存在时返回 False"""
        i = bisect.bisect_left(self._values, value)
        if i < len(self._values) and self._values[i] == value:
            return False
        self._values.insert(i, value)
        return True

    def __len__(self) -> int:
        return len(self._values)

    def values(self) -> list[int]:
        return list(self._values)
