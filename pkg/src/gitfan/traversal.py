# 扇遍历
"""
GIT 扇的遍历: 从一个极大锥出发，跨过内部面逐个找到相邻极大锥

- 对称模式: 每个轨道只保留一个代表，ℋ 中存放轨道内最小的哈希
- 普通模式: 平凡群下的同一过程，得到全部极大锥
- 前沿按面的规范键做对称差: 同一个面从两侧各加入一次即相互抵消
- 省内存模式: 不维护开放面，只记录仍有未处理面的代表，逐个展开其全部邻居
- 多进程: 前沿最前面的 N 项并行求邻居，结果按前沿顺序应用，输出与单进程一致
"""

from collections import Counter, deque
from collections.abc import Sequence
from concurrent.futures import Executor, ProcessPoolExecutor
from itertools import islice
from pathlib import Path

from src.cones import Cone
from src.config import get_settings
from src.core import CheckpointError, mat_vec, primitive
from src.symmetry import SymmetryGroup
from src.utils import get_logger

from .checkpoint import (
    EdgeRecord,
    FrontierRecord,
    TraversalCheckpoint,
    check_compatible,
    load_checkpoint,
    save_checkpoint,
)
from .hashing import HashStore, hash_orbit, orbit_min_hash
from .models import AdjacencyEdge, ConeModel, FanStatistics, GitFanResult, TraversalMode
from .neighbors import FrontierEntry, Neighbor, find_neighbor, interior_entries, start_point
from .orbit_cones import OrbitConeTable

logger = get_logger(__name__)

# 工作进程内的只读状态 (由 initializer 安装)
_worker_state: tuple[OrbitConeTable, Cone, int] | None = None


def _install_worker(table: OrbitConeTable, support: Cone, max_halvings: int) -> None:
    global _worker_state
    _worker_state = (table, support, max_halvings)


def _worker_find_neighbor(entry: FrontierEntry) -> Neighbor:
    assert _worker_state is not None
    table, support, max_halvings = _worker_state
    return find_neighbor(table, entry, support, max_halvings)


class FanTraversal:
    """一次遍历的全部状态

    Args:
        table: 轨道锥表 (通常是 Ω(k)_min)
        support: 活动支撑锥 (Q(γ) 或动锥)
        symmetric: False 时忽略表上的群作用
        restricted: 支撑锥是否为动锥 (只影响结果标记)
        memory_mode: 省内存模式 (缺省读配置)
        threads: 进程数 (缺省读配置)
        checkpoint_path: 检查点文件
        checkpoint_every: 每发现多少个新锥写一次检查点 (缺省读配置)
        dataset: 数据集名称
        dataset_digest: 数据集摘要，写入检查点
    """

    def __init__(
        self,
        table: OrbitConeTable,
        support: Cone,
        *,
        symmetric: bool = True,
        restricted: bool = False,
        memory_mode: bool | None = None,
        threads: int | None = None,
        checkpoint_path: str | Path | None = None,
        checkpoint_every: int | None = None,
        max_perturbations: int | None = None,
        max_halvings: int | None = None,
        compute_fan_rays: bool | None = None,
        dataset: str | None = None,
        dataset_digest: str | None = None,
    ):
        config = get_settings().traversal
        self.table = table if symmetric else table.without_symmetry()
        self.group: SymmetryGroup | None = table.group if symmetric else None
        self.support = support
        self.symmetric = symmetric
        self.restricted = restricted
        self.memory_mode = config.memory_mode if memory_mode is None else memory_mode
        self.threads = max(1, threads or config.threads)
        self.checkpoint_path = Path(checkpoint_path) if checkpoint_path else None
        self.checkpoint_every = checkpoint_every or config.checkpoint_every
        self.max_perturbations = max_perturbations or config.max_perturbations
        self.max_halvings = max_halvings or config.max_halvings
        self.compute_fan_rays = config.compute_fan_rays if compute_fan_rays is None else compute_fan_rays
        self.dataset = dataset
        self.dataset_digest = dataset_digest

        self.representatives: list[Cone] = []
        self.representative_hashes: list[int] = []
        self.store = HashStore()
        self.orbit_by_min: dict[int, int] = {}
        self.frontier: dict[bytes, FrontierEntry] = {}
        self.pending: deque[int] = deque()
        self.edges: Counter[tuple[int, int]] = Counter()
        self.new_cones = 0
        self._since_checkpoint = 0

    # ------------------------------------------------------------------
    # 状态更新
    # ------------------------------------------------------------------

    def _known_orbit(self, value: int) -> int | None:
        smallest = orbit_min_hash(self.table, value)
        if smallest in self.store:
            return self.orbit_by_min[smallest]
        return None

    def _add_representative(self, cone: Cone, value: int) -> int:
        index = len(self.representatives)
        self.representatives.append(cone)
        self.representative_hashes.append(value)
        smallest = orbit_min_hash(self.table, value)
        self.store.add(smallest)
        self.orbit_by_min[smallest] = index
        self.new_cones += 1
        self._since_checkpoint += 1
        if self.memory_mode:
            self.pending.append(index)
        else:
            for entry in interior_entries(cone, index, self.support):
                self._toggle(entry)
        if self.new_cones % self.checkpoint_every == 0:
            logger.info(
                f"{self.new_cones} cones found, {len(self.frontier) or len(self.pending)} open"
            )
        return index

    def _toggle(self, entry: FrontierEntry) -> None:
        """ℱ ⊖ {entry}: 同键已存在则两项都消去，并记录两条方向相反的边"""
        existing = self.frontier.pop(entry.key, None)
        if existing is None:
            self.frontier[entry.key] = entry
            return
        self.edges[(existing.owner, entry.owner)] += 1
        self.edges[(entry.owner, existing.owner)] += 1

    def _apply(self, entry: FrontierEntry, neighbor: Neighbor) -> None:
        known = self._known_orbit(neighbor.hash)
        if known is None:
            # 新代表的面 η 会把 entry 从前沿消去
            self._add_representative(neighbor.cone, neighbor.hash)
        else:
            del self.frontier[entry.key]
            self.edges[(entry.owner, known)] += 1

    # ------------------------------------------------------------------
    # 主循环
    # ------------------------------------------------------------------

    def _neighbors(self, executor: Executor | None, entries: Sequence[FrontierEntry]) -> list[Neighbor]:
        if executor is None:
            return [find_neighbor(self.table, entry, self.support, self.max_halvings) for entry in entries]
        return list(executor.map(_worker_find_neighbor, entries))

    def _run_frontier(self, executor: Executor | None, stop_after: int | None) -> bool:
        while self.frontier:
            batch = list(islice(self.frontier.values(), self.threads))
            for entry, neighbor in zip(batch, self._neighbors(executor, batch)):
                if self.frontier.get(entry.key) is not entry:
                    continue
                self._apply(entry, neighbor)
            if self._interrupt(stop_after):
                return False
        return True

    def _run_memory(self, executor: Executor | None, stop_after: int | None) -> bool:
        while self.pending:
            index = self.pending[0]
            entries = interior_entries(self.representatives[index], index, self.support)
            for neighbor in self._neighbors(executor, entries):
                target = self._known_orbit(neighbor.hash)
                if target is None:
                    target = self._add_representative(neighbor.cone, neighbor.hash)
                self.edges[(index, target)] += 1
            self.pending.popleft()
            if self._interrupt(stop_after):
                return False
        return True

    def _interrupt(self, stop_after: int | None) -> bool:
        stopping = stop_after is not None and self.new_cones >= stop_after
        if self.checkpoint_path and (stopping or self._since_checkpoint >= self.checkpoint_every):
            save_checkpoint(self.snapshot(), self.checkpoint_path)
            self._since_checkpoint = 0
        if stopping:
            logger.info(f"traversal interrupted after {self.new_cones} cones")
        return stopping

    def run(self, resume: bool = False, stop_after: int | None = None) -> GitFanResult:
        """执行遍历

        Args:
            resume: 从检查点文件继续
            stop_after: 发现这么多个新锥后停下 (写检查点)，结果标记为未完成

        Raises:
            NoFullDimStart: 找不到起点
            CheckpointError: 检查点不可用
        """
        if resume:
            if self.checkpoint_path is None:
                raise CheckpointError("resuming needs a checkpoint path")
            self.restore(load_checkpoint(self.checkpoint_path))
        else:
            _, cone, value = start_point(self.table, self.support, self.max_perturbations)
            self._add_representative(cone, value)

        mode = "memory" if self.memory_mode else "frontier"
        logger.info(
            f"traversing {'symmetric' if self.symmetric else 'plain'} fan ({mode} mode, "
            f"{self.threads} processes, table of {len(self.table)} cones)"
        )
        if self.threads > 1:
            with ProcessPoolExecutor(
                max_workers=self.threads,
                initializer=_install_worker,
                initargs=(self.table, self.support, self.max_halvings),
            ) as executor:
                complete = self._loop(executor, stop_after)
        else:
            complete = self._loop(None, stop_after)

        if complete and self.checkpoint_path:
            save_checkpoint(self.snapshot(), self.checkpoint_path)
        result = self.result(complete)
        logger.info(
            f"traversal {'finished' if complete else 'stopped'}: {len(self.representatives)} orbits, "
            f"{result.statistics.total_maximal_cones} maximal cones"
        )
        return result

    def _loop(self, executor: Executor | None, stop_after: int | None) -> bool:
        if self.memory_mode:
            return self._run_memory(executor, stop_after)
        return self._run_frontier(executor, stop_after)

    # ------------------------------------------------------------------
    # 检查点
    # ------------------------------------------------------------------

    def snapshot(self) -> TraversalCheckpoint:
        return TraversalCheckpoint(
            dataset_digest=self.dataset_digest,
            table_digest=self.table.digest(),
            support_key=self.support.canonical_key().decode(),
            ambient_dim=self.table.ambient_dim,
            symmetric=self.symmetric,
            memory_mode=self.memory_mode,
            hash_store=[str(v) for v in self.store.values()],
            representatives=[ConeModel.from_cone(c) for c in self.representatives],
            representative_hashes=[str(v) for v in self.representative_hashes],
            frontier=[
                FrontierRecord(normal=list(e.normal), owner=e.owner, facet=ConeModel.from_cone(e.facet))
                for e in self.frontier.values()
            ],
            pending=list(self.pending),
            edges=[EdgeRecord(source=s, target=t, count=c) for (s, t), c in sorted(self.edges.items())],
            new_cones=self.new_cones,
        )

    def restore(self, state: TraversalCheckpoint) -> None:
        """
        Raises:
            CheckpointError: 检查点与当前表、支撑锥或遍历方式不符
        """
        check_compatible(state, self.table.digest(), self.support.canonical_key().decode(), self.symmetric)
        if state.memory_mode != self.memory_mode:
            raise CheckpointError("checkpoint was written with a different memory mode")
        if self.dataset_digest and state.dataset_digest and state.dataset_digest != self.dataset_digest:
            raise CheckpointError("checkpoint belongs to a different dataset")
        k = state.ambient_dim
        self.representatives = [model.to_cone(k) for model in state.representatives]
        self.representative_hashes = [int(v) for v in state.representative_hashes]
        self.store = HashStore(int(v) for v in state.hash_store)
        self.orbit_by_min = {
            orbit_min_hash(self.table, value): index for index, value in enumerate(self.representative_hashes)
        }
        if len(self.store) != len(self.orbit_by_min):
            raise CheckpointError("checkpoint hash store does not match its representatives")
        self.frontier = {}
        for record in state.frontier:
            facet = record.facet.to_cone(k)
            entry = FrontierEntry(key=facet.v_key(), normal=tuple(record.normal), owner=record.owner, facet=facet)
            self.frontier[entry.key] = entry
        self.pending = deque(state.pending)
        self.edges = Counter({(e.source, e.target): e.count for e in state.edges})
        self.new_cones = state.new_cones
        self._since_checkpoint = 0
        logger.info(f"resumed from checkpoint with {len(self.representatives)} representatives")

    # ------------------------------------------------------------------
    # 结果
    # ------------------------------------------------------------------

    def emitted_cones(self) -> list[Cone]:
        """结果中的代表: 动锥模式下与支撑锥相交"""
        if not self.restricted:
            return list(self.representatives)
        return [cone.intersect(self.support) for cone in self.representatives]

    def orbit_lengths(self) -> list[int]:
        return [len(hash_orbit(self.table, value)) for value in self.representative_hashes]

    def fan_ray_count(self, cones: Sequence[Cone]) -> int:
        matrices = self.group.matrices if self.group is not None and self.group.matrices else None
        rays: set[tuple[int, ...]] = set()
        for cone in cones:
            for ray in cone.rays:
                if matrices is None:
                    rays.add(tuple(ray))
                else:
                    rays.update(primitive(mat_vec(matrix.rows, ray)) for matrix in matrices)
        return len(rays)

    def result(self, complete: bool = True) -> GitFanResult:
        lengths = self.orbit_lengths()
        cones = self.emitted_cones()
        statistics = FanStatistics(
            total_maximal_cones=sum(lengths),
            fan_rays=self.fan_ray_count(cones) if self.compute_fan_rays and complete else None,
            orbit_length_histogram=dict(sorted(Counter(lengths).items())),
            table_size=len(self.table),
        )
        return GitFanResult(
            dataset=self.dataset,
            mode=TraversalMode.SYMMETRIC if self.symmetric else TraversalMode.PLAIN,
            restricted=self.restricted,
            complete=complete,
            ambient_dim=self.table.ambient_dim,
            group_order=len(self.table.permutations) if self.group is None else len(self.group),
            representatives=[ConeModel.from_cone(c) for c in self.representatives],
            orbit_lengths=lengths,
            hashes=[str(v) for v in self.representative_hashes],
            adjacency=[
                AdjacencyEdge(source=s, target=t, multiplicity=c) for (s, t), c in sorted(self.edges.items())
            ],
            support=ConeModel.from_cone(self.support),
            statistics=statistics,
        )


def traverse_symmetric(
    table: OrbitConeTable,
    group: SymmetryGroup | None,
    support: Cone,
    resume: bool = False,
    stop_after: int | None = None,
    **options,
) -> GitFanResult:
    """对称遍历: 每个极大锥轨道一个代表

    group 与表上的群不同时按 group 重建表的置换。
    """
    if group is not None and table.group is not group:
        table = OrbitConeTable(table.cones, table.ambient_dim, group)
    return FanTraversal(table, support, symmetric=True, **options).run(resume=resume, stop_after=stop_after)


def traverse_plain(table: OrbitConeTable, support: Cone, **options) -> list[Cone]:
    """普通遍历: 全部极大锥"""
    result = FanTraversal(table, support, symmetric=False, **options).run()
    return result.representative_cones()
