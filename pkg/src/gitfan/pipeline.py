# GIT 扇流水线
"""
从 (理想, Q, G) 到 GitFanResult 的完整流程:

1. 𝔞-面: 各轨道代表的判定并发执行 (信号量限制并发数，进程池执行)
2. 轨道锥表 Ω 与其极小全维部分 (或 Ω₁ / Ω₂)
3. 支撑锥: Q(γ)，或限制模式下的动锥
4. 遍历
"""

import asyncio
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path
from typing import Literal

from pydantic import BaseModel

from src.cones import Cone
from src.config import get_settings
from src.core import IntMatrix
from src.polynomial import AFaceMethod, Ideal
from src.symmetry import SymmetryGroup, subset_orbit_representatives
from src.utils import get_logger

from .afaces import check_face, collect_orbits, enumerate_afaces
from .derived import moving_cone
from .models import AFaceOrbit, GitFanResult
from .orbit_cones import OrbitConeTable, face_cone, minimal_full_dim, project_orbit_cones, reduce_by_orbit_inclusion
from .traversal import FanTraversal

logger = get_logger(__name__)


class PipelineOptions(BaseModel):
    """流水线选项 (None 表示读配置)"""
    method: AFaceMethod | None = None
    heuristic: bool | None = None
    workers: int = 1
    reduction: Literal["minimal", "omega1", "omega2"] = "minimal"
    plain: bool = False
    restrict_moving: bool = False
    threads: int | None = None
    memory_mode: bool | None = None
    checkpoint: Path | None = None
    resume: bool = False
    stop_after: int | None = None
    compute_fan_rays: bool | None = None
    dataset: str | None = None
    dataset_digest: str | None = None


@dataclass
class PipelineRun:
    """各阶段的产物"""
    afaces: list[AFaceOrbit]
    orbit_cones: OrbitConeTable
    table: OrbitConeTable
    support: Cone
    result: GitFanResult


async def enumerate_afaces_async(
    ideal: Ideal,
    group: SymmetryGroup,
    grading: IntMatrix | None = None,
    method: AFaceMethod | str | None = None,
    heuristic: bool | None = None,
    max_concurrent: int = 1,
) -> list[AFaceOrbit]:
    """并发判定各轨道代表

    Args:
        max_concurrent: 同时进行的判定个数 (也是进程数)
    """
    engine = get_settings().engine
    method = AFaceMethod(method or engine.aface_method)
    heuristic = engine.variable_order == "heuristic" if heuristic is None else heuristic
    representatives = subset_orbit_representatives(group, ideal.ring.ngens)
    semaphore = asyncio.Semaphore(max_concurrent)
    loop = asyncio.get_running_loop()
    logger.info(f"testing {len(representatives)} face orbits, {max_concurrent} at a time")

    with ProcessPoolExecutor(max_workers=max_concurrent) as pool:

        async def test(mask: int) -> bool:
            async with semaphore:
                return await loop.run_in_executor(
                    pool,
                    partial(check_face, ideal, mask, method, grading, heuristic, engine.heuristic_candidates),
                )

        verdicts = await asyncio.gather(*(test(mask) for mask, _ in representatives))

    orbits = collect_orbits(representatives, verdicts)
    logger.info(f"found {len(orbits)} a-face orbits")
    return orbits


def build_table(
    afaces: list[AFaceOrbit],
    grading: IntMatrix,
    group: SymmetryGroup,
    reduction: str = "minimal",
) -> tuple[OrbitConeTable, OrbitConeTable]:
    """(Ω, 遍历用的表)"""
    omega = project_orbit_cones(afaces, grading, group)
    if reduction == "minimal":
        return omega, minimal_full_dim(omega)
    return omega, reduce_by_orbit_inclusion(afaces, grading, group, inclusion_minimal=reduction == "omega2")


def active_support(grading: IntMatrix, restrict_moving: bool) -> Cone:
    if restrict_moving:
        return moving_cone(grading)
    return face_cone(grading, range(grading.ncols))


async def run_pipeline(
    ideal: Ideal,
    grading: IntMatrix,
    group: SymmetryGroup,
    options: PipelineOptions | None = None,
) -> PipelineRun:
    """完整计算 (CPU 密集的阶段放进执行器)"""
    options = options or PipelineOptions()
    loop = asyncio.get_running_loop()

    if options.workers > 1:
        afaces = await enumerate_afaces_async(
            ideal, group, grading, options.method, options.heuristic, options.workers
        )
    else:
        afaces = await loop.run_in_executor(
            None, partial(enumerate_afaces, ideal, group, None, options.method, grading, options.heuristic)
        )

    omega, table = await loop.run_in_executor(None, build_table, afaces, grading, group, options.reduction)
    support = await loop.run_in_executor(None, active_support, grading, options.restrict_moving)

    traversal = FanTraversal(
        table,
        support,
        symmetric=not options.plain,
        restricted=options.restrict_moving,
        memory_mode=options.memory_mode,
        threads=options.threads,
        checkpoint_path=options.checkpoint,
        compute_fan_rays=options.compute_fan_rays,
        dataset=options.dataset,
        dataset_digest=options.dataset_digest,
    )
    result = await loop.run_in_executor(None, partial(traversal.run, options.resume, options.stop_after))
    result.statistics.aface_orbits = len(afaces)
    result.statistics.aface_count = sum(o.orbit_length for o in afaces)
    result.statistics.orbit_cone_count = len(omega)
    result.statistics.full_dim_orbit_cones = len(omega.full_dimensional())
    return PipelineRun(afaces=afaces, orbit_cones=omega, table=table, support=support, result=result)


def compute_git_fan(
    ideal: Ideal,
    grading: IntMatrix,
    group: SymmetryGroup,
    options: PipelineOptions | None = None,
) -> PipelineRun:
    """run_pipeline 的同步入口"""
    return asyncio.run(run_pipeline(ideal, grading, group, options))
