# 异步流水线测试
"""
测试 run_pipeline 与并发的 𝔞-面判定
"""

from src.gitfan import PipelineOptions, enumerate_afaces, run_pipeline
from src.gitfan.pipeline import enumerate_afaces_async


class TestAsyncAFaces:
    """并发判定与串行结果一致"""

    async def test_cube(self, cube):
        orbits = await enumerate_afaces_async(cube.ideal, cube.group, cube.grading, max_concurrent=2)
        assert [o.face for o in orbits] == [[], [1], [1, 2], [1, 2, 3, 4]]

    async def test_g25_matches_serial(self, g25):
        concurrent = await enumerate_afaces_async(g25.ideal, g25.group, g25.grading, "sat", max_concurrent=3)
        serial = enumerate_afaces(g25.ideal, g25.group, method="sat", grading=g25.grading)
        assert concurrent == serial
        assert sum(o.orbit_length for o in concurrent) == 172


class TestRunPipeline:
    """完整流水线"""

    async def test_cube(self, cube):
        run = await run_pipeline(cube.ideal, cube.grading, cube.group, PipelineOptions(dataset="cube"))
        assert run.result.orbit_lengths == [4]
        assert len(run.orbit_cones) == 10
        assert len(run.table) == 4
        assert run.result.statistics.aface_count == 10

    async def test_workers(self, cube):
        options = PipelineOptions(workers=2, plain=True, compute_fan_rays=True)
        run = await run_pipeline(cube.ideal, cube.grading, cube.group, options)
        assert run.result.orbit_lengths == [1, 1, 1, 1]
        assert run.result.statistics.fan_rays == 4
