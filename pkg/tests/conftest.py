# 测试公共夹具
"""
共享夹具: cube / g25 问题，以及会话级的 g25 完整计算

--runslow 打开标记为 slow 的 M̄0,6 测试。
"""

import pytest

from src.gitfan import PipelineOptions, compute_git_fan
from src.ingestion import load_dataset


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="运行长时间测试")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="需要 --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def cube():
    """正方形例子: r=4, k=2, |G|=8"""
    return load_dataset("cube")


@pytest.fixture(scope="session")
def g25():
    """G(2,5) 例子: r=10, k=5, |G|=120"""
    return load_dataset("g25")


@pytest.fixture(scope="session")
def cube_run(cube):
    return compute_git_fan(cube.ideal, cube.grading, cube.group, PipelineOptions(dataset="cube"))


@pytest.fixture(scope="session")
def g25_run(g25):
    return compute_git_fan(g25.ideal, g25.grading, g25.group, PipelineOptions(dataset="g25"))


@pytest.fixture(scope="session")
def m06_raw():
    return load_dataset("m06_raw")
