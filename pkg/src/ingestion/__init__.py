# 数据摄入模块
"""
问题输入:
- 问题文件 (JSON) 的解析与校验
- 内置数据集 (cube, g25, m06_raw, m06) 与摘要校验
- M̄0,6 理想的两步饱和构造
"""

from .m06 import build_m06_ideal, group_translates, i1_generators
from .problem import (
    GroupSpec,
    Problem,
    ProblemOptions,
    ProblemSpec,
    build_problem,
    emit_problem,
    load_problem,
    parse_problem,
    parse_problem_spec,
    problem_digest,
)
from .registry import (
    DATASET_DIGESTS,
    HUGE_DATASETS,
    dataset_digest,
    dataset_names,
    dataset_text,
    is_dataset,
    load_dataset,
    resolve_problem,
)

__all__ = [
    "build_m06_ideal",
    "group_translates",
    "i1_generators",
    "GroupSpec",
    "Problem",
    "ProblemOptions",
    "ProblemSpec",
    "build_problem",
    "emit_problem",
    "load_problem",
    "parse_problem",
    "parse_problem_spec",
    "problem_digest",
    "DATASET_DIGESTS",
    "HUGE_DATASETS",
    "dataset_digest",
    "dataset_names",
    "dataset_text",
    "is_dataset",
    "load_dataset",
    "resolve_problem",
]
