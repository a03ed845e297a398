# 内置数据集
"""
内置数据集注册表

每个数据集文件的 SHA-256 摘要固定在这里，加载时校验；
任何对转录数据的改动都会让加载失败。
"""

import hashlib
from pathlib import Path

from src.core import DatasetError
from src.utils import get_logger

from .m06 import build_m06_ideal, integral_form
from .problem import Problem, build_problem, load_problem, parse_problem, parse_problem_spec

logger = get_logger(__name__)

DATASET_DIR = Path(__file__).parent / "datasets"

DATASET_DIGESTS: dict[str, str] = {
    "cube": "c8286e1691a911295fb0463613c6e6d7b244a90715957ddebd8e43f4e7ac4780",
    "g25": "d6dcadfe158b6e4cf9f9dfaa17f16aec7b6b66e90ffa304f93aff07b2f43bd1d",
    "m06_raw": "aad64e008885f9abea43606253fab5ed4430834917d62e49e1c336ee02ec3eb8",
}

# 由其他数据集构造得到 (不单独存文件)
DERIVED_DATASETS = {"m06": "m06_raw"}

# 需要显式确认才允许做完整遍历
HUGE_DATASETS = {"m06"}


def dataset_names() -> list[str]:
    return [*DATASET_DIGESTS, *DERIVED_DATASETS]


def dataset_path(name: str) -> Path:
    if name not in DATASET_DIGESTS:
        raise DatasetError(f"unknown dataset {name!r}; available: {', '.join(dataset_names())}")
    return DATASET_DIR / f"{name}.json"


def dataset_digest(name: str) -> str:
    return DATASET_DIGESTS[DERIVED_DATASETS.get(name, name)]


def dataset_text(name: str) -> str:
    """读取数据集文本并校验摘要

    Raises:
        DatasetError: 未知名称或摘要不符
    """
    raw = dataset_path(name).read_bytes()
    actual = hashlib.sha256(raw).hexdigest()
    if actual != DATASET_DIGESTS[name]:
        raise DatasetError(f"dataset {name} has digest {actual[:12]}, expected {DATASET_DIGESTS[name][:12]}")
    logger.debug(f"dataset {name} digest verified")
    return raw.decode("utf-8")


def load_dataset(name: str, cache_dir: str | Path | None = None) -> Problem:
    """按名称加载内置数据集

    Args:
        name: cube / g25 / m06_raw / m06
        cache_dir: m06 理想的缓存目录
    """
    if name in DERIVED_DATASETS:
        return load_m06(cache_dir)
    return parse_problem(dataset_text(name))


def load_m06(cache_dir: str | Path | None = None) -> Problem:
    """m06_raw 加上两步饱和得到的理想"""
    raw = parse_problem(dataset_text("m06_raw"))
    ideal = build_m06_ideal(raw, cache_dir)
    source = [raw.ring.format(integral_form(g)) for g in ideal.generators]
    spec = raw.spec.model_copy(update={"name": "m06", "ideal_source": source})
    return Problem(spec=spec, ring=raw.ring, ideal=ideal, grading=raw.grading, group=raw.group)


def is_dataset(source: str) -> bool:
    return source in DATASET_DIGESTS or source in DERIVED_DATASETS


def resolve_problem(source: str | Path, cache_dir: str | Path | None = None) -> Problem:
    """数据集名称或问题文件路径"""
    if isinstance(source, str) and is_dataset(source):
        return load_dataset(source, cache_dir)
    path = Path(source)
    if not path.exists():
        raise DatasetError(f"{source} is neither a bundled dataset nor an existing file")
    return load_problem(path)


def reparse(problem: Problem) -> Problem:
    """由 spec 重新构造 (用于往返检查)"""
    return build_problem(parse_problem_spec(problem.spec.to_json()))
