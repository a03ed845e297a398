# 遍历检查点
"""
遍历状态的 JSON 检查点

保存 ℋ (十进制字符串)、前沿、已发现的代表与边。写入先落到临时文件再原子替换，
中途被杀掉也不会留下半个文件。恢复时核对轨道锥表摘要与支撑锥键。
"""

import os
from pathlib import Path

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError

from src.core import CheckpointError
from src.utils import get_logger

from .models import ConeModel

logger = get_logger(__name__)

CHECKPOINT_VERSION = 1


class FrontierRecord(BaseModel):
    """前沿中的一项"""
    normal: list[int]
    owner: int
    facet: ConeModel


class EdgeRecord(BaseModel):
    source: int
    target: int
    count: int


class TraversalCheckpoint(BaseModel):
    """遍历状态"""
    version: int = CHECKPOINT_VERSION
    dataset_digest: str | None = None
    table_digest: str
    support_key: str
    ambient_dim: int
    symmetric: bool = True
    memory_mode: bool = False
    hash_store: list[str] = Field(default_factory=list)
    representatives: list[ConeModel] = Field(default_factory=list)
    representative_hashes: list[str] = Field(default_factory=list)
    frontier: list[FrontierRecord] = Field(default_factory=list)
    pending: list[int] = Field(default_factory=list)
    edges: list[EdgeRecord] = Field(default_factory=list)
    new_cones: int = 0


def save_checkpoint(state: TraversalCheckpoint, path: str | Path) -> Path:
    """原子写入"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(state.model_dump_json(), encoding="utf-8")
    os.replace(tmp, path)
    logger.info(f"checkpoint written to {path}: {len(state.representatives)} representatives, {len(state.frontier)} open facets")
    return path


def load_checkpoint(path: str | Path) -> TraversalCheckpoint:
    """读取检查点

    Raises:
        CheckpointError: 文件缺失、格式不对或版本不符
    """
    path = Path(path)
    if not path.exists():
        raise CheckpointError(f"checkpoint {path} does not exist")
    try:
        state = TraversalCheckpoint.model_validate_json(path.read_text(encoding="utf-8"))
    except PydanticValidationError as exc:
        raise CheckpointError(f"checkpoint {path} is malformed: {exc.error_count()} errors") from exc
    if state.version != CHECKPOINT_VERSION:
        raise CheckpointError(f"checkpoint version {state.version} is not supported")
    return state


def check_compatible(state: TraversalCheckpoint, table_digest: str, support_key: str, symmetric: bool) -> None:
    """
    Raises:
        CheckpointError: 检查点属于另一张表、另一个支撑锥或另一种遍历方式
    """
    if state.table_digest != table_digest:
        raise CheckpointError("checkpoint was written for a different orbit cone table")
    if state.support_key != support_key:
        raise CheckpointError("checkpoint was written for a different support cone")
    if state.symmetric != symmetric:
        raise CheckpointError("checkpoint was written in a different traversal mode")
