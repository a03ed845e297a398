# 路由公共部分
"""
请求中的问题来源与错误映射

ValidationError → 422，其他 GitFanError → 500。
"""

import asyncio
from collections.abc import Callable
from functools import partial
from typing import Any, TypeVar

from fastapi import HTTPException
from pydantic import BaseModel

from src.core import CheckpointError, GitFanError, ValidationError
from src.ingestion import Problem, ProblemSpec, build_problem, load_dataset
from src.utils import get_logger

logger = get_logger(__name__)

T = TypeVar("T")


class ProblemRequest(BaseModel):
    """内置数据集名称，或内联的问题描述 (二选一)"""
    dataset: str | None = None
    problem: ProblemSpec | None = None


def http_error(error: GitFanError) -> HTTPException:
    status = 422 if isinstance(error, (ValidationError, CheckpointError)) else 500
    logger.warning(f"request failed with {type(error).__name__}: {error}")
    return HTTPException(status_code=status, detail=f"{type(error).__name__}: {error}")


def resolve(request: ProblemRequest) -> Problem:
    if (request.dataset is None) == (request.problem is None):
        raise ValidationError("Arguments", "give exactly one of dataset or problem")
    if request.dataset is not None:
        return load_dataset(request.dataset)
    return build_problem(request.problem)


async def in_executor(func: Callable[..., T], *args: Any, **kwargs: Any) -> T:
    """把计算放进默认执行器，并把领域错误转成 HTTP 错误"""
    loop = asyncio.get_running_loop()
    try:
        return await loop.run_in_executor(None, partial(func, *args, **kwargs))
    except GitFanError as error:
        raise http_error(error) from error
