# GIT 扇路由
"""
GIT 扇计算与结果导出

超大数据集 (m06) 不接受在线计算，请用命令行并开启检查点。
"""

from fastapi import APIRouter
from pydantic import BaseModel, Field

from src.core import GitFanError, ValidationError
from src.gitfan import ConeModel, GitFanResult, PipelineOptions, extract_semiample_and_mori, run_pipeline
from src.ingestion import HUGE_DATASETS, dataset_digest, problem_digest
from src.polynomial import AFaceMethod
from src.reporting import emit_result_dot
from src.utils import get_logger

from .common import ProblemRequest, http_error, in_executor, resolve

logger = get_logger(__name__)
router = APIRouter()


# ==================== 请求/响应模型 ====================

class FanRequest(ProblemRequest):
    """GIT 扇计算请求"""
    plain: bool = False
    restrict_moving: bool | None = None
    method: AFaceMethod | None = None
    threads: int | None = Field(default=None, ge=1)
    workers: int = Field(default=1, ge=1)


class DotResponse(BaseModel):
    """DOT 文本"""
    dot: str


class MoriResponse(BaseModel):
    """半丰富锥与 Mori 锥"""
    semiample: ConeModel
    mori: ConeModel


# ==================== 路由 ====================

@router.post("/compute", response_model=GitFanResult)
async def compute_fan(request: FanRequest):
    """计算 GIT 扇 (对称遍历，plain 时为普通遍历)"""
    if request.dataset in HUGE_DATASETS:
        raise http_error(ValidationError("Huge", f"{request.dataset} must be run from the command line"))
    problem = await in_executor(resolve, request)
    options = PipelineOptions(
        method=request.method,
        workers=request.workers,
        plain=request.plain,
        restrict_moving=(
            problem.spec.options.restrict_moving if request.restrict_moving is None else request.restrict_moving
        ),
        threads=request.threads,
        dataset=problem.spec.name or request.dataset,
        dataset_digest=dataset_digest(request.dataset) if request.dataset else problem_digest(problem),
    )
    try:
        run = await run_pipeline(problem.ideal, problem.grading, problem.group, options)
    except GitFanError as error:
        raise http_error(error) from error
    logger.info(f"computed {len(run.result.representatives)} orbits for {options.dataset}")
    return run.result


@router.post("/dot", response_model=DotResponse)
async def export_dot(result: GitFanResult):
    """轨道相邻图的 DOT"""
    return DotResponse(dot=emit_result_dot(result))


def _mori(result: GitFanResult) -> MoriResponse:
    semiample, mori = extract_semiample_and_mori(result)
    return MoriResponse(semiample=ConeModel.from_cone(semiample), mori=ConeModel.from_cone(mori))


@router.post("/mori", response_model=MoriResponse)
async def mori_cone(result: GitFanResult):
    """半丰富锥及其对偶"""
    return await in_executor(_mori, result)
