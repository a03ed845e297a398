# 问题路由
"""
问题校验、𝔞-面与动锥
"""

from fastapi import APIRouter
from pydantic import BaseModel, Field

from src.gitfan import AFaceOrbit, ConeModel, enumerate_afaces, moving_cone
from src.ingestion import dataset_names
from src.polynomial import AFaceMethod, validate_monomial_free
from src.utils import get_logger

from .common import ProblemRequest, in_executor, resolve

logger = get_logger(__name__)
router = APIRouter()


# ==================== 请求/响应模型 ====================

class ValidateResponse(BaseModel):
    """校验结果"""
    name: str | None = None
    r: int
    k: int
    group_order: int
    generators: int


class AFacesRequest(ProblemRequest):
    """𝔞-面请求"""
    method: AFaceMethod | None = None
    workers: int = Field(default=1, ge=1)


class AFacesResponse(BaseModel):
    """𝔞-面轨道"""
    orbits: list[AFaceOrbit]
    total: int


class MovingConeResponse(BaseModel):
    """动锥"""
    dim: int
    facets: int
    cone: ConeModel


# ==================== 路由 ====================

@router.get("/datasets", response_model=list[str])
async def list_datasets():
    """内置数据集"""
    return dataset_names()


def _validate(request: ProblemRequest) -> ValidateResponse:
    problem = resolve(request)
    validate_monomial_free(problem.ideal, problem.grading)
    return ValidateResponse(
        name=problem.spec.name,
        r=problem.r,
        k=problem.k,
        group_order=len(problem.group),
        generators=len(problem.ideal),
    )


@router.post("/validate", response_model=ValidateResponse)
async def validate_problem(request: ProblemRequest):
    """解析并校验问题"""
    return await in_executor(_validate, request)


def _afaces(request: AFacesRequest) -> AFacesResponse:
    problem = resolve(request)
    orbits = enumerate_afaces(
        problem.ideal, problem.group, method=request.method, grading=problem.grading, workers=request.workers
    )
    return AFacesResponse(orbits=orbits, total=sum(o.orbit_length for o in orbits))


@router.post("/afaces", response_model=AFacesResponse)
async def list_afaces(request: AFacesRequest):
    """𝔞-面轨道代表与轨道长度"""
    return await in_executor(_afaces, request)


def _moving_cone(request: ProblemRequest) -> MovingConeResponse:
    cone = moving_cone(resolve(request).grading)
    return MovingConeResponse(dim=cone.dim, facets=len(cone.inequalities), cone=ConeModel.from_cone(cone))


@router.post("/moving-cone", response_model=MovingConeResponse)
async def get_moving_cone(request: ProblemRequest):
    """动锥"""
    return await in_executor(_moving_cone, request)
