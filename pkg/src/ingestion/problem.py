# 问题文件解析
"""
问题文件 (JSON) 解析与校验

格式:
    {"vars": [...], "ideal": ["...", ...], "Q": [[int]],
     "group": {"perms": ["(1,2)(3,4)", ...], "signs": [[±1, ...], ...]},
     "options": {...}}

校验: Q 满秩、变量数等于 Q 的列数、理想关于 Q 齐次、每个群生成元诱导出 A_σ 且保持理想。
"""

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError

from src.config import get_settings
from src.core import IntMatrix, NotASymmetry, ParseError, ValidationError, rank
from src.polynomial import Ideal, PolynomialRing, is_homogeneous, parse_polynomials
from src.symmetry import SignedPermutation, SymmetryGroup, verify_ideal_invariance
from src.utils import get_logger

logger = get_logger(__name__)


class GroupSpec(BaseModel):
    """对称群生成元 (1 起的轮换记号，可选符号向量)"""
    perms: list[str] = Field(default_factory=list)
    signs: list[list[int]] | None = None


class ProblemOptions(BaseModel):
    """问题文件中的默认选项"""
    restrict_moving: bool = False
    method: str | None = None
    threads: int | None = None
    checkpoint: str | None = None


class ProblemSpec(BaseModel):
    """问题描述"""
    name: str | None = None
    variable_names: list[str] = Field(alias="vars")
    ideal_source: list[str] = Field(default_factory=list, alias="ideal")
    grading: list[list[int]] = Field(alias="Q")
    group: GroupSpec = Field(default_factory=GroupSpec)
    options: ProblemOptions = Field(default_factory=ProblemOptions)
    construction: dict[str, Any] | None = None

    model_config = {"populate_by_name": True}

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2)


@dataclass
class Problem:
    """解析并校验后的问题"""
    spec: ProblemSpec
    ring: PolynomialRing
    ideal: Ideal
    grading: IntMatrix
    group: SymmetryGroup

    @property
    def r(self) -> int:
        return self.grading.ncols

    @property
    def k(self) -> int:
        return self.grading.nrows


def _json_position(text: str, exc: json.JSONDecodeError) -> ParseError:
    return ParseError(exc.msg, exc.lineno, exc.colno)


def parse_problem_spec(text: str) -> ProblemSpec:
    """只做语法层面的解析

    Raises:
        ParseError: JSON 格式错误
        ValidationError: 字段缺失或类型不对
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise _json_position(text, exc) from exc
    try:
        return ProblemSpec.model_validate(data)
    except PydanticValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(p) for p in first["loc"])
        raise ValidationError("Schema", f"{location}: {first['msg']}") from exc


def build_grading(spec: ProblemSpec) -> IntMatrix:
    """
    Raises:
        ValidationError: 非矩形、列数与变量数不符或不满秩
    """
    try:
        grading = IntMatrix.from_rows(spec.grading)
    except ValueError as exc:
        raise ValidationError("Dimension", str(exc)) from exc
    if grading.ncols != len(spec.variable_names):
        raise ValidationError(
            "Dimension", f"Q has {grading.ncols} columns but there are {len(spec.variable_names)} variables"
        )
    if rank(grading.rows) != grading.nrows:
        raise ValidationError("FullRank", f"Q has rank {rank(grading.rows)} < {grading.nrows}")
    return grading


def build_group(spec: ProblemSpec, grading: IntMatrix, bound: int | None = None) -> SymmetryGroup:
    """
    Raises:
        ValidationError: 生成元记号错误、符号向量个数不符或群不保持 ker Q
    """
    r = grading.ncols
    perms = spec.group.perms or ["()"]
    signs = spec.group.signs
    if signs is not None and len(signs) != len(perms):
        raise ValidationError("GroupCompatibility", f"{len(signs)} sign vectors for {len(perms)} generators")
    generators = [
        SignedPermutation.parse(text, r, signs[i] if signs is not None else None) for i, text in enumerate(perms)
    ]
    bound = bound or get_settings().symmetry.group_bound
    try:
        return SymmetryGroup(generators, grading, bound)
    except NotASymmetry as exc:
        raise ValidationError("GroupCompatibility", str(exc)) from exc


def build_problem(spec: ProblemSpec, check_invariance: bool = True) -> Problem:
    """由语法层面的描述构造并校验完整问题

    Raises:
        ParseError: 多项式解析错误
        ValidationError: Homogeneity / FullRank / GroupCompatibility 等
    """
    if len(set(spec.variable_names)) != len(spec.variable_names):
        raise ValidationError("Variables", "variable names are not distinct")
    grading = build_grading(spec)
    ring = PolynomialRing(spec.variable_names)
    ideal = Ideal(ring, parse_polynomials(spec.ideal_source, ring))
    if not is_homogeneous(ideal, grading):
        raise ValidationError("Homogeneity", "the ideal is not homogeneous with respect to Q")
    group = build_group(spec, grading)
    if check_invariance and not verify_ideal_invariance(group, ideal):
        raise ValidationError("GroupCompatibility", "the group does not leave the ideal invariant")
    logger.info(f"problem {spec.name or ''} has r={grading.ncols}, k={grading.nrows}, |G|={len(group)}")
    return Problem(spec=spec, ring=ring, ideal=ideal, grading=grading, group=group)


def parse_problem(text: str, check_invariance: bool = True) -> Problem:
    """解析并校验问题文本"""
    return build_problem(parse_problem_spec(text), check_invariance)


def load_problem(path: str | Path, check_invariance: bool = True) -> Problem:
    return parse_problem(Path(path).read_text(encoding="utf-8"), check_invariance)


def emit_problem(spec: ProblemSpec) -> str:
    return spec.to_json()


def problem_digest(problem: Problem) -> str:
    """规范化问题文本的 SHA-256 (写入检查点与缓存)"""
    return hashlib.sha256(problem.spec.to_json().encode("utf-8")).hexdigest()
