# 命令行入口
"""
gitfan 命令行

子命令:
    validate    解析并校验问题
    afaces      𝔞-面轨道代表与轨道长度
    orbitcones  轨道锥表统计
    gitfan      完整的 GIT 扇计算 (对称遍历或 --plain 普通遍历)
    movingcone  动锥
    dual        对偶锥 (给定锥，或结果中半丰富锥的对偶即 Mori 锥)
    bench       各饱和方法计时

PROBLEM 参数可以是内置数据集名称 (cube, g25, m06_raw, m06) 或问题文件路径。

退出码: 0 成功；2 输入校验或检查点错误；3 计算错误。诊断信息写到标准错误。
"""

import functools
import json
import sys
import time
from collections.abc import Callable
from pathlib import Path
from typing import Any

import click
import numpy as np

from src.cones import Cone
from src.config import get_settings
from src.core import CheckpointError, GitFanError, IntMatrix, ValidationError
from src.gitfan import (
    PipelineOptions,
    compute_git_fan,
    enumerate_afaces,
    extract_semiample_and_mori,
    moving_cone,
)
from src.gitfan.pipeline import build_table
from src.ingestion import HUGE_DATASETS, Problem, dataset_digest, is_dataset, problem_digest, resolve_problem
from src.polynomial import AFaceMethod, PolynomialRing, is_aface, t_variables, validate_monomial_free
from src.polynomial.sampling import random_homogeneous_ideal
from src.reporting import emit_result_dot, emit_result_json, format_summary, parse_result_json
from src.symmetry import face_of, subset_orbit_representatives
from src.utils import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3

METHOD_CHOICES = ["fast", "sat", "ra", "rabinowitsch", "stepwise"]


def exit_code_for(error: GitFanError) -> int:
    if isinstance(error, (ValidationError, CheckpointError)):
        return EXIT_VALIDATION
    return EXIT_COMPUTATION


def handle_errors(command: Callable[..., Any]) -> Callable[..., Any]:
    """把 GitFanError 转成退出码与一行诊断"""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except GitFanError as error:
            click.echo(f"error: {type(error).__name__}: {error}", err=True)
            raise click.exceptions.Exit(exit_code_for(error)) from error

    return wrapper


def parse_method(value: str | None) -> AFaceMethod | None:
    if value is None:
        return None
    if value == "ra":
        return AFaceMethod.RABINOWITSCH
    try:
        return AFaceMethod(value)
    except ValueError as exc:
        raise ValidationError("Method", f"unknown a-face method {value!r}") from exc


def load(source: str) -> Problem:
    return resolve_problem(source)


def source_digest(source: str, problem: Problem) -> str:
    return dataset_digest(source) if is_dataset(source) else problem_digest(problem)


def echo_json(payload: Any) -> None:
    click.echo(json.dumps(payload, indent=2))


@click.group()
@click.option("--log-level", default=None, help="日志级别 (缺省读配置)")
@click.option("--json-logs", is_flag=True, help="日志以 JSON 输出")
def cli(log_level: str | None, json_logs: bool) -> None:
    """GIT 扇计算"""
    settings = get_settings()
    explicit = log_level is not None or json_logs
    setup_logging(log_level or settings.log_level, json_logs or settings.log_json, force=explicit)


@cli.command()
@click.argument("problem")
@handle_errors
def validate(problem: str) -> None:
    """解析并校验 (齐次性、满秩、群相容、不含单项式)"""
    loaded = load(problem)
    validate_monomial_free(loaded.ideal, loaded.grading)
    click.echo(
        f"ok: r={loaded.r} k={loaded.k} |G|={len(loaded.group)} generators={len(loaded.ideal)}"
    )


@cli.command()
@click.argument("problem")
@click.option("--method", type=click.Choice(METHOD_CHOICES), default=None)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="以 JSON 输出")
@handle_errors
def afaces(problem: str, method: str | None, workers: int, as_json: bool) -> None:
    """𝔞-面轨道代表 (变量下标从 1 开始) 与轨道长度"""
    loaded = load(problem)
    orbits = enumerate_afaces(
        loaded.ideal, loaded.group, method=parse_method(method), grading=loaded.grading, workers=workers
    )
    total = sum(o.orbit_length for o in orbits)
    if as_json:
        echo_json({"orbits": [o.model_dump() for o in orbits], "total": total})
        return
    for orbit in orbits:
        click.echo(f"{orbit.face}  {orbit.orbit_length}")
    click.echo(f"{len(orbits)} orbits, {total} a-faces")


@cli.command()
@click.argument("problem")
@click.option("--method", type=click.Choice(METHOD_CHOICES), default=None)
@click.option("--workers", type=int, default=1, show_default=True)
@click.option("--reduction", type=click.Choice(["minimal", "omega1", "omega2"]), default="minimal", show_default=True)
@handle_errors
def orbitcones(problem: str, method: str | None, workers: int, reduction: str) -> None:
    """轨道锥表 Ω 及其全维部分的轨道统计"""
    loaded = load(problem)
    orbits = enumerate_afaces(
        loaded.ideal, loaded.group, method=parse_method(method), grading=loaded.grading, workers=workers
    )
    omega, table = build_table(orbits, loaded.grading, loaded.group, reduction)
    full = omega.full_dimensional()
    click.echo(f"orbit cones: {len(omega)}")
    click.echo(f"full-dimensional: {len(full)} in orbits {omega.orbit_lengths(full)}")
    click.echo(f"traversal table ({reduction}): {len(table)}")


@cli.command()
@click.argument("problem")
@click.option("--plain", is_flag=True, help="不用对称性，枚举全部极大锥")
@click.option("--restrict-moving/--no-restrict-moving", default=None, help="限制在动锥内 (缺省读问题文件)")
@click.option("--threads", type=int, default=None)
@click.option("--workers", type=int, default=1, show_default=True, help="𝔞-面判定的并发数")
@click.option("--checkpoint", type=click.Path(dir_okay=False, path_type=Path), default=None)
@click.option("--resume", is_flag=True, help="从检查点继续")
@click.option("--stop-after", type=int, default=None, help="发现这么多个新锥后停下并写检查点")
@click.option("--method", type=click.Choice(METHOD_CHOICES), default=None)
@click.option("--reduction", type=click.Choice(["minimal", "omega1", "omega2"]), default="minimal")
@click.option("--memory-mode/--frontier-mode", default=None, help="省内存的遍历方式 (缺省读配置)")
@click.option("--no-rays", is_flag=True, help="不统计扇的射线")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None, help="结果 JSON")
@click.option("--dot", type=click.Path(dir_okay=False, path_type=Path), default=None, help="轨道相邻图 DOT")
@click.option("--json", "as_json", is_flag=True, help="把结果 JSON 写到标准输出")
@click.option("--i-know-this-is-huge", "huge", is_flag=True, help="允许在 m06 上做完整计算")
@handle_errors
def gitfan(
    problem: str,
    plain: bool,
    restrict_moving: bool | None,
    threads: int | None,
    workers: int,
    checkpoint: Path | None,
    resume: bool,
    stop_after: int | None,
    method: str | None,
    reduction: str,
    memory_mode: bool | None,
    no_rays: bool,
    output: Path | None,
    dot: Path | None,
    as_json: bool,
    huge: bool,
) -> None:
    """完整的 GIT 扇计算"""
    if problem in HUGE_DATASETS:
        if not huge:
            raise ValidationError("Huge", f"{problem} needs --i-know-this-is-huge")
        if checkpoint is None:
            raise ValidationError("Huge", f"{problem} needs --checkpoint")

    loaded = load(problem)
    file_options = loaded.spec.options
    checkpoint = checkpoint or (Path(file_options.checkpoint) if file_options.checkpoint else None)
    if resume and checkpoint is None:
        raise ValidationError("Checkpoint", "--resume needs --checkpoint")
    options = PipelineOptions(
        method=parse_method(method or file_options.method),
        workers=workers,
        reduction=reduction,
        plain=plain,
        restrict_moving=file_options.restrict_moving if restrict_moving is None else restrict_moving,
        threads=threads or file_options.threads,
        memory_mode=memory_mode,
        checkpoint=checkpoint,
        resume=resume,
        stop_after=stop_after,
        compute_fan_rays=False if no_rays else None,
        dataset=loaded.spec.name or problem,
        dataset_digest=source_digest(problem, loaded),
    )
    run = compute_git_fan(loaded.ideal, loaded.grading, loaded.group, options)
    result = run.result

    text = emit_result_json(result)
    if output is not None:
        output.write_text(text, encoding="utf-8")
        logger.info(f"wrote result to {output}")
    if dot is not None:
        dot.write_text(emit_result_dot(result), encoding="utf-8")
        logger.info(f"wrote adjacency graph to {dot}")
    click.echo(text if as_json else format_summary(result), nl=False)


@cli.command()
@click.argument("problem")
@click.option("--rays", "show_rays", is_flag=True, help="同时输出极射线 (可能很多)")
@handle_errors
def movingcone(problem: str, show_rays: bool) -> None:
    """动锥 Mov = ⋂ cone(q_j : j ≠ i)"""
    loaded = load(problem)
    cone = moving_cone(loaded.grading)
    click.echo(f"dimension: {cone.dim}")
    click.echo(f"facets: {len(cone.inequalities)}")
    if show_rays:
        click.echo(f"rays: {len(cone.rays)}")
        for ray in cone.rays:
            click.echo(" ".join(str(x) for x in ray))


def _read_vectors(text: str) -> list[list[int]]:
    try:
        vectors = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError("Parse", f"vectors must be a JSON list of integer lists: {exc.msg}") from exc
    if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
        raise ValidationError("Parse", "vectors must be a JSON list of integer lists")
    return vectors


@cli.command()
@click.option("--rays", "rays_text", default=None, help="锥的生成元，JSON 形式 [[...], ...]")
@click.option("--inequalities", "inequalities_text", default=None, help="锥的不等式，JSON 形式")
@click.option("--result", "result_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="gitfan 结果 JSON: 输出半丰富锥与其对偶 (Mori 锥)")
@handle_errors
def dual(rays_text: str | None, inequalities_text: str | None, result_path: Path | None) -> None:
    """对偶锥"""
    given = [x is not None for x in (rays_text, inequalities_text, result_path)]
    if sum(given) != 1:
        raise ValidationError("Arguments", "give exactly one of --rays, --inequalities, --result")
    if result_path is not None:
        result = parse_result_json(result_path.read_text(encoding="utf-8"))
        semiample, mori = extract_semiample_and_mori(result)
        echo_json({"semiample": semiample.to_dict(), "mori": mori.to_dict()})
        return
    if rays_text is not None:
        cone = Cone.from_rays(_read_vectors(rays_text))
    else:
        cone = Cone.from_inequalities(_read_vectors(inequalities_text or "[]"))
    echo_json(cone.dual().to_dict())


def _time_methods(ideal: Any, face: tuple[int, ...], grading: IntMatrix | None) -> list[tuple[str, bool, float]]:
    rows = []
    for method in AFaceMethod:
        started = time.perf_counter()
        verdict = is_aface(ideal, face, method, grading)
        rows.append((method.value, verdict, time.perf_counter() - started))
    return rows


@cli.command()
@click.argument("problem", required=False)
@click.option("--limit", type=int, default=None, help="只测前若干个面轨道代表")
@click.option("--random", "random_count", type=int, default=0, help="改为测随机齐次理想的个数")
@click.option("--variables", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@handle_errors
def bench(problem: str | None, limit: int | None, random_count: int, variables: int, seed: int) -> None:
    """各饱和方法在 𝔞-面判定上的耗时 (仅供参考)"""
    click.echo("case\tmethod\tverdict\tseconds")
    if random_count:
        rng = np.random.default_rng(seed)
        ring = PolynomialRing(t_variables(variables))
        for case in range(random_count):
            weight = tuple(int(x) for x in rng.integers(1, 4, size=variables))
            ideal = random_homogeneous_ideal(ring, weight, rng, generators=int(rng.integers(1, 5)))
            grading = IntMatrix.from_rows([weight])
            for method, verdict, seconds in _time_methods(ideal, tuple(range(variables)), grading):
                click.echo(f"random-{case}\t{method}\t{'yes' if verdict else 'no'}\t{seconds:.4f}")
        return
    if problem is None:
        raise ValidationError("Arguments", "give a problem or --random N")

    loaded = load(problem)
    representatives = subset_orbit_representatives(loaded.group, loaded.r)
    if limit is not None:
        representatives = representatives[:limit]
    for mask, _ in representatives:
        face = face_of(mask)
        label = "{" + ",".join(str(i + 1) for i in face) + "}"
        for method, verdict, seconds in _time_methods(loaded.ideal, face, loaded.grading):
            click.echo(f"{label}\t{method}\t{'yes' if verdict else 'no'}\t{seconds:.4f}")


def main(argv: list[str] | None = None) -> int:
    """运行命令行并返回退出码"""
    try:
        code = cli.main(args=argv, prog_name="gitfan", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("aborted", err=True)
        return 1
    return code if isinstance(code, int) else 0


def run() -> None:
    sys.exit(main())
