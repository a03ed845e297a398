# M̄0,6 理想构造
"""
由 m06_raw 数据构造 M̄0,6 的 Cox 环理想

𝔞 = (I₁ + G·I₂) : (所有变量之积)^∞

- I₁ 由 6 个下标组 (i,j,k,l,m,n) 展开为三项关系
- G·I₂ 是 15 个生成元在 S₆ 作用下的全部像
- 两步饱和: 先分别饱和 I₁ 与 G·I₂，再饱和二者之和

结果以内容摘要缓存到 DATASETS.cache_dir，下次直接读取。
"""

import hashlib
import json
from collections.abc import Iterable, Sequence
from pathlib import Path

from sympy.polys.rings import PolyElement

from src.config import get_settings
from src.core import DatasetError
from src.polynomial import Ideal, PolynomialRing, parse_polynomials, positive_weight, saturate_product
from src.symmetry import SymmetryGroup, act_on_ideal
from src.utils import get_logger

from .problem import Problem, problem_digest

logger = get_logger(__name__)

I1_TUPLE_COUNT = 6
I2_GENERATOR_COUNT = 15
CACHE_VERSION = 1


def z_name(a: int, b: int, c: int) -> str:
    """z 变量只对含 1 的三元组建立，其余三元组取补集"""
    triple = set((a, b, c))
    if 1 not in triple:
        triple = set(range(1, 7)) - triple
    return "z" + "".join(str(i) for i in sorted(triple))


def x_name(a: int, b: int) -> str:
    return f"x{min(a, b)}{max(a, b)}"


def i1_generator(indices: Sequence[int]) -> str:
    """(i,j,k,l,m,n) ↦ x_ij x_kl z_ijn z_kln - x_ik x_jl z_ikn z_jln + x_il x_jk z_iln z_jkn"""
    i, j, k, l, _, n = indices
    terms = [
        (x_name(i, j), x_name(k, l), z_name(i, j, n), z_name(k, l, n)),
        (x_name(i, k), x_name(j, l), z_name(i, k, n), z_name(j, l, n)),
        (x_name(i, l), x_name(j, k), z_name(i, l, n), z_name(j, k, n)),
    ]
    first, second, third = ("*".join(t) for t in terms)
    return f"{first} - {second} + {third}"


def i1_generators(tuples: Iterable[Sequence[int]]) -> list[str]:
    generators = []
    for indices in tuples:
        if len(indices) != 6 or sorted(indices) != [1, 2, 3, 4, 5, 6]:
            raise DatasetError(f"{list(indices)} is not an arrangement of 1..6")
        generators.append(i1_generator(indices))
    return generators


def construction_sources(problem: Problem) -> tuple[list[str], list[str]]:
    """
    Raises:
        DatasetError: 缺少构造数据或个数与转录不符
    """
    construction = problem.spec.construction or {}
    tuples = construction.get("i1_tuples")
    i2 = construction.get("i2")
    if tuples is None or i2 is None:
        raise DatasetError("m06 construction data (i1_tuples, i2) is missing")
    if len(tuples) != I1_TUPLE_COUNT:
        raise DatasetError(f"expected {I1_TUPLE_COUNT} I1 index tuples, found {len(tuples)}")
    if len(i2) != I2_GENERATOR_COUNT:
        raise DatasetError(f"expected {I2_GENERATOR_COUNT} I2 generators, found {len(i2)}")
    return i1_generators(tuples), list(i2)


def _sign_free_key(f: PolyElement) -> tuple:
    forward = tuple(sorted(f.terms()))
    backward = tuple(sorted((-f).terms()))
    return min(forward, backward)


def group_translates(group: SymmetryGroup, ideal: Ideal) -> Ideal:
    """G·I: 所有群元素作用下生成元的像 (忽略符号去重)"""
    seen: dict[tuple, PolyElement] = {}
    for sigma in group.elements:
        for g in act_on_ideal(sigma, ideal).generators:
            seen.setdefault(_sign_free_key(g), g)
    logger.info(f"{len(ideal)} generators have {len(seen)} distinct translates under {len(group)} elements")
    return Ideal(ideal.ring, list(seen.values()))


def integral_form(f: PolyElement) -> PolyElement:
    _, cleared = f.clear_denoms()
    return cleared


def saturate_all(ideal: Ideal, weight: Sequence[int]) -> Ideal:
    variables = range(ideal.ring.ngens)
    return Ideal(ideal.ring, saturate_product(ideal, variables, weight))


def generators_digest(generators: Sequence[str]) -> str:
    return hashlib.sha256("\n".join(generators).encode("utf-8")).hexdigest()


def cache_path(problem: Problem, cache_dir: str | Path | None = None) -> Path:
    directory = Path(cache_dir or get_settings().datasets.cache_dir)
    return directory / f"m06_{problem_digest(problem)[:16]}.json"


def _read_cache(path: Path, ring: PolynomialRing, expected_source: str) -> Ideal | None:
    if not path.exists():
        return None
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DatasetError(f"cached m06 ideal {path} is not valid JSON: {exc.msg}") from exc
    if payload.get("version") != CACHE_VERSION or payload.get("source_digest") != expected_source:
        logger.warning(f"ignoring stale m06 cache {path}")
        return None
    generators = payload.get("generators", [])
    if generators_digest(generators) != payload.get("digest"):
        raise DatasetError(f"cached m06 ideal {path} does not match its digest")
    return Ideal(ring, parse_polynomials(generators, ring))


def _write_cache(path: Path, ideal: Ideal, source: str) -> str:
    generators = [ideal.ring.format(integral_form(g)) for g in ideal.generators]
    digest = generators_digest(generators)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"version": CACHE_VERSION, "source_digest": source, "digest": digest, "generators": generators}
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps(payload, indent=1), encoding="utf-8")
    tmp.replace(path)
    return digest


def build_m06_ideal(
    problem: Problem,
    cache_dir: str | Path | None = None,
    use_cache: bool = True,
) -> Ideal:
    """两步饱和得到 𝔞

    Args:
        problem: 由 m06_raw 数据集解析得到的问题 (理想为空，构造数据在 construction 中)
        cache_dir: 缓存目录 (缺省读配置)
        use_cache: 是否读写缓存

    Returns:
        Ideal: 饱和后理想的 Gröbner 基

    Raises:
        DatasetError: 构造数据不完整或缓存损坏
    """
    ring = problem.ring
    source = problem_digest(problem)
    path = cache_path(problem, cache_dir)
    if use_cache:
        cached = _read_cache(path, ring, source)
        if cached is not None:
            logger.info(f"loaded m06 ideal with {len(cached)} generators from {path}")
            return cached

    i1_text, i2_text = construction_sources(problem)
    i1 = Ideal(ring, parse_polynomials(i1_text, ring))
    i2 = group_translates(problem.group, Ideal(ring, parse_polynomials(i2_text, ring)))

    combined = Ideal(ring, list(i1.generators) + list(i2.generators))
    weight = positive_weight(combined, problem.grading)
    if weight is None:
        raise DatasetError("no positive weight makes the m06 generators homogeneous")

    logger.info("saturating I1")
    first = saturate_all(i1, weight)
    logger.info(f"saturating G*I2 ({len(i2)} generators)")
    second = saturate_all(i2, weight)
    logger.info("saturating the sum")
    ideal = saturate_all(Ideal(ring, list(first.generators) + list(second.generators)), weight)
    logger.info(f"m06 ideal has {len(ideal)} generators")

    if use_cache:
        digest = _write_cache(path, ideal, source)
        logger.info(f"cached m06 ideal at {path} (digest {digest[:12]})")
    return ideal
