# 理想饱和
"""
在变量乘积处的饱和 I : (Y_1⋯Y_m)^∞

提供四种做法:
- saturate_product: 对每个 i 把 Y_i 放到决胜序列末尾，运行"边约化边除去变量幂次"的 Buchberger
- saturate_stepwise: 逐个变量求 Gröbner 基，再整体除去 Y_i 的最大幂次
- saturate_iterated_quotient: 反复做理想商 I : (∏ Y_i) 直到稳定
- contains_monomial_rabinowitsch: 只判定 ∏ Y_i ∈ √I (引入新变量 t)
"""

import time
from collections.abc import Iterable, Sequence
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

from sympy.polys.rings import PolyElement

from src.core import HypothesisViolated, NotHomogeneous
from src.core.rational import Scalar
from src.utils import get_logger

from .groebner import buchberger
from .ordering import EliminationOrdering, WeightedOrdering, standard_ordering
from .ring import (
    Ideal,
    PolynomialRing,
    is_weighted_homogeneous,
    power_of_variable,
    strip_variables,
    to_fraction_coeff,
)

logger = get_logger(__name__)


def _is_unit_basis(basis: Sequence[PolyElement]) -> bool:
    return len(basis) == 1 and basis[0].is_ground and bool(basis[0])


def saturate_variable(basis: Sequence[PolyElement], index: int) -> list[PolyElement]:
    """由 I 的 Gröbner 基得到 I : Y_index^∞ 的 Gröbner 基

    要求对每个 f ∈ basis: Y | f 当且仅当 Y | LM(f)。

    Raises:
        HypothesisViolated: 某个基元素不满足上述等价
    """
    result = []
    for f in basis:
        divides_f = power_of_variable(f, index) > 0
        divides_lead = f.LM[index] > 0
        if divides_f != divides_lead:
            raise HypothesisViolated(
                f"variable {index} divides the leading monomial but not the polynomial (or vice versa)"
            )
        result.append(strip_variables(f, [index]))
    return result


def _check_weight(ideal: Ideal, weight: Sequence[Scalar]) -> WeightedOrdering:
    ordering = WeightedOrdering(weight)
    if ordering.nvars != ideal.ring.ngens:
        raise ValueError("weight length differs from the variable count")
    if not is_weighted_homogeneous(ideal.generators, ordering.weight):
        raise NotHomogeneous(f"ideal is not homogeneous for weight {ordering.weight}")
    return ordering


def _hooked_pass(
    polys: Sequence[PolyElement], ring: PolynomialRing, ordering: WeightedOrdering, variables: Sequence[int]
) -> list[PolyElement]:
    converted = [ring.convert(p, ordering) for p in polys]
    return buchberger(converted, reduce_hook=lambda h: strip_variables(h, variables))


def saturate_product(
    ideal: Ideal,
    variables: Iterable[int],
    weight: Sequence[Scalar],
    sequence: Sequence[int] | None = None,
) -> list[PolyElement]:
    """I : (∏_{i∈variables} Y_i)^∞ 的 Gröbner 基

    第 i 轮使用把 Y_i 放在最后的 w-加权序，约化过程中随时除去
    饱和变量的最大幂次。出现常数时立即返回 [1]。

    Args:
        ideal: w-齐次理想
        variables: 饱和变量下标
        weight: 严格正的权重
        sequence: 各轮处理变量的顺序 (默认升序)

    Returns:
        最后一轮序下的 Gröbner 基
    """
    base = _check_weight(ideal, weight)
    targets = sorted(set(variables))
    order = list(sequence) if sequence is not None else targets
    if sorted(order) != targets:
        raise ValueError("sequence must list exactly the saturation variables")

    ring = ideal.ring
    basis: list[PolyElement] = list(ideal.generators_in(base))
    if not basis:
        return []
    for i in order:
        basis = _hooked_pass(basis, ring, base.with_last(i), targets)
        if _is_unit_basis(basis):
            logger.debug(f"saturation hit the unit ideal at variable {i}")
            return basis
    return basis


def saturate_stepwise(ideal: Ideal, variables: Iterable[int], weight: Sequence[Scalar]) -> list[PolyElement]:
    """逐个变量饱和: 每轮先求 Y_i 最后的 Gröbner 基，再除去 Y_i 的幂次"""
    base = _check_weight(ideal, weight)
    ring = ideal.ring
    basis: list[PolyElement] = list(ideal.generators_in(base))
    if not basis:
        return []
    for i in sorted(set(variables)):
        ordering = base.with_last(i)
        basis = buchberger([ring.convert(p, ordering) for p in basis])
        if _is_unit_basis(basis):
            return basis
        basis = buchberger(saturate_variable(basis, i))
    return basis


def _monomial_product(ring: PolynomialRing, variables: Iterable[int]) -> PolyElement:
    exps = [0] * ring.ngens
    for i in variables:
        exps[i] = 1
    return ring.from_terms({tuple(exps): 1})


def _drop_last_variable(p: PolyElement, target: PolynomialRing) -> PolyElement:
    return target.from_terms({m[:-1]: to_fraction_coeff(c) for m, c in p.items()})


def intersect_ideals(left: Ideal, right: Ideal) -> Ideal:
    """I ∩ J = (t·I + (1−t)·J) ∩ ℚ[Y]"""
    ring = left.ring
    extended = ring.extended("t")
    t_index = ring.ngens
    ordering = EliminationOrdering([t_index], standard_ordering(extended.ngens))
    t = extended.variable(t_index, ordering)
    one = extended.one(ordering)

    def lift(p: PolyElement) -> PolyElement:
        return extended.from_terms({m + (0,): to_fraction_coeff(c) for m, c in p.items()}, ordering)

    gens = [t * lift(g) for g in left.generators] + [(one - t) * lift(g) for g in right.generators]
    basis = buchberger(gens)
    kept = [_drop_last_variable(g, ring) for g in basis if all(m[t_index] == 0 for m in g.keys())]
    return Ideal(ring, kept)


def ideal_quotient(ideal: Ideal, f: PolyElement) -> Ideal:
    """I : f = (I ∩ ⟨f⟩) / f"""
    ring = ideal.ring
    f = ring.convert(f)
    if ideal.is_zero():
        return Ideal(ring, [])
    meet = intersect_ideals(ideal, Ideal(ring, [f]))
    return Ideal(ring, [g.exquo(f) for g in meet.generators_in()])


def saturate_iterated_quotient(ideal: Ideal, variables: Iterable[int]) -> Ideal:
    """反复做理想商 J ← J : ∏ Y_i，直到新的生成元都已在 J 中"""
    ring = ideal.ring
    product = _monomial_product(ring, variables)
    current = ideal
    rounds = 0
    while True:
        if current.is_zero() or current.is_unit():
            return current
        following = ideal_quotient(current, product)
        rounds += 1
        if current.contains_ideal(following):
            logger.debug(f"iterated quotient stabilised after {rounds} rounds")
            return current
        current = following


def contains_monomial_rabinowitsch(ideal: Ideal, variables: Iterable[int]) -> bool:
    """∏ Y_i ∈ √I 当且仅当 1 ∈ I + ⟨1 − t·∏ Y_i⟩"""
    if ideal.is_zero():
        return False
    ring = ideal.ring
    extended = ring.extended("t")
    t_index = ring.ngens
    exps = [0] * extended.ngens
    for i in variables:
        exps[i] = 1
    exps[t_index] = 1
    gens = [extended.from_terms({m + (0,): to_fraction_coeff(c) for m, c in g.items()}) for g in ideal.generators]
    gens.append(extended.from_terms({(0,) * extended.ngens: 1, tuple(exps): -1}))
    return _is_unit_basis(buchberger(gens))


def _first_pass(ideal: Ideal, variables: list[int], weight: tuple[int, ...], index: int) -> tuple[int, int, float]:
    base = WeightedOrdering(weight)
    start = time.perf_counter()
    basis = _hooked_pass(ideal.generators_in(base), ideal.ring, base.with_last(index), variables)
    return index, len(basis), time.perf_counter() - start


def choose_saturation_order(
    ideal: Ideal,
    variables: Iterable[int],
    weight: Sequence[Scalar],
    candidates: int = 4,
    workers: int = 1,
) -> list[int]:
    """启发式地挑选第一个饱和变量

    对前 candidates 个变量分别跑第一轮；多进程时取最先完成者，
    单进程时取基元素最少者 (同数时取下标小者)。其余变量保持升序。
    """
    targets = sorted(set(variables))
    if len(targets) <= 1:
        return targets
    base = _check_weight(ideal, weight)
    pool = targets[: max(1, candidates)]

    if workers <= 1:
        runs = [_first_pass(ideal, targets, base.weight, i) for i in pool]
        chosen = min(runs, key=lambda r: (r[1], r[0]))[0]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(pool))) as executor:
            futures = [executor.submit(_first_pass, ideal, targets, base.weight, i) for i in pool]
            done, not_done = wait(futures, return_when=FIRST_COMPLETED)
            for future in not_done:
                future.cancel()
            chosen = min((f.result() for f in done), key=lambda r: r[0])[0]

    logger.debug(f"heuristic saturation order starts with variable {chosen}")
    return [chosen] + [i for i in targets if i != chosen]
