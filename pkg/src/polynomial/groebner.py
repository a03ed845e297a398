# Gröbner 基
"""
Buchberger 算法 (GROEBNERNEWS2 + Gebauer–Möller 判据)

reduce_hook 用于"饱和中的 Buchberger": 每次正规形计算之后对余式应用
该钩子 (例如除去若干变量的最大幂次)，直到余式不再变化。
"""

from collections.abc import Callable, Sequence

from sympy.polys.rings import PolyElement

from src.utils import get_logger

logger = get_logger(__name__)

ReduceHook = Callable[[PolyElement], PolyElement]


def spoly(p1: PolyElement, p2: PolyElement) -> PolyElement:
    """s-多项式 lcm/LT(p1)·p1 − lcm/LT(p2)·p2 (输入先化为首一)"""
    ring = p1.ring
    p1, p2 = p1.monic(), p2.monic()
    lcm12 = ring.monomial_lcm(p1.LM, p2.LM)
    m1 = ring.monomial_div(lcm12, p1.LM)
    m2 = ring.monomial_div(lcm12, p2.LM)
    return p1.mul_monom(m1) - p2.mul_monom(m2)


def normal_form(f: PolyElement, basis: Sequence[PolyElement]) -> PolyElement:
    """完全约化: 结果中没有任何项能被 basis 的首项整除

    basis 为空时原样返回。
    """
    if not basis or not f:
        return f
    return f.rem(list(basis))


def _reduce_with_hook(g: PolyElement, divisors: list[PolyElement], hook: ReduceHook | None) -> PolyElement:
    h = g.rem(divisors) if divisors else g
    if hook is None:
        return h
    while h:
        stripped = hook(h)
        if stripped == h:
            break
        h = stripped.rem(divisors) if divisors else stripped
    return h


def _is_unit(p: PolyElement) -> bool:
    return bool(p) and p.is_ground


def buchberger(polys: Sequence[PolyElement], reduce_hook: ReduceHook | None = None) -> list[PolyElement]:
    """计算约化 Gröbner 基

    多项式的单项式序取自其所在 sympy 环。结果首一、互约化，按首项降序排列；
    理想为单位理想时返回 [1]。

    Args:
        polys: 生成元 (同一环)
        reduce_hook: 每次约化后对余式应用的变换，直到不动

    Returns:
        Gröbner 基
    """
    f = [p for p in polys if p]
    if not f:
        return []
    ring = f[0].ring
    order = ring.order

    monomial_mul = ring.monomial_mul
    monomial_div = ring.monomial_div
    monomial_lcm = ring.monomial_lcm

    # 初始互约化
    f1 = [p.monic() for p in f]
    while True:
        f = f1[:]
        f1 = []
        for i in range(len(f)):
            r = _reduce_with_hook(f[i], f[:i], reduce_hook)
            if r:
                r = r.monic()
                if _is_unit(r):
                    return [ring.one]
                f1.append(r)
        if f == f1:
            break

    index: dict[PolyElement, int] = {}
    pending: set[int] = set()
    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()

    for i, h in enumerate(f):
        index[h] = i
        pending.add(i)

    def select(P: set[tuple[int, int]]) -> tuple[int, int]:
        # 选 lcm(LM(f), LM(g)) 最小的对；同 lcm 时按下标决胜
        return min(P, key=lambda pair: (order(monomial_lcm(f[pair[0]].LM, f[pair[1]].LM)), pair))

    def normal(g: PolyElement, J: list[int]) -> tuple[tuple[int, ...], int] | None:
        h = _reduce_with_hook(g, [f[j] for j in J], reduce_hook)
        if not h:
            return None
        h = h.monic()
        if h not in index:
            index[h] = len(f)
            f.append(h)
        return h.LM, index[h]

    def update(G: set[int], B: set[tuple[int, int]], ih: int) -> tuple[set[int], set[tuple[int, int]]]:
        h = f[ih]
        mh = h.LM

        C = G.copy()
        D: set[tuple[int, int]] = set()
        while C:
            ig = C.pop()
            mg = f[ig].LM
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                m = monomial_lcm(mh, f[ip].LM)
                return monomial_div(lcm_hg, m) is not None

            if monomial_mul(mh, mg) == lcm_hg or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.add((ih, ig))

        E = set()
        while D:
            ih_, ig = D.pop()
            mg = f[ig].LM
            if monomial_mul(mh, mg) != monomial_lcm(mh, mg):
                E.add((ih_, ig))

        B_new = set()
        while B:
            ig1, ig2 = B.pop()
            mg1, mg2 = f[ig1].LM, f[ig2].LM
            lcm12 = monomial_lcm(mg1, mg2)
            if (
                monomial_div(lcm12, mh) is None
                or monomial_lcm(mg1, mh) == lcm12
                or monomial_lcm(mg2, mh) == lcm12
            ):
                B_new.add((ig1, ig2))
        B_new |= E

        G_new = {ig for ig in G if monomial_div(f[ig].LM, mh) is None}
        G_new.add(ih)
        return G_new, B_new

    while pending:
        ih = min(pending, key=lambda i: (order(f[i].LM), i))
        pending.remove(ih)
        basis, pairs = update(basis, pairs, ih)

    reductions_to_zero = 0
    while pairs:
        ig1, ig2 = select(pairs)
        pairs.remove((ig1, ig2))

        h = spoly(f[ig1], f[ig2])
        divisors = sorted(basis, key=lambda g: order(f[g].LM))
        ht = normal(h, divisors)
        if ht is None:
            reductions_to_zero += 1
            continue
        if _is_unit(f[ht[1]]):
            logger.debug("Buchberger reached the unit ideal")
            return [ring.one]
        basis, pairs = update(basis, pairs, ht[1])

    # 最终约化 (不再应用钩子)
    reduced = set()
    for ig in basis:
        others = [f[j] for j in basis if j != ig]
        r = f[ig].rem(others) if others else f[ig]
        if r:
            r = r.monic()
            if r not in index:
                index[r] = len(f)
                f.append(r)
            reduced.add(index[r])

    result = sorted((f[ig] for ig in reduced), key=lambda p: order(p.LM), reverse=True)
    logger.debug(f"Buchberger finished: {len(result)} elements, {reductions_to_zero} zero reductions")
    return result


def is_groebner(basis: Sequence[PolyElement]) -> bool:
    """Buchberger 判据: 所有 s-多项式对 basis 的正规形为 0"""
    G = [g for g in basis if g]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if normal_form(spoly(G[i], G[j]), G):
                return False
    return True


def is_reduced(basis: Sequence[PolyElement]) -> bool:
    """首一且任一元素的项都不被其他元素的首项整除"""
    ring_div = None
    for g in basis:
        if g.LC != g.ring.domain.one:
            return False
        ring_div = g.ring.monomial_div
    if ring_div is None:
        return True
    for i, g in enumerate(basis):
        for j, h in enumerate(basis):
            if i != j and any(ring_div(m, h.LM) is not None for m in g.keys()):
                return False
    return True


def leading_monomials(basis: Sequence[PolyElement]) -> list[tuple[int, ...]]:
    return [g.LM for g in basis]
