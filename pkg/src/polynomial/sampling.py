# 随机理想
"""
随机生成加权齐次理想，用于饱和方法之间的交叉验证与基准测试
"""

from collections.abc import Sequence
from itertools import product

import numpy as np

from .ordering import Monomial
from .ring import Ideal, PolynomialRing


def weighted_monomials(weight: Sequence[int], degree: int) -> list[Monomial]:
    """加权次数恰为 degree 的全部单项式 (字典序)"""
    bounds = [degree // w for w in weight]
    return [
        exps
        for exps in product(*(range(b + 1) for b in bounds))
        if sum(w * e for w, e in zip(weight, exps)) == degree
    ]


def random_partition(rng: np.random.Generator, total: int, parts: int) -> tuple[int, ...]:
    """隔板法: 把 total 随机拆成 parts 个非负整数"""
    if parts == 1:
        return (total,)
    bars = np.sort(rng.choice(total + parts - 1, parts - 1, replace=False))
    pieces = np.diff(np.concatenate(([-1], bars, [total + parts - 1]))) - 1
    return tuple(int(x) for x in pieces)


def random_homogeneous_ideal(
    ring: PolynomialRing,
    weight: Sequence[int],
    rng: np.random.Generator,
    generators: int = 2,
    max_degree: int = 4,
    terms: int = 3,
    coefficient_bound: int = 5,
) -> Ideal:
    """随机 w-齐次理想 (每个生成元至少两项，系数为非零小整数)"""
    polys = []
    while len(polys) < generators:
        degree = int(rng.integers(1, max_degree + 1))
        candidates = weighted_monomials(weight, degree)
        if len(candidates) < 2:
            continue
        count = min(len(candidates), int(rng.integers(2, terms + 1)))
        picked = rng.choice(len(candidates), count, replace=False)
        term_map = {}
        for idx in picked:
            c = 0
            while c == 0:
                c = int(rng.integers(-coefficient_bound, coefficient_bound + 1))
            term_map[candidates[int(idx)]] = c
        polys.append(term_map)
    return Ideal(ring, polys)


def random_binomial_ideal(
    ring: PolynomialRing, degree: int, size: int, rng: np.random.Generator
) -> Ideal:
    """随机齐次二项式理想 (标准次数)"""
    n = ring.ngens
    polys = []
    while len(polys) < size:
        e1 = random_partition(rng, degree, n)
        e2 = random_partition(rng, degree, n)
        if e1 == e2:
            continue
        polys.append({e1: 1, e2: -int(rng.integers(1, 4))})
    return Ideal(ring, polys)
