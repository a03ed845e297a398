# M̄0,6 测试
"""
M̄0,6 的输入校验 (快) 与动锥、饱和理想、𝔞-面判定 (慢，需 --runslow)
"""

import pytest

from src.gitfan import moving_cone
from src.ingestion import build_m06_ideal, group_translates
from src.ingestion.m06 import construction_sources
from src.polynomial import AFaceMethod, Ideal, is_aface, is_homogeneous, parse_polynomials
from src.symmetry import induced_matrix, verify_ideal_invariance

# 不属于 J 的变量 (1 起) 与 𝔞_J 是否为 𝔞-面
COMPLEMENT_VERDICTS = [
    ([3, 4, 5, *range(7, 16)], False),
    ([9, 11, 12, 13, 15], False),
    ([11, 12, 13, 15], False),
    ([9, 11, 14, 15], True),
    ([9, 11, 15], True),
    ([9, 11, 13], False),
]


@pytest.fixture(scope="module")
def m06_cache(tmp_path_factory):
    return tmp_path_factory.mktemp("m06")


@pytest.fixture(scope="module")
def m06_ideal(m06_raw, m06_cache):
    return build_m06_ideal(m06_raw, cache_dir=m06_cache)


class TestM06Input:
    """转录数据的一致性"""

    def test_shape(self, m06_raw):
        assert (m06_raw.r, m06_raw.k) == (40, 16)
        assert len(m06_raw.group) == 720

    def test_generators_respect_grading(self, m06_raw):
        assert len(m06_raw.group.generators) == 5
        for sigma in m06_raw.group.generators:
            induced_matrix(sigma, m06_raw.grading)

    def test_sources_homogeneous(self, m06_raw):
        i1, i2 = construction_sources(m06_raw)
        ring = m06_raw.ring
        assert is_homogeneous(Ideal(ring, parse_polynomials(i1, ring)), m06_raw.grading)
        assert is_homogeneous(Ideal(ring, parse_polynomials(i2, ring)), m06_raw.grading)

    def test_translates_homogeneous(self, m06_raw):
        _, i2 = construction_sources(m06_raw)
        ring = m06_raw.ring
        translates = group_translates(m06_raw.group, Ideal(ring, parse_polynomials(i2, ring)))
        assert len(translates) >= 15
        assert is_homogeneous(translates, m06_raw.grading)


@pytest.mark.slow
class TestM06MovingCone:
    """动锥"""

    def test_facets(self, m06_raw):
        cone = moving_cone(m06_raw.grading)
        assert cone.dim == 16
        assert len(cone.inequalities) == 110


@pytest.mark.slow
class TestM06Ideal:
    """两步饱和得到的理想"""

    def test_properties(self, m06_raw, m06_ideal):
        assert is_homogeneous(m06_ideal, m06_raw.grading)
        assert verify_ideal_invariance(m06_raw.group, m06_ideal)
        i1, _ = construction_sources(m06_raw)
        assert all(m06_ideal.contains(f) for f in parse_polynomials(i1, m06_raw.ring))

    def test_cache_reused(self, m06_raw, m06_ideal, m06_cache):
        assert list(m06_cache.glob("m06_*.json"))
        again = build_m06_ideal(m06_raw, cache_dir=m06_cache)
        assert again.equals(m06_ideal)

    @pytest.mark.parametrize("complement,expected", COMPLEMENT_VERDICTS)
    def test_aface_verdicts(self, m06_raw, m06_ideal, complement, expected):
        face = [j for j in range(40) if j + 1 not in complement]
        verdict = is_aface(m06_ideal, face, AFaceMethod.FAST, m06_raw.grading, heuristic=True)
        assert verdict is expected
