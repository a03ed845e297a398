# API 测试
"""
用 FastAPI 的 TestClient 测试 REST 接口
"""

import pytest
from fastapi.testclient import TestClient

from src.api.main import app

CUBE = {
    "name": "square",
    "vars": ["T(1)", "T(2)", "T(3)", "T(4)"],
    "ideal": ["T(1)*T(3) - T(2)*T(4)"],
    "Q": [[1, -1, -1, 1], [1, 1, -1, -1]],
    "group": {"perms": ["(1,2)(3,4)", "(1,2,3,4)"]},
}


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestRoot:
    """根路由与健康检查"""

    def test_health(self, client):
        response = client.get("/health")
        assert response.status_code == 200
        assert response.json()["status"] == "healthy"
        assert "g25" in response.json()["datasets"]

    def test_datasets(self, client):
        response = client.get("/api/v1/problems/datasets")
        assert response.json() == ["cube", "g25", "m06_raw", "m06"]


class TestProblems:
    """校验、𝔞-面与动锥"""

    def test_validate_dataset(self, client):
        response = client.post("/api/v1/problems/validate", json={"dataset": "cube"})
        assert response.status_code == 200
        assert response.json() == {"name": "cube", "r": 4, "k": 2, "group_order": 8, "generators": 1}

    def test_validate_inline(self, client):
        response = client.post("/api/v1/problems/validate", json={"problem": CUBE})
        assert response.status_code == 200
        assert response.json()["name"] == "square"

    def test_needs_exactly_one_source(self, client):
        assert client.post("/api/v1/problems/validate", json={}).status_code == 422
        both = {"dataset": "cube", "problem": CUBE}
        assert client.post("/api/v1/problems/validate", json=both).status_code == 422

    def test_invalid_problem(self, client):
        broken = dict(CUBE, Q=[[1, -1, -1, 1], [2, -2, -2, 2]])
        response = client.post("/api/v1/problems/validate", json={"problem": broken})
        assert response.status_code == 422
        assert "FullRank" in response.json()["detail"]

    def test_unknown_dataset(self, client):
        response = client.post("/api/v1/problems/validate", json={"dataset": "p1xp1"})
        assert response.status_code == 422

    def test_afaces(self, client):
        response = client.post("/api/v1/problems/afaces", json={"dataset": "cube", "method": "sat"})
        assert response.status_code == 200
        data = response.json()
        assert data["total"] == 10
        assert [o["face"] for o in data["orbits"]] == [[], [1], [1, 2], [1, 2, 3, 4]]

    def test_unknown_method(self, client):
        response = client.post("/api/v1/problems/afaces", json={"dataset": "cube", "method": "groebner"})
        assert response.status_code == 422

    def test_moving_cone(self, client):
        response = client.post("/api/v1/problems/moving-cone", json={"dataset": "g25"})
        assert response.status_code == 200
        assert response.json()["dim"] == 5


class TestFan:
    """GIT 扇计算与导出"""

    def test_compute_cube(self, client):
        response = client.post("/api/v1/fan/compute", json={"dataset": "cube"})
        assert response.status_code == 200
        data = response.json()
        assert data["orbit_lengths"] == [4]
        assert data["dataset"] == "cube"

    def test_compute_plain_inline(self, client):
        response = client.post("/api/v1/fan/compute", json={"problem": CUBE, "plain": True})
        assert response.status_code == 200
        assert response.json()["orbit_lengths"] == [1, 1, 1, 1]

    def test_huge_rejected(self, client):
        response = client.post("/api/v1/fan/compute", json={"dataset": "m06"})
        assert response.status_code == 422
        assert "Huge" in response.json()["detail"]

    def test_restricted_cube_fails(self, client):
        response = client.post("/api/v1/fan/compute", json={"dataset": "cube", "restrict_moving": True})
        assert response.status_code == 500
        assert "NoFullDimStart" in response.json()["detail"]

    def test_dot(self, client, g25_run):
        response = client.post("/api/v1/fan/dot", json=g25_run.result.model_dump(mode="json"))
        assert response.status_code == 200
        assert response.json()["dot"].startswith("graph g25 {")

    def test_mori(self, client, g25_run):
        response = client.post("/api/v1/fan/mori", json=g25_run.result.model_dump(mode="json"))
        assert response.status_code == 200
        assert set(response.json()) == {"semiample", "mori"}

    def test_mori_without_fixed_orbit(self, client, cube_run):
        response = client.post("/api/v1/fan/mori", json=cube_run.result.model_dump(mode="json"))
        assert response.status_code == 500
