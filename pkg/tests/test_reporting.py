# 结果输出测试
"""
测试结果 JSON、DOT 与命令行汇总
"""

import json

from src.gitfan import OrbitGraph
from src.reporting import emit_dot, emit_result_dot, emit_result_json, format_summary, parse_result_json


class TestResultJson:
    """结果 JSON"""

    def test_cube(self, cube_run):
        data = json.loads(emit_result_json(cube_run.result))
        assert data["dataset"] == "cube"
        assert data["mode"] == "symmetric"
        assert data["orbit_lengths"] == [4]
        assert data["statistics"]["orbit_length_histogram"] == {"4": 1}
        assert len(data["representatives"]) == 1
        assert set(data["representatives"][0]) == {"rays", "lineality", "inequalities", "equations"}

    def test_deterministic(self, cube_run):
        assert emit_result_json(cube_run.result) == emit_result_json(cube_run.result)

    def test_parse_back(self, g25_run):
        text = emit_result_json(g25_run.result)
        again = parse_result_json(text)
        assert again.orbit_lengths == g25_run.result.orbit_lengths
        assert again.representative_cones() == g25_run.result.representative_cones()
        assert emit_result_json(again) == text

    def test_histogram_sorted(self, g25_run):
        data = json.loads(emit_result_json(g25_run.result))
        keys = list(data["statistics"]["orbit_length_histogram"])
        assert keys == sorted(keys, key=int)


class TestDot:
    """轨道相邻图"""

    def test_g25_nodes(self, g25_run):
        dot = emit_result_dot(g25_run.result)
        assert dot.startswith("graph g25 {")
        assert sum(1 for line in dot.splitlines() if "[label=" in line and "--" not in line) == 6
        assert dot.rstrip().endswith("}")

    def test_empty_graph(self):
        assert emit_dot(OrbitGraph(orbit_lengths=[])) == "graph gitfan {\n  node [shape=circle];\n}\n"

    def test_edge_labels(self):
        graph = OrbitGraph(orbit_lengths=[1, 5], edges={(0, 1): 3, (1, 1): 1})
        lines = emit_dot(graph, name="demo").splitlines()
        assert '  o0 -- o1 [label="3"];' in lines
        assert "  o1 -- o1;" in lines
        assert '  o1 [label="5"];' in lines


class TestSummary:
    """命令行汇总"""

    def test_g25_summary(self, g25_run):
        text = format_summary(g25_run.result)
        assert "orbits: 6" in text
        assert "orbit lengths: 1, 5, 10, 10, 20, 30" in text
        assert "maximal cones: 76" in text
        assert "a-faces: 172 in 14 orbits" in text
        assert "orbit cones: 172 (36 full-dimensional)" in text
