# 结果输出
"""
结果的文本形式

- emit_result_json: GitFanResult 的 JSON (字段顺序固定，单线程下逐字节可复现)
- emit_dot: 轨道相邻图的 DOT，每个轨道一个节点，标签为轨道长度
- format_summary: 给命令行看的简短汇总
"""

import json

from src.gitfan import GitFanResult, OrbitGraph, orbit_adjacency_graph


def emit_result_json(result: GitFanResult, indent: int | None = 2) -> str:
    """结果 JSON

    直方图的键按整数升序重排后再输出。
    """
    payload = result.model_dump(mode="json")
    histogram = result.statistics.orbit_length_histogram
    payload["statistics"]["orbit_length_histogram"] = {str(k): histogram[k] for k in sorted(histogram)}
    return json.dumps(payload, indent=indent, ensure_ascii=False) + "\n"


def parse_result_json(text: str) -> GitFanResult:
    return GitFanResult.model_validate_json(text)


def emit_dot(graph: OrbitGraph, name: str = "gitfan") -> str:
    """无向图；自环表示同一轨道内的相邻锥，边标签为重数"""
    lines = [f"graph {name} {{", "  node [shape=circle];"]
    for vertex, length in enumerate(graph.orbit_lengths):
        lines.append(f'  o{vertex} [label="{length}"];')
    for (a, b), count in graph.edges.items():
        attrs = f' [label="{count}"]' if count > 1 else ""
        lines.append(f"  o{a} -- o{b}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_result_dot(result: GitFanResult) -> str:
    return emit_dot(orbit_adjacency_graph(result), name=_dot_name(result.dataset))


def _dot_name(dataset: str | None) -> str:
    if not dataset:
        return "gitfan"
    cleaned = "".join(ch if ch.isalnum() else "_" for ch in dataset)
    return cleaned if not cleaned[0].isdigit() else f"g_{cleaned}"


def format_summary(result: GitFanResult) -> str:
    stats = result.statistics
    lengths = ", ".join(str(n) for n in sorted(result.orbit_lengths))
    lines = [
        f"dataset: {result.dataset or '-'}",
        f"mode: {result.mode.value}{' (restricted to the moving cone)' if result.restricted else ''}",
        f"complete: {'yes' if result.complete else 'no (stopped early)'}",
        f"orbits: {len(result.representatives)}",
        f"orbit lengths: {lengths}",
        f"maximal cones: {stats.total_maximal_cones}",
    ]
    if stats.fan_rays is not None:
        lines.append(f"rays: {stats.fan_rays}")
    if stats.aface_orbits is not None:
        lines.append(f"a-faces: {stats.aface_count} in {stats.aface_orbits} orbits")
    if stats.orbit_cone_count is not None:
        lines.append(f"orbit cones: {stats.orbit_cone_count} ({stats.full_dim_orbit_cones} full-dimensional)")
    return "\n".join(lines) + "\n"
