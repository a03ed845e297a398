# 结果输出模块
from .serializers import emit_dot, emit_result_dot, emit_result_json, format_summary, parse_result_json

__all__ = ["emit_dot", "emit_result_dot", "emit_result_json", "format_summary", "parse_result_json"]
