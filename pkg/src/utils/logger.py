# 日志配置模块
"""
基于 structlog 的结构化日志系统

日志写到标准错误，命令行的标准输出只留给结果 (JSON/DOT)。
"""

import logging
import sys
from typing import Any

import structlog

_configured = False


def setup_logging(log_level: str = "INFO", json_format: bool = False, force: bool = False) -> None:
    """配置结构化日志

    Args:
        log_level: 日志级别
        json_format: 使用 JSON 渲染 (适合批量运行收集)
        force: 已配置时仍重新配置 (CLI 的 --log-level 使用)
    """
    global _configured
    if _configured and not force:
        return

    level = getattr(logging, log_level.upper(), logging.INFO)

    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level)

    renderer: Any
    if json_format:
        renderer = structlog.processors.JSONRenderer()
    else:
        renderer = structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty())

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.StackInfoRenderer(),
            structlog.dev.set_exc_info,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=True,
    )

    _configured = True


def get_logger(name: str = __name__) -> Any:
    """获取日志记录器"""
    setup_logging()
    return structlog.get_logger(name)
