# API 模块
from .main import app, run

__all__ = ["app", "run"]

