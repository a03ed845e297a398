# API 路由
from . import fan, problems

__all__ = ["fan", "problems"]
