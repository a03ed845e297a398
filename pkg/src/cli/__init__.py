# 命令行模块
from .main import cli, exit_code_for, main, run

__all__ = ["cli", "exit_code_for", "main", "run"]
