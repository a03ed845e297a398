# GitFan 配置管理
"""
统一配置管理模块，支持:
- YAML 配置文件 (conf.yaml)
- 环境变量替换 ${VAR} 与 .env 覆盖
- 计算引擎、对称群、遍历、数据集、API 各自的子配置
"""

import os
import re
from functools import lru_cache
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

AFaceMethodName = Literal["fast", "sat", "rabinowitsch", "stepwise"]


def load_yaml_config(config_path: str | Path) -> dict[str, Any]:
    """加载 YAML 配置文件，支持环境变量替换"""
    config_path = Path(config_path)
    if not config_path.exists():
        return {}

    with open(config_path, "r", encoding="utf-8") as f:
        content = f.read()

    # 替换环境变量 ${VAR_NAME}，未定义的保持原样
    def replace_env_var(match: re.Match) -> str:
        return os.environ.get(match.group(1), match.group(0))

    content = re.sub(r"\$\{(\w+)\}", replace_env_var, content)
    return yaml.safe_load(content) or {}


class EngineConfig(BaseSettings):
    """多项式引擎配置"""
    aface_method: AFaceMethodName = "fast"
    variable_order: Literal["ascending", "heuristic"] = "ascending"
    heuristic_candidates: int = 4


class SymmetryConfig(BaseSettings):
    """对称群配置"""
    group_bound: int = 10_000


class TraversalConfig(BaseSettings):
    """扇遍历配置"""
    threads: int = 1
    checkpoint_every: int = 25
    memory_mode: bool = False
    max_perturbations: int = 64
    max_halvings: int = 200
    compute_fan_rays: bool = True


class DatasetConfig(BaseSettings):
    """数据集配置"""
    cache_dir: str = "./data/cache"


class APIConfig(BaseSettings):
    """API 服务配置"""
    host: str = "127.0.0.1"
    port: int = 8000
    debug: bool = False
    cors_origins: list[str] = ["http://localhost:3000"]


class Settings(BaseSettings):
    """全局配置"""

    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    engine: EngineConfig = Field(default_factory=EngineConfig)
    symmetry: SymmetryConfig = Field(default_factory=SymmetryConfig)
    traversal: TraversalConfig = Field(default_factory=TraversalConfig)
    datasets: DatasetConfig = Field(default_factory=DatasetConfig)
    api: APIConfig = Field(default_factory=APIConfig)

    # 日志
    log_level: str = "INFO"
    log_json: bool = False

    @classmethod
    def from_yaml(cls, config_path: str | Path) -> "Settings":
        """从 YAML 配置文件加载设置"""
        config = load_yaml_config(config_path)

        section_mapping = {
            "ENGINE": ("engine", EngineConfig),
            "SYMMETRY": ("symmetry", SymmetryConfig),
            "TRAVERSAL": ("traversal", TraversalConfig),
            "DATASETS": ("datasets", DatasetConfig),
            "API": ("api", APIConfig),
        }

        settings_dict: dict[str, Any] = {}
        for yaml_key, (settings_key, config_cls) in section_mapping.items():
            if yaml_key in config:
                settings_dict[settings_key] = config_cls(**(config[yaml_key] or {}))

        logging_config = config.get("LOGGING") or {}
        if "level" in logging_config:
            settings_dict["log_level"] = logging_config["level"]
        if "json" in logging_config:
            settings_dict["log_json"] = logging_config["json"]

        return cls(**settings_dict)


@lru_cache()
def get_settings() -> Settings:
    """获取全局配置单例 (可通过 GITFAN_CONFIG 指定配置文件)"""
    default_path = Path(__file__).parent.parent.parent / "conf.yaml"
    config_path = Path(os.environ.get("GITFAN_CONFIG", default_path))
    if config_path.exists():
        return Settings.from_yaml(config_path)
    return Settings()
