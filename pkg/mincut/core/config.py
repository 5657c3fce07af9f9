"""
配置管理模块
加载 YAML 配置，支持默认配置 + 本地覆盖 + 环境变量
"""

import os
from enum import Enum
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, Field


class CheckMode(str, Enum):
    """T 侧连通性检查方式"""
    PLSA = "plsa"              # 精确: G(T) 上做 PLSA
    EDGE_NODE = "edge-node"    # 边缘节点快速判定 (待验证的假设)


class LimitsConfig(BaseModel):
    max_mc_terms: int = Field(default=20, ge=1)        # IET 允许的最大 MC 数 (2^c - 1 项)
    max_arcs: int = Field(default=24, ge=1)            # 穷举 2^m 的护栏
    max_nodes_path_check: int = Field(default=16, ge=2)


class EnumerationConfig(BaseModel):
    check: CheckMode = CheckMode.PLSA
    prune_isolated: bool = True
    prune_parent: bool = True
    cross_check: bool = True   # edge-node 模式下同时跑 plsa 记录分歧


class BenchConfig(BaseModel):
    repetitions: int = Field(default=5, ge=5)
    workers: int = Field(default=1, ge=1)
    default_probability: float = Field(default=0.9, ge=0.0, le=1.0)
    seed: int = 42


class LoggingConfig(BaseModel):
    level: str = "INFO"


class Config(BaseModel):
    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    enumeration: EnumerationConfig = Field(default_factory=EnumerationConfig)
    bench: BenchConfig = Field(default_factory=BenchConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


def load_config(config_dir: str | Path = "config") -> Config:
    """加载配置文件，优先级: 环境变量 > local.yaml > default.yaml"""
    config_dir = Path(config_dir)
    data: dict[str, Any] = {}

    default_path = config_dir / "default.yaml"
    if default_path.exists():
        with open(default_path, encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

    local_path = config_dir / "local.yaml"
    if local_path.exists():
        with open(local_path, encoding="utf-8") as f:
            local_data = yaml.safe_load(f) or {}
            data = _deep_merge(data, local_data)

    env_level = os.environ.get("MINCUT_LOG_LEVEL", "")
    if env_level:
        data.setdefault("logging", {})["level"] = env_level
    env_seed = os.environ.get("MINCUT_SEED", "")
    if env_seed:
        data.setdefault("bench", {})["seed"] = int(env_seed)

    return Config(**data)


def _deep_merge(base: dict, override: dict) -> dict:
    """深度合并两个字典"""
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = _deep_merge(result[key], value)
        else:
            result[key] = value
    return result
