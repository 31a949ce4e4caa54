"""
统一处理资源路径与用户数据目录。

- 项目目录：用于查找 config.example.yaml / config.yaml 以及 locales
- 用户数据目录：配置文件与日志，可通过 ABELTQFT_HOME 环境变量覆盖（测试隔离用）
"""
import os
import sys
from pathlib import Path

HOME_ENV = "ABELTQFT_HOME"


def get_base_path() -> Path:
    """获取项目根目录（abeltqft/paths.py -> abeltqft -> project_root）"""
    return Path(__file__).parent.parent


def get_locales_path() -> Path:
    """获取 locales 目录路径"""
    return Path(__file__).parent / "locales"


def get_user_data_path() -> Path:
    """获取用户数据目录（配置、日志）"""
    override = os.environ.get(HOME_ENV)
    if override:
        return Path(override)
    if sys.platform == "win32":
        base = Path(os.environ.get("APPDATA", os.path.expanduser("~")))
        return base / "AbelTqft"
    elif sys.platform == "darwin":
        return Path.home() / "Library" / "Application Support" / "AbelTqft"
    else:
        return Path.home() / ".abeltqft"


def get_config_path() -> Path:
    """获取配置文件目录"""
    path = get_user_data_path()
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_log_path() -> Path:
    """获取日志目录"""
    path = get_user_data_path() / "logs"
    path.mkdir(parents=True, exist_ok=True)
    return path
