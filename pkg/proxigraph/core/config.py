"""
[INPUT]: 依赖 pydantic-settings 的 BaseSettings，依赖 python-dotenv 加载 .env，依赖 proxigraph.core.exceptions 的 BoundExceededError
[OUTPUT]: 对外提供 Settings 类和全局 settings 实例
[POS]: proxigraph/core 的配置管理器，被所有需要读取上界与日志级别的模块消费
[PROTOCOL]: 变更时更新此头部，然后检查 docs/ARCHITECTURE.md
"""

from pydantic_settings import BaseSettings, SettingsConfigDict

from .exceptions import BoundExceededError

# 穷举校验的顶点数硬上限（7 个顶点已有 2^21 张标号图）
HARD_MAX_N = 7


class Settings(BaseSettings):
    """应用全局配置"""

    # === 穷举校验配置 ===
    PROXIGRAPH_MAX_N: int = 6
    PROXIGRAPH_ORACLE_MAX_VERTICES: int = 10

    # === 实例生成配置 ===
    PROXIGRAPH_MAX_HYPERCUBE_DIM: int = 10
    PROXIGRAPH_MAX_TRUNCATION_POINTS: int = 200
    PROXIGRAPH_MAX_RANDOM_POINTS: int = 16

    # === 日志配置 ===
    PROXIGRAPH_PROGRESS_EVERY: int = 1000
    PROXIGRAPH_LOG_LEVEL: str = "INFO"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    def check_bounds(self) -> None:
        """PROXIGRAPH_MAX_N 超出 1..HARD_MAX_N 时抛出 bound-exceeded；由 CLI 入口与扫描前调用"""
        if not 1 <= self.PROXIGRAPH_MAX_N <= HARD_MAX_N:
            raise BoundExceededError(
                f"PROXIGRAPH_MAX_N 必须在 1..{HARD_MAX_N} 之间，当前为 {self.PROXIGRAPH_MAX_N}",
                code="bound-exceeded",
            )


# 全局配置实例
settings = Settings()
