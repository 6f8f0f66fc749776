"""
Benaloh 설정 관리

환경 변수(BENALOH_*) 와 .env 파일에서 값을 읽는 pydantic-settings 기반 설정
"""
import logging
from functools import lru_cache

from pydantic import AliasChoices, Field
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger("config.settings")


class BenalohSettings(BaseSettings):
    """라이브러리/CLI 전역 설정 (읽기 전용)"""

    model_config = SettingsConfigDict(env_prefix="BENALOH_", extra="ignore", frozen=True)

    # 수론
    smoothness_bound: int = Field(default=10**6, ge=2)
    miller_rabin_rounds: int = Field(default=64, ge=1)

    # 키 생성
    y_retry_cap: int = Field(default=10**4, ge=1)
    keygen_retry_cap: int = Field(default=1000, ge=1)
    nonce_retry_cap: int = Field(default=10**4, ge=1)

    # 감사
    census_max_modulus: int = Field(default=2**20, ge=2)

    # CLI
    default_backend: str = "pohlig_hellman"
    log_level: str = "WARNING"
    debug_mode: bool = Field(
        default=False,
        validation_alias=AliasChoices("BENALOH_DEBUG_MODE", "DEBUG_MODE"),
    )


@lru_cache(maxsize=1)
def get_settings() -> BenalohSettings:
    """설정 싱글톤 반환 (최초 호출 시 환경 변수를 읽음)"""
    settings = BenalohSettings()
    logger.debug("Loaded settings: %s", settings.model_dump())
    return settings
