# controller/helper/singletonHelper.py
from service.config.settings import BenalohSettings, get_settings
from service.numtheory.primes import Rng, make_rng


def get_app_settings() -> BenalohSettings:
    """설정 싱글톤"""
    return get_settings()


def get_rng(seed: int | None) -> Rng:
    """--seed 가 있으면 결정적, 없으면 시스템 엔트로피"""
    return make_rng(seed)
