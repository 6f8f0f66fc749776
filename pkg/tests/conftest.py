"""
공용 테스트 픽스처
"""
import random

import pytest

from service.audit.fixtures import counterexample_keypair
from service.cipher.backends import DecryptionBackendFactory
from service.keys.generator import keygen_with_common_r
from service.keys.models import ConditionMode
from service.numtheory.factored import FactoredInteger

R15 = FactoredInteger(value=15, factors=((3, 1), (5, 1)))


@pytest.fixture
def rng():
    return random.Random(20240917)


@pytest.fixture
def counterexample():
    """(241, 179, 15, 27) 키 쌍"""
    return counterexample_keypair()


@pytest.fixture
def corrected_r15(rng):
    """r = 15 인 32비트 수정 조건 키 쌍"""
    return keygen_with_common_r(R15, 32, ConditionMode.CORRECTED, rng)


@pytest.fixture(autouse=True)
def _clear_backend_cache():
    yield
    DecryptionBackendFactory.clear()
