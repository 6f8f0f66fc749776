"""
키 모듈: 키 타입, y 조건, 생성, 검증
"""

from .conditions import bt94_failing_primes, corrected_failing_primes, original_condition_holds, y_condition_holds
from .generator import KeyPair, keygen, keygen_with_common_r, sample_y, with_y
from .models import ConditionMode, KeyGenPolicy, PrivateKey, PublicKey, RMode
from .validation import ValidationResult, check_structure, validate_keypair

__all__ = [
    "ConditionMode",
    "RMode",
    "PublicKey",
    "PrivateKey",
    "KeyGenPolicy",
    "KeyPair",
    "ValidationResult",
    "keygen",
    "keygen_with_common_r",
    "sample_y",
    "with_y",
    "validate_keypair",
    "check_structure",
    "original_condition_holds",
    "corrected_failing_primes",
    "bt94_failing_primes",
    "y_condition_holds",
]
