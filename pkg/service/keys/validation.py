"""
키 쌍 검증

구조 제약과 선택한 y 조건을 차례로 확인하고, 처음 위반한 제약을 이름으로 돌려준다.
"""
import logging
from typing import Optional

import gmpy2
from pydantic import BaseModel, ConfigDict

from service.keys.conditions import bt94_failing_primes, corrected_failing_primes, original_condition_holds
from service.keys.models import ConditionMode, PrivateKey
from service.numtheory.factored import s_valuation
from service.numtheory.primes import is_probable_prime

logger = logging.getLogger("keys.validation")


class ValidationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def _fail(reason: str) -> ValidationResult:
    logger.debug("Key pair rejected: %s", reason)
    return ValidationResult(ok=False, reason=reason)


def check_structure(sk: PrivateKey, mode: ConditionMode | str = ConditionMode.CORRECTED) -> ValidationResult:
    """
    p, q, r 사이의 구조 제약만 확인

    original/corrected 는 엄격한 제약 (gcd(r, (p-1)/r) = 1, gcd(r, q-1) = 1),
    bt94 는 완화된 제약 (r^2 ∤ p-1, r ∤ q-1) 을 사용한다.
    """
    mode = ConditionMode(mode)
    r = sk.r.value

    if not is_probable_prime(sk.p):
        return _fail("p is not prime")
    if not is_probable_prime(sk.q):
        return _fail("q is not prime")
    if (sk.p - 1) % r:
        return _fail("r does not divide p-1")

    if mode is ConditionMode.BT94:
        if (sk.p - 1) % (r * r) == 0:
            return _fail("r^2 divides p-1")
        if (sk.q - 1) % r == 0:
            return _fail("r divides q-1")
        return ValidationResult(ok=True)

    if gmpy2.gcd(r, (sk.p - 1) // r) != 1:
        return _fail("gcd(r, (p-1)/r) != 1")
    if gmpy2.gcd(r, sk.q - 1) != 1:
        return _fail("gcd(r, q-1) != 1")
    for s in sk.r.primes:
        if s_valuation(r, s) != s_valuation(sk.p - 1, s):
            return _fail(f"v_s(r) != v_s(p-1) for s = {s}")
    return ValidationResult(ok=True)


def validate_keypair(sk: PrivateKey, condition_mode: ConditionMode | str) -> ValidationResult:
    """구조 제약과 condition_mode 의 y 조건을 모두 확인"""
    mode = ConditionMode(condition_mode)
    structure = check_structure(sk, mode)
    if not structure:
        return structure

    if mode is ConditionMode.ORIGINAL:
        if not original_condition_holds(sk.y, sk):
            return _fail("y^(phi/r) = 1 mod n")
    elif mode is ConditionMode.CORRECTED:
        failing = corrected_failing_primes(sk.y, sk)
        if failing:
            return _fail(f"y^(phi/s) = 1 mod n for s = {failing[0]}")
    else:
        failing = bt94_failing_primes(sk.y, sk)
        if failing:
            return _fail(f"y^((p-1)/s) = 1 mod p for s = {failing[0]}")
    return ValidationResult(ok=True)
