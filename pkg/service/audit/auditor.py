"""
y 파라미터 감사

큰 키에서는 생성원 g 나 이산 로그 alpha 를 계산하지 않고,
y^((p-1)/r) mod p 의 곱셈 위수로 실제 평문 공간 r' 을 구한다.
"""
import logging
from typing import Optional, Tuple

from service.audit.models import AuditReport
from service.exceptions import DegenerateParameterError, ParameterError
from service.keys.conditions import bt94_failing_primes, corrected_failing_primes, original_condition_holds
from service.keys.models import ConditionMode, PrivateKey
from service.keys.validation import check_structure
from service.numtheory.arithmetic import mod_pow, multiplicative_order

logger = logging.getLogger("audit.auditor")


def check_original_condition(y: int, sk: PrivateKey) -> bool:
    """y^(phi/r) != 1 mod n"""
    return original_condition_holds(y, sk)


def check_corrected_condition(y: int, sk: PrivateKey) -> Tuple[bool, Tuple[int, ...]]:
    failing = corrected_failing_primes(y, sk)
    return not failing, failing


def check_bt94_condition(y: int, sk: PrivateKey) -> Tuple[bool, Tuple[int, ...]]:
    failing = bt94_failing_primes(y, sk)
    return not failing, failing


def actual_message_space(y: int, sk: PrivateKey) -> int:
    """
    실제로 구별되는 평문 공간 크기 r' = r / gcd(alpha, r)

    Raises:
        DegenerateParameterError: y^(phi/r) = 1 mod n (r' 이 자명함)
    """
    if not original_condition_holds(y, sk):
        raise DegenerateParameterError(f"y={y} fails the original condition, cleartext space is trivial")
    return _subgroup_order(y, sk)


def _subgroup_order(y: int, sk: PrivateKey) -> int:
    """y^((p-1)/r) mod p 의 곱셈 위수"""
    base = mod_pow(y, (sk.p - 1) // sk.r.value, sk.p)
    return multiplicative_order(base, sk.p, sk.r)


def craft_faulty_y(sk: PrivateKey, y_valid: int, u: int) -> int:
    """
    y' = y^u mod n

    u 가 r 의 진약수이면 y' 은 원래 조건은 통과하지만 수정된 조건은 통과하지 못하고
    실제 평문 공간은 r/u 로 줄어든다.
    """
    if u <= 1:
        raise ParameterError(f"u must be > 1, got {u}")
    if sk.r.value % u:
        raise ParameterError(f"u={u} does not divide r={sk.r.value}")
    if corrected_failing_primes(y_valid, sk):
        raise ParameterError(f"y={y_valid} does not pass the corrected condition")

    y_faulty = mod_pow(y_valid, u, sk.n)
    logger.info("Crafted faulty y with collapse factor %d (r'=%d)", u, sk.r.value // u)
    return y_faulty


def audit_key(sk: PrivateKey, y: Optional[int] = None) -> AuditReport:
    """
    키 (또는 키에 넣을 다른 y) 감사

    엄격한 구조를 만족하지 못하고 BT'94 의 완화된 구조만 만족하는 키는
    원래 조건과 수정된 조건을 mod p 판정으로 대신한다.
    원래 조건도 통과하지 못하면 r' = 1, u = r 로 보고한다.

    Raises:
        ParameterError: p, q, r 이 엄격한 구조도, 완화된 구조도 만족하지 않는 경우
    """
    structure = check_structure(sk, ConditionMode.CORRECTED)
    relaxed = not structure and check_structure(sk, ConditionMode.BT94).ok
    if not structure and not relaxed:
        raise ParameterError(f"cannot audit key: {structure.reason}")

    y = sk.y if y is None else y
    r = sk.r.value
    passes_bt94, bt94_failing = check_bt94_condition(y, sk)
    if relaxed:
        passes_original = mod_pow(y, (sk.p - 1) // r, sk.p) != 1
        passes_corrected, failing = passes_bt94, bt94_failing
    else:
        passes_original = check_original_condition(y, sk)
        passes_corrected, failing = check_corrected_condition(y, sk)
    actual = _subgroup_order(y, sk) if passes_original else 1

    report = AuditReport(
        cleartext_space=r,
        passes_original=passes_original,
        passes_corrected=passes_corrected,
        passes_bt94=passes_bt94,
        failing_primes=failing,
        actual_space=actual,
        collapse_factor=r // actual,
    )
    if passes_original and not passes_corrected:
        logger.warning("Faulty y detected: cleartext space collapses from %d to %d", r, actual)
    return report
