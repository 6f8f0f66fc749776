"""
y 에 대한 세 가지 조건

  original  : y^(phi/r) != 1 mod n
  corrected : 모든 소인수 s | r 에 대해 y^(phi/s) != 1 mod n
  bt94      : 모든 소인수 s | r 에 대해 y^((p-1)/s) != 1 mod p
"""
from typing import Tuple

import gmpy2

from service.exceptions import ParameterError
from service.keys.models import ConditionMode, PrivateKey
from service.numtheory.arithmetic import mod_pow


def _require_unit(y: int, sk: PrivateKey) -> None:
    if gmpy2.gcd(y, sk.n) != 1:
        raise ParameterError(f"y={y} is not a unit modulo n")


def original_condition_holds(y: int, sk: PrivateKey) -> bool:
    _require_unit(y, sk)
    return mod_pow(y, sk.phi // sk.r.value, sk.n) != 1


def corrected_failing_primes(y: int, sk: PrivateKey) -> Tuple[int, ...]:
    """y^(phi/s) = 1 mod n 이 되는 소인수 s 목록"""
    _require_unit(y, sk)
    return tuple(s for s in sk.r.primes if mod_pow(y, sk.phi // s, sk.n) == 1)


def bt94_failing_primes(y: int, sk: PrivateKey) -> Tuple[int, ...]:
    """y^((p-1)/s) = 1 mod p 이 되는 소인수 s 목록"""
    _require_unit(y, sk)
    return tuple(s for s in sk.r.primes if mod_pow(y, (sk.p - 1) // s, sk.p) == 1)


def y_condition_holds(y: int, sk: PrivateKey, mode: ConditionMode | str) -> bool:
    mode = ConditionMode(mode)
    if mode is ConditionMode.ORIGINAL:
        return original_condition_holds(y, sk)
    if mode is ConditionMode.CORRECTED:
        return not corrected_failing_primes(y, sk)
    return not bt94_failing_primes(y, sk)
