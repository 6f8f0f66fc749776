"""
모듈러 연산: 거듭제곱, r 계산 (Algorithm 1), 곱셈 위수, 단원 샘플링
"""
import logging

import gmpy2

from service.config.settings import get_settings
from service.exceptions import DegenerateParameterError, InconsistentOrderError, ParameterError
from service.numtheory.factored import FactoredInteger, factor_smooth
from service.numtheory.primes import Rng, is_probable_prime

logger = logging.getLogger("numtheory.arithmetic")


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base^exp mod modulus"""
    if modulus < 2:
        raise ParameterError(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise ParameterError(f"exponent must be non-negative, got {exp}")
    return int(gmpy2.powmod(base, exp, modulus))


def mod_inverse(value: int, modulus: int) -> int:
    try:
        return int(gmpy2.invert(value, modulus))
    except ZeroDivisionError as e:
        raise ParameterError(f"{value} is not invertible modulo {modulus}") from e


def compute_r(p: int, q: int, bound: int | None = None) -> FactoredInteger:
    """
    p, q 로부터 가능한 최대 r 계산

    r <- p-1; gcd(q-1, r) != 1 인 동안 r <- r / gcd(r, q-1)

    Raises:
        ParameterError: p, q 가 서로 다른 홀수 소수가 아닌 경우
        DegenerateParameterError: r 이 1 로 줄어든 경우
    """
    if p == q or p % 2 == 0 or q % 2 == 0 or not (is_probable_prime(p) and is_probable_prime(q)):
        raise ParameterError(f"p={p}, q={q} must be distinct odd primes")

    r = p - 1
    common = gmpy2.gcd(q - 1, r)
    while common != 1:
        r //= int(common)
        common = gmpy2.gcd(q - 1, r)

    if r == 1:
        raise DegenerateParameterError(f"r collapses to 1 for p={p}, q={q}")

    logger.debug("Algorithm 1 gives r=%d for p=%d, q=%d", r, p, q)
    return factor_smooth(r, bound)


def multiplicative_order(x: int, modulus: int, order_bound: FactoredInteger) -> int:
    """
    x^d = 1 인 order_bound 의 가장 작은 약수 d

    order_bound 의 소인수를 하나씩 벗겨내며 찾는다.

    Raises:
        InconsistentOrderError: x^order_bound != 1 mod modulus
    """
    x %= modulus
    if mod_pow(x, order_bound.value, modulus) != 1:
        raise InconsistentOrderError(f"{x}^{order_bound.value} != 1 mod {modulus}")

    order = order_bound.value
    for prime, exponent in order_bound.factors:
        for _ in range(exponent):
            if mod_pow(x, order // prime, modulus) != 1:
                break
            order //= prime
    return order


def random_unit(modulus: int, rng: Rng, cap: int | None = None) -> int:
    """[1, modulus) 에서 균등하게 뽑되 gcd != 1 이면 다시 뽑음"""
    if cap is None:
        cap = get_settings().nonce_retry_cap
    for _ in range(cap):
        candidate = rng.randrange(1, modulus)
        if gmpy2.gcd(candidate, modulus) == 1:
            return candidate
    raise DegenerateParameterError(f"no unit modulo {modulus} after {cap} draws")
