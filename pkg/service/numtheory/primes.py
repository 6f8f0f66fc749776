"""
소수 판정과 소수 생성

모든 난수는 주입된 rng 핸들(random.Random 호환)에서만 가져온다.
시드가 있으면 결정적, 없으면 시스템 엔트로피를 사용한다.
"""
from __future__ import annotations

import logging
import random
from typing import TYPE_CHECKING

import gmpy2
from sympy import primerange

from service.config.settings import get_settings
from service.exceptions import ParameterError

if TYPE_CHECKING:
    from service.numtheory.factored import FactoredInteger

logger = logging.getLogger("numtheory.primes")

Rng = random.Random

_SMALL_PRIMES = tuple(int(prime) for prime in primerange(2, 256))


def make_rng(seed: int | None = None) -> Rng:
    """시드가 주어지면 결정적 생성기, 아니면 SystemRandom 반환"""
    if seed is None:
        return random.SystemRandom()
    return random.Random(seed)


def is_probable_prime(n: int, rounds: int | None = None) -> bool:
    """작은 소수로 나눠본 뒤 gmpy2 Miller-Rabin 으로 판정"""
    if n < 2:
        return False
    for prime in _SMALL_PRIMES:
        if n == prime:
            return True
        if n % prime == 0:
            return False
    if rounds is None:
        rounds = get_settings().miller_rabin_rounds
    if rounds < 1:
        raise ParameterError(f"rounds must be positive, got {rounds}")
    return bool(gmpy2.is_prime(n, rounds))


def gen_prime(bits: int, rng: Rng) -> int:
    """
    정확히 bits 비트인 확률적 소수 생성

    Args:
        bits: 비트 길이 (4 이상)
        rng: 난수 생성기

    Returns:
        최상위 비트가 켜진 소수
    """
    if bits < 4:
        raise ParameterError(f"bits must be >= 4, got {bits}")

    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(candidate):
            return candidate


def gen_prime_with_factor(r: FactoredInteger, bits: int, rng: Rng, relaxed: bool = False) -> int:
    """
    r | p-1 이고 gcd(r, (p-1)/r) = 1 인 bits 비트 소수 p 생성

    relaxed 이면 r^2 ∤ p-1 만 요구한다 (BT'94 키).

    p = r*k + 1 꼴에서 임의의 k 부터 시작해 k 를 키워가며 p 가 소수가 될 때까지 탐색한다.
    범위 끝에 닿으면 처음으로 돌아가고, 한 바퀴를 다 돌면 실패로 본다.

    Raises:
        ParameterError: bits 가 r 을 담기에 너무 작거나 후보가 없는 경우
    """
    step = r.value
    if step < 2:
        raise ParameterError("r must be at least 2")

    low = 1 << (bits - 1)
    high = (1 << bits) - 1
    k_min = -(-(low - 1) // step)
    k_max = (high - 1) // step

    # p-1 = r*k 는 짝수여야 하므로 r 의 홀짝에 따라 k 의 홀짝이 정해진다
    parity = 1 if step % 2 == 0 else 0
    first = k_min + ((parity - k_min) % 2)
    if first > k_max:
        raise ParameterError(f"{bits} bits are too few to host r={step}")
    count = (k_max - first) // 2 + 1

    start = rng.randrange(count)
    for offset in range(count):
        k = first + 2 * ((start + offset) % count)
        rejected = k % step == 0 if relaxed else gmpy2.gcd(k, step) != 1
        if rejected:
            continue
        candidate = step * k + 1
        if is_probable_prime(candidate):
            logger.debug("Found prime %d hosting r=%d after %d steps", candidate, step, offset + 1)
            return candidate

    raise ParameterError(f"no {bits}-bit prime p with r={step} dividing p-1 exactly")
