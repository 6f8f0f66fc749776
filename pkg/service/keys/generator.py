"""
키 생성

p 와 q 는 bits/2 크기로 같게 뽑고, r 은 항상 p 쪽에 둔다.
y 는 (Z_n)* 에서 균등하게 뽑아 선택한 조건을 만족할 때까지 다시 뽑는다.
"""
import logging
from collections import Counter
from typing import Tuple

import gmpy2
from sympy import primerange

from service.config.settings import get_settings
from service.exceptions import DegenerateParameterError, ParameterError
from service.keys.conditions import y_condition_holds
from service.keys.models import ConditionMode, KeyGenPolicy, PrivateKey, PublicKey, RMode
from service.keys.validation import validate_keypair
from service.numtheory.arithmetic import compute_r, random_unit
from service.numtheory.factored import FactoredInteger
from service.numtheory.primes import Rng, gen_prime, gen_prime_with_factor

logger = logging.getLogger("keys.generator")

KeyPair = Tuple[PublicKey, PrivateKey]


def sample_y(sk: PrivateKey, mode: ConditionMode | str, rng: Rng) -> int:
    """(Z_n)* 에서 조건을 만족하는 y 를 기각 샘플링"""
    cap = get_settings().y_retry_cap
    for attempt in range(cap):
        y = random_unit(sk.n, rng)
        if y_condition_holds(y, sk, mode):
            logger.debug("Accepted y after %d draws", attempt + 1)
            return y
    raise DegenerateParameterError(f"no y satisfying the {ConditionMode(mode).value} condition after {cap} draws")


def with_y(sk: PrivateKey, y: int) -> PrivateKey:
    """y 만 바꾼 개인키"""
    return PrivateKey(p=sk.p, q=sk.q, r=sk.r, y=y)


def _finish(p: int, q: int, r: FactoredInteger, mode: ConditionMode, rng: Rng) -> KeyPair:
    draft = PrivateKey(p=p, q=q, r=r, y=1)
    sk = with_y(draft, sample_y(draft, mode, rng))

    result = validate_keypair(sk, mode)
    if not result:
        raise DegenerateParameterError(f"generated key pair is invalid: {result.reason}")

    logger.info("Generated %s key: n has %d bits, r=%s", mode.value, sk.n.bit_length(), sk.r)
    return sk.public_key, sk


def _algorithm1_max(bits: int, mode: ConditionMode, rng: Rng) -> KeyPair:
    half = bits // 2
    cap = get_settings().keygen_retry_cap
    for _ in range(cap):
        p = gen_prime(half, rng)
        q = gen_prime(bits - half, rng)
        if p == q:
            continue
        try:
            r = compute_r(p, q)
        except DegenerateParameterError:
            logger.debug("r collapsed to 1 for p=%d, q=%d, regenerating", p, q)
            continue
        except ParameterError:
            logger.debug("r for p=%d, q=%d is not smooth enough, regenerating", p, q)
            continue
        return _finish(p, q, r, mode, rng)
    raise DegenerateParameterError(f"no usable (p, q) after {cap} attempts")


def _host_r(r: FactoredInteger, bits: int, mode: ConditionMode, rng: Rng) -> KeyPair:
    """
    주어진 r 을 p-1 에 넣고 q 를 찾음

    엄격한 모드는 gcd(r, (p-1)/r) = 1, gcd(q-1, r) = 1 을,
    bt94 는 r^2 ∤ p-1, r ∤ q-1 만 요구한다.
    """
    if r.value <= 1 or r.value % 2 == 0:
        raise ParameterError(f"r={r.value} must be odd and greater than 1")

    relaxed = mode is ConditionMode.BT94
    half = bits // 2
    p = gen_prime_with_factor(r, half, rng, relaxed=relaxed)

    cap = get_settings().keygen_retry_cap
    for _ in range(cap):
        q = gen_prime(bits - half, rng)
        if q == p:
            continue
        accepted = (q - 1) % r.value != 0 if relaxed else gmpy2.gcd(q - 1, r.value) == 1
        if accepted:
            return _finish(p, q, r, mode, rng)
    raise DegenerateParameterError(f"no q compatible with r={r.value} after {cap} attempts")


def _smooth_r(bound: int, bits: int, rng: Rng) -> FactoredInteger:
    """bound 이하의 홀수 소수를 곱해 bits/2 - 8 비트 근처의 r 을 만듦"""
    half = bits // 2
    limit = half - 2
    target = max(2, half - 8)
    candidates = [int(s) for s in primerange(3, bound + 1) if int(s).bit_length() <= limit]
    if not candidates:
        raise ParameterError(f"no odd prime <= {bound} fits into {bits}-bit keys")

    chosen: Counter = Counter()
    product = 1
    while product.bit_length() < target:
        s = rng.choice(candidates)
        if (product * s).bit_length() > limit:
            break
        product *= s
        chosen[s] += 1
    return FactoredInteger.from_factors(chosen.items())


def keygen(policy: KeyGenPolicy, rng: Rng) -> KeyPair:
    """
    정책에 따라 키 쌍 생성

    Raises:
        ParameterError: 지정한 r 을 bits 안에 담을 수 없는 경우
        DegenerateParameterError: 재시도 한도를 넘긴 경우
    """
    mode = policy.condition_mode

    if policy.r_mode is RMode.ALGORITHM1_MAX:
        return _algorithm1_max(policy.bits, mode, rng)

    if policy.r_mode is RMode.PRESCRIBED:
        return _host_r(policy.r, policy.bits, mode, rng)

    cap = get_settings().keygen_retry_cap
    for _ in range(cap):
        r = _smooth_r(policy.smooth_bound, policy.bits, rng)
        try:
            return _host_r(r, policy.bits, mode, rng)
        except ParameterError as e:
            logger.debug("Could not host smooth r=%d: %s", r.value, e)
    raise DegenerateParameterError(f"no smooth r hosted after {cap} attempts")


def keygen_with_common_r(
    r: FactoredInteger, bits: int, condition_mode: ConditionMode | str, rng: Rng
) -> KeyPair:
    """여러 키가 같은 평문 공간 Z_r 을 공유하도록 r 을 고정해 생성"""
    policy = KeyGenPolicy(bits=bits, condition_mode=condition_mode, r_mode=RMode.PRESCRIBED, r=r)
    return keygen(policy, rng)
