"""
결함 확률 rho = 1 - phi(r)/(r-1) 과 확장 비율
"""
import logging
import math
from fractions import Fraction
from functools import reduce
from operator import mul
from typing import Sequence

import gmpy2

from service.audit.models import ExpansionSurvey, MonteCarloEstimate
from service.exceptions import ParameterError
from service.keys.conditions import corrected_failing_primes, original_condition_holds
from service.keys.generator import KeyPair, keygen, sample_y
from service.keys.models import ConditionMode, KeyGenPolicy, PrivateKey, PublicKey, RMode
from service.numtheory.arithmetic import compute_r, random_unit
from service.numtheory.factored import FactoredInteger, euler_phi
from service.numtheory.primes import Rng, gen_prime, is_probable_prime

logger = logging.getLogger("audit.probability")

MIN_MONTECARLO_SAMPLES = 100


def failure_probability_exact(r: FactoredInteger) -> Fraction:
    """원래 조건은 통과하지만 결함이 있는 y 의 비율 (정확한 유리수)"""
    if r.value < 2:
        raise ParameterError(f"r must be >= 2, got {r.value}")
    return 1 - Fraction(euler_phi(r), r.value - 1)


def failure_probability_montecarlo(sk: PrivateKey, samples: int, rng: Rng) -> MonteCarloEstimate:
    """
    y 를 균등하게 뽑아 원래 조건 통과분 중 수정된 조건 실패 비율을 추정

    Returns:
        추정값과 이항 표준오차
    """
    if samples < MIN_MONTECARLO_SAMPLES:
        raise ParameterError(f"samples must be >= {MIN_MONTECARLO_SAMPLES}, got {samples}")

    retained = 0
    faulty = 0
    for _ in range(samples):
        y = random_unit(sk.n, rng)
        if not original_condition_holds(y, sk):
            continue
        retained += 1
        if corrected_failing_primes(y, sk):
            faulty += 1

    if retained == 0:
        raise ParameterError("no sampled y passed the original condition")

    estimate = faulty / retained
    standard_error = math.sqrt(estimate * (1 - estimate) / retained)
    logger.info("Monte Carlo rho: %.5f +/- %.5f over %d retained draws", estimate, standard_error, retained)
    return MonteCarloEstimate(
        estimate=estimate,
        standard_error=standard_error,
        samples=samples,
        retained=retained,
        faulty=faulty,
    )


def expansion_factor(pk: PublicKey) -> float:
    """bitlength(n) / bitlength(r)"""
    return pk.n.bit_length() / pk.r.value.bit_length()


def expansion_survey(bits: int, samples: int, rng: Rng) -> ExpansionSurvey:
    """algorithm1_max 키들에서 확장 비율과 그 역수의 평균"""
    if samples < 1:
        raise ParameterError(f"samples must be >= 1, got {samples}")

    policy = KeyGenPolicy(bits=bits, condition_mode=ConditionMode.CORRECTED, r_mode=RMode.ALGORITHM1_MAX)
    expansions = []
    inverses = []
    for _ in range(samples):
        pk, _ = keygen(policy, rng)
        expansions.append(expansion_factor(pk))
        inverses.append(pk.r.value.bit_length() / pk.n.bit_length())

    return ExpansionSurvey(
        bits=bits,
        samples=samples,
        mean_expansion=sum(expansions) / samples,
        mean_inverse_ratio=sum(inverses) / samples,
    )


def construct_high_rho_keypair(
    bits: int,
    rng: Rng,
    small_primes: Sequence[int] = (3, 5, 7, 11, 13),
    condition_mode: ConditionMode | str = ConditionMode.CORRECTED,
) -> KeyPair:
    """
    p = 2 * (작은 소수들의 곱) * p' + 1 꼴의 키를 만들어 rho 가 큰 r 을 얻음

    p' 은 적당한 크기의 소수에서 시작해 p 가 소수가 될 때까지 키운다.
    q 는 gcd(p-1, q-1) = 2 가 될 때까지 다시 뽑으므로 r = (작은 소수들의 곱) * p' 이다.
    """
    if any(s < 3 or not is_probable_prime(s) for s in small_primes) or len(set(small_primes)) != len(small_primes):
        raise ParameterError(f"small_primes must be distinct odd primes, got {tuple(small_primes)}")

    half = bits // 2
    core = 2 * reduce(mul, small_primes, 1)
    cofactor_bits = half - core.bit_length()
    if cofactor_bits < 8:
        raise ParameterError(f"{bits} bits leave no room for a prime cofactor")

    p_prime = gen_prime(cofactor_bits, rng)
    while p_prime in small_primes or not is_probable_prime(core * p_prime + 1):
        p_prime = int(gmpy2.next_prime(p_prime))
    p = core * p_prime + 1

    while True:
        q = gen_prime(bits - half, rng)
        if q != p and gmpy2.gcd(p - 1, q - 1) == 2:
            break

    r = compute_r(p, q)
    draft = PrivateKey(p=p, q=q, r=r, y=1)
    sk = PrivateKey(p=p, q=q, r=r, y=sample_y(draft, condition_mode, rng))
    logger.info("Constructed high-rho key: r=%s, rho=%.4f", r, float(failure_probability_exact(r)))
    return sk.public_key, sk
