"""
작은 키에서 (Z_n)* 의 모든 y 를 집계

n <= 2^20 이면 곱이 2^40 을 넘지 않으므로 int64 벡터 연산으로 충분하다.
"""
import logging

import numpy as np

from service.audit.models import CensusResult
from service.config.settings import get_settings
from service.exceptions import GuardError
from service.keys.models import PrivateKey

logger = logging.getLogger("audit.census")


def ensure_exhaustible(sk: PrivateKey) -> None:
    limit = get_settings().census_max_modulus
    if sk.n > limit:
        raise GuardError(f"n={sk.n} exceeds the exhaustive limit {limit}")


def vector_pow(bases: np.ndarray, exponent: int, modulus: int) -> np.ndarray:
    """원소별 bases^exponent mod modulus"""
    result = np.ones_like(bases)
    square = bases % modulus
    while exponent:
        if exponent & 1:
            result = result * square % modulus
        square = square * square % modulus
        exponent >>= 1
    return result


def unit_residues(sk: PrivateKey) -> np.ndarray:
    """(Z_n)* 의 모든 원소 (오름차순)"""
    ensure_exhaustible(sk)
    candidates = np.arange(1, sk.n, dtype=np.int64)
    return candidates[np.gcd(candidates, sk.n) == 1]


def census_y(sk: PrivateKey) -> CensusResult:
    """
    eligible: 원래 조건을 통과하는 y 의 수
    faulty:   그 중 수정된 조건을 통과하지 못하는 y 의 수

    Raises:
        GuardError: n 이 census_max_modulus 보다 큰 경우
    """
    units = unit_residues(sk)
    n = sk.n

    eligible = vector_pow(units, sk.phi // sk.r.value, n) != 1
    failing = np.zeros_like(eligible)
    for s in sk.r.primes:
        failing |= vector_pow(units, sk.phi // s, n) == 1

    result = CensusResult(eligible=int(eligible.sum()), faulty=int((eligible & failing).sum()))
    logger.info("Census over %d units: eligible=%d, faulty=%d", units.size, result.eligible, result.faulty)
    return result
