"""
작은 키 전용 무차별 대입 검증기

E_r(0) 을 모든 nonce 로 직접 나열하고, 생성원 g 에 대한 alpha 를 표로 구한다.
"""
import logging
from typing import FrozenSet

import numpy as np
from sympy import primitive_root

from service.audit.census import ensure_exhaustible, unit_residues, vector_pow
from service.exceptions import InconsistentOrderError
from service.keys.models import PrivateKey

logger = logging.getLogger("audit.oracle")


def rth_residues(sk: PrivateKey) -> np.ndarray:
    """E_r(0) = {u^r mod n} (정렬된 배열)"""
    units = unit_residues(sk)
    return np.unique(vector_pow(units, sk.r.value, sk.n))


def rth_residue_set(sk: PrivateKey) -> FrozenSet[int]:
    return frozenset(int(v) for v in rth_residues(sk))


def brute_force_message_space(y: int, sk: PrivateKey) -> int:
    """y^m 이 E_r(0) 에 들어가는 가장 작은 m >= 1 (y 로 구별되는 평문의 개수)"""
    residues = rth_residue_set(sk)
    accumulator = y % sk.n
    for m in range(1, sk.r.value + 1):
        if accumulator in residues:
            return m
        accumulator = accumulator * y % sk.n
    raise InconsistentOrderError(f"y^r is not an r-th residue for y={y}")


def message_space_table(sk: PrivateKey) -> tuple[np.ndarray, np.ndarray]:
    """
    모든 y 에 대한 brute_force_message_space

    Returns:
        (units, sizes) - sizes[i] 는 units[i] 로 구별되는 평문의 개수
    """
    units = unit_residues(sk)
    residues = rth_residues(sk)
    sizes = np.zeros_like(units)
    current = units.copy()
    for m in range(1, sk.r.value + 1):
        hit = (sizes == 0) & np.isin(current, residues, assume_unique=False)
        sizes[hit] = m
        current = current * units % sk.n
    return units, sizes


def is_injective(y: int, sk: PrivateKey) -> bool:
    """m -> E_r(m) 이 Z_r 에서 단사인지"""
    return brute_force_message_space(y, sk) == sk.r.value


def discrete_log_table(sk: PrivateKey) -> np.ndarray:
    """
    table[x] = alpha, g^alpha = x mod p (g 는 Z_p* 의 원시근)

    table[0] 은 쓰지 않는다.
    """
    ensure_exhaustible(sk)
    g = int(primitive_root(sk.p))
    table = np.zeros(sk.p, dtype=np.int64)
    accumulator = 1
    for alpha in range(sk.p - 1):
        table[accumulator] = alpha
        accumulator = accumulator * g % sk.p
    logger.debug("Built discrete log table mod %d with generator %d", sk.p, g)
    return table


def discrete_log_alpha(y: int, sk: PrivateKey) -> int:
    return int(discrete_log_table(sk)[y % sk.p])
