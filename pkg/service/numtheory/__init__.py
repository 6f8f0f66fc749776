"""
수론 모듈: 모듈러 연산, 소수, 소인수분해, 이산 로그
"""

from .arithmetic import compute_r, mod_inverse, mod_pow, multiplicative_order, random_unit
from .dlog import DLogFactory, DLogStrategy, dlog
from .factored import FactoredInteger, euler_phi, factor_smooth, format_factors, s_valuation
from .primes import Rng, gen_prime, gen_prime_with_factor, is_probable_prime, make_rng

__all__ = [
    "FactoredInteger",
    "factor_smooth",
    "format_factors",
    "euler_phi",
    "s_valuation",
    "mod_pow",
    "mod_inverse",
    "compute_r",
    "multiplicative_order",
    "random_unit",
    "DLogFactory",
    "DLogStrategy",
    "dlog",
    "Rng",
    "make_rng",
    "is_probable_prime",
    "gen_prime",
    "gen_prime_with_factor",
]
