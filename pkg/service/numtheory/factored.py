"""
소인수분해와 함께 다니는 정수 (r 과 그 소인수 s, s^k 를 담는다)
"""
from __future__ import annotations

import logging
from itertools import product
from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import primerange

from service.config.settings import get_settings
from service.exceptions import ParameterError
from service.numtheory.primes import is_probable_prime

logger = logging.getLogger("numtheory.factored")


class FactoredInteger(BaseModel):
    """양의 정수와 그 완전한 소인수분해"""

    model_config = ConfigDict(frozen=True)

    value: int = Field(gt=0)
    factors: Tuple[Tuple[int, int], ...] = ()

    @model_validator(mode="after")
    def _check_factorization(self) -> "FactoredInteger":
        total = 1
        previous = 1
        for prime, exponent in self.factors:
            if prime <= previous:
                raise ValueError("primes must be strictly increasing")
            if exponent < 1:
                raise ValueError(f"exponent of {prime} must be >= 1")
            if not is_probable_prime(prime):
                raise ValueError(f"{prime} is not prime")
            total *= prime**exponent
            previous = prime
        if total != self.value:
            raise ValueError(f"factors multiply to {total}, expected {self.value}")
        return self

    @classmethod
    def from_factors(cls, factors: Iterable[Tuple[int, int]]) -> "FactoredInteger":
        """(prime, exponent) 목록으로 생성 (같은 소수는 합치고 정렬)"""
        merged: dict[int, int] = {}
        for prime, exponent in factors:
            merged[prime] = merged.get(prime, 0) + exponent
        ordered = tuple(sorted(merged.items()))
        value = 1
        for prime, exponent in ordered:
            value *= prime**exponent
        return cls(value=value, factors=ordered)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(prime for prime, _ in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def divisors(self) -> list[int]:
        """모든 양의 약수 (오름차순)"""
        powers = [[prime**e for e in range(exponent + 1)] for prime, exponent in self.factors]
        result = []
        for combo in product(*powers):
            divisor = 1
            for part in combo:
                divisor *= part
            result.append(divisor)
        return sorted(result)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return format_factors(self)


def format_factors(number: FactoredInteger) -> str:
    """'3^2,5' 형태 (지수 1 은 생략)"""
    return ",".join(str(prime) if exponent == 1 else f"{prime}^{exponent}" for prime, exponent in number.factors)


def factor_smooth(value: int, bound: int | None = None) -> FactoredInteger:
    """
    bound 이하 소수로 나눠보고, 남은 큰 인수 하나는 소수 판정으로 허용

    Args:
        value: 분해할 양의 정수
        bound: 시행 나눗셈 상한 (기본값: 설정의 smoothness_bound)

    Raises:
        ParameterError: 남은 인수가 소수가 아닌 경우
    """
    if value < 1:
        raise ParameterError(f"cannot factor {value}")
    if bound is None:
        bound = get_settings().smoothness_bound

    if value > 1 and is_probable_prime(value):
        return FactoredInteger(value=value, factors=((value, 1),))

    remaining = value
    factors = []
    for prime in map(int, primerange(2, bound + 1)):
        if remaining == 1 or prime * prime > remaining:
            break
        if remaining % prime:
            continue
        exponent = 0
        while remaining % prime == 0:
            remaining //= prime
            exponent += 1
        factors.append((prime, exponent))
        if remaining > 1 and is_probable_prime(remaining):
            break

    if remaining > 1:
        if not is_probable_prime(remaining):
            raise ParameterError(f"{value} is not {bound}-smooth up to one prime cofactor")
        factors.append((remaining, 1))

    logger.debug("Factored %d into %s", value, factors)
    return FactoredInteger(value=value, factors=tuple(factors))


def euler_phi(number: FactoredInteger) -> int:
    """소인수분해로부터 정확히 계산한 오일러 함수"""
    phi = 1
    for prime, exponent in number.factors:
        phi *= (prime - 1) * prime ** (exponent - 1)
    return phi


def s_valuation(value: int, s: int) -> int:
    """value 의 소인수분해에서 s 의 지수"""
    if value == 0:
        raise ParameterError("valuation of 0 is undefined")
    exponent = 0
    while value % s == 0:
        value //= s
        exponent += 1
    return exponent
