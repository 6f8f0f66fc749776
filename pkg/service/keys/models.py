"""
키 관련 도메인 타입
"""
from enum import Enum
from typing import Optional, Tuple

import gmpy2
from pydantic import BaseModel, ConfigDict, Field, model_validator

from service.numtheory.factored import FactoredInteger


class ConditionMode(str, Enum):
    """y 에 적용하는 조건"""

    ORIGINAL = "original"
    CORRECTED = "corrected"
    BT94 = "bt94"


class RMode(str, Enum):
    """r 을 정하는 방식"""

    ALGORITHM1_MAX = "algorithm1_max"
    PRESCRIBED = "prescribed"
    SMOOTH_TARGET = "smooth_target"


class PublicKey(BaseModel):
    """공개키 (n, y, r)"""

    model_config = ConfigDict(frozen=True)

    n: int = Field(gt=2)
    y: int
    r: FactoredInteger

    @model_validator(mode="after")
    def _check(self) -> "PublicKey":
        if not 0 < self.y < self.n or gmpy2.gcd(self.y, self.n) != 1:
            raise ValueError(f"y={self.y} is not a unit modulo n")
        if not 1 < self.r.value < self.n:
            raise ValueError(f"r={self.r.value} must satisfy 1 < r < n")
        return self


class PrivateKey(BaseModel):
    """
    개인키 (p, q, r, y)

    생성 시에는 기본적인 형태만 확인한다. r 과 p, q 의 관계와 y 조건은
    validate_keypair 가 위반 항목을 이름으로 보고할 수 있도록 남겨 둔다.
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(gt=2)
    q: int = Field(gt=2)
    r: FactoredInteger
    y: int

    @model_validator(mode="after")
    def _check(self) -> "PrivateKey":
        if self.p == self.q:
            raise ValueError("p and q must be distinct")
        n = self.p * self.q
        if not 0 < self.y < n or gmpy2.gcd(self.y, n) != 1:
            raise ValueError(f"y={self.y} is not a unit modulo n")
        if not 1 < self.r.value < n:
            raise ValueError(f"r={self.r.value} must satisfy 1 < r < n")
        return self

    @property
    def n(self) -> int:
        return self.p * self.q

    @property
    def phi(self) -> int:
        return (self.p - 1) * (self.q - 1)

    @property
    def zero_test(self) -> Tuple[int, int]:
        """
        영 판정에 쓰는 (지수, 법)

        보통은 (phi/r, n) 이다. r 과 q-1 이 공통 인수를 가지는 BT'94 키는 mod n 판정이 모호해지므로
        ((p-1)/r, p) 를 쓴다. 엄격한 구조의 키에서는 두 판정이 같은 결과를 낸다.
        """
        r = self.r.value
        if gmpy2.gcd(r, self.q - 1) == 1:
            return self.phi // r, self.n
        return (self.p - 1) // r, self.p

    @property
    def public_key(self) -> PublicKey:
        return PublicKey(n=self.n, y=self.y, r=self.r)


class KeyGenPolicy(BaseModel):
    """키 생성 정책"""

    model_config = ConfigDict(frozen=True)

    bits: int = Field(ge=16)
    condition_mode: ConditionMode = ConditionMode.CORRECTED
    r_mode: RMode = RMode.ALGORITHM1_MAX
    r: Optional[FactoredInteger] = None
    smooth_bound: Optional[int] = Field(default=None, ge=3)

    @model_validator(mode="after")
    def _check(self) -> "KeyGenPolicy":
        if self.r_mode is RMode.PRESCRIBED and self.r is None:
            raise ValueError("prescribed r_mode needs r")
        if self.r_mode is RMode.SMOOTH_TARGET and self.smooth_bound is None:
            raise ValueError("smooth_target r_mode needs smooth_bound")
        return self
