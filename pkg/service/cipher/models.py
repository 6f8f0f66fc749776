"""
암호문/평문 타입
"""
from typing import Any

import gmpy2
from pydantic import BaseModel, ConfigDict, Field, model_validator


class Ciphertext(BaseModel):
    """(Z_n)* 의 원소"""

    model_config = ConfigDict(frozen=True)

    value: int
    modulus: int = Field(gt=2)

    @model_validator(mode="after")
    def _check_unit(self) -> "Ciphertext":
        if not 0 < self.value < self.modulus or gmpy2.gcd(self.value, self.modulus) != 1:
            raise ValueError(f"{self.value} is not a unit modulo {self.modulus}")
        return self

    def __int__(self) -> int:
        return self.value


class Plaintext(BaseModel):
    """Z_r 의 원소 (생성 시 mod r 로 줄임)"""

    model_config = ConfigDict(frozen=True)

    value: int
    modulus: int = Field(gt=1)

    @model_validator(mode="before")
    @classmethod
    def _reduce(cls, data: Any) -> Any:
        if isinstance(data, dict) and "value" in data and "modulus" in data:
            modulus = int(data["modulus"])
            if modulus > 1:
                data = {**data, "value": int(data["value"]) % modulus}
        return data

    def __int__(self) -> int:
        return self.value
