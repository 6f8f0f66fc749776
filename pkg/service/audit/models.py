"""
감사 결과 타입
"""
from fractions import Fraction
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class AuditReport(BaseModel):
    """
    y 하나에 대한 감사 결과

    cleartext_space 는 r, actual_space 는 실제로 구별되는 평문 공간 크기 r',
    collapse_factor 는 u = r / r' 이다.
    """

    model_config = ConfigDict(frozen=True)

    cleartext_space: int = Field(gt=1)
    passes_original: bool
    passes_corrected: bool
    passes_bt94: bool
    failing_primes: Tuple[int, ...] = ()
    actual_space: int = Field(gt=0)
    collapse_factor: int = Field(gt=0)

    @model_validator(mode="after")
    def _check_consistency(self) -> "AuditReport":
        if self.actual_space * self.collapse_factor != self.cleartext_space:
            raise ValueError("actual_space * collapse_factor must equal cleartext_space")
        if self.passes_corrected == bool(self.failing_primes):
            raise ValueError("passes_corrected must hold exactly when no prime fails")
        if self.passes_corrected != (self.actual_space == self.cleartext_space):
            raise ValueError("passes_corrected must hold exactly when actual_space equals cleartext_space")
        if self.passes_corrected and not self.passes_original:
            raise ValueError("a key passing the corrected condition must pass the original one")
        return self

    def to_fields(self) -> List[Tuple[str, str]]:
        return [
            ("cleartext_space", str(self.cleartext_space)),
            ("passes_original", str(self.passes_original).lower()),
            ("passes_corrected", str(self.passes_corrected).lower()),
            ("passes_bt94", str(self.passes_bt94).lower()),
            ("failing_primes", ",".join(map(str, self.failing_primes))),
            ("actual_space", str(self.actual_space)),
            ("collapse_factor", str(self.collapse_factor)),
        ]


class MonteCarloEstimate(BaseModel):
    model_config = ConfigDict(frozen=True)

    estimate: float
    standard_error: float
    samples: int
    retained: int
    faulty: int


class CensusResult(BaseModel):
    """(Z_n)* 전체에 대한 y 집계"""

    model_config = ConfigDict(frozen=True)

    eligible: int = Field(ge=0)
    faulty: int = Field(ge=0)

    @property
    def ratio(self) -> Fraction:
        if self.eligible == 0:
            return Fraction(0)
        return Fraction(self.faulty, self.eligible)


class ExpansionSurvey(BaseModel):
    model_config = ConfigDict(frozen=True)

    bits: int
    samples: int
    mean_expansion: float
    mean_inverse_ratio: float
