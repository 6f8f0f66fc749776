"""
감사 모듈: 조건 확인, 실제 평문 공간, 결함 y 생성, 결함 확률
"""

from .auditor import (
    actual_message_space,
    audit_key,
    check_bt94_condition,
    check_corrected_condition,
    check_original_condition,
    craft_faulty_y,
)
from .census import census_y
from .fixtures import counterexample_keypair
from .models import AuditReport, CensusResult, ExpansionSurvey, MonteCarloEstimate
from .probability import (
    construct_high_rho_keypair,
    expansion_factor,
    expansion_survey,
    failure_probability_exact,
    failure_probability_montecarlo,
)

__all__ = [
    "AuditReport",
    "CensusResult",
    "ExpansionSurvey",
    "MonteCarloEstimate",
    "check_original_condition",
    "check_corrected_condition",
    "check_bt94_condition",
    "actual_message_space",
    "craft_faulty_y",
    "audit_key",
    "census_y",
    "failure_probability_exact",
    "failure_probability_montecarlo",
    "expansion_factor",
    "expansion_survey",
    "construct_high_rho_keypair",
    "counterexample_keypair",
]
