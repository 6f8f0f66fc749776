"""
응용 데모: 전자 투표, 다자간 신뢰도, 카드 동등성
"""

from .cards import recover_alphas, run_card_equality
from .election import run_election
from .models import (
    CardEqualityTranscript,
    CardMode,
    CardRound,
    ElectionResult,
    TrustDemoResult,
    TrustScenario,
    TrustShareSet,
)
from .trust import DEFAULT_COMMON_R, split_trust, run_trust_demo

__all__ = [
    "ElectionResult",
    "TrustShareSet",
    "TrustScenario",
    "TrustDemoResult",
    "CardMode",
    "CardRound",
    "CardEqualityTranscript",
    "run_election",
    "split_trust",
    "run_trust_demo",
    "DEFAULT_COMMON_R",
    "run_card_equality",
    "recover_alphas",
]
