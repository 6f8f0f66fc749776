"""
이산 로그 전략 모듈
"""

from .base_dlog import BaseDLog, DLogStrategy
from .bsgs_dlog import BabyStepGiantStepDLog, BabyStepTable
from .dlog_factory import DLogFactory, dlog
from .exhaustive_dlog import ExhaustiveDLog
from .pohlig_hellman_dlog import PohligHellmanDLog

__all__ = [
    "BaseDLog",
    "DLogStrategy",
    "BabyStepTable",
    "BabyStepGiantStepDLog",
    "ExhaustiveDLog",
    "PohligHellmanDLog",
    "DLogFactory",
    "dlog",
]
