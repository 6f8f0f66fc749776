"""
이산 로그 전략의 기본 추상 클래스
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Dict
import logging

from service.exceptions import InconsistentOrderError, ParameterError
from service.numtheory.arithmetic import mod_pow
from service.numtheory.factored import FactoredInteger

logger = logging.getLogger("numtheory.dlog")


class DLogStrategy(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BSGS = "bsgs"
    POHLIG_HELLMAN = "pohlig_hellman"


class BaseDLog(ABC):
    """위수를 아는 부분군에서 base^e = target 인 가장 작은 e >= 0 을 찾는 전략"""

    strategy = None

    def __init__(self, base: int, modulus: int, order: FactoredInteger):
        """
        Args:
            base: 생성원 (위수가 order.value 의 약수여야 함)
            modulus: 법 (2 이상)
            order: base 위수의 상한 (소인수분해 포함)
        """
        if modulus < 2:
            raise ParameterError(f"modulus must be >= 2, got {modulus}")
        self.modulus = modulus
        self.base = base % modulus
        self.order = order

        if mod_pow(self.base, order.value, modulus) != 1:
            raise InconsistentOrderError(f"base {self.base} has order not dividing {order.value} mod {modulus}")

    @abstractmethod
    def solve(self, target: int) -> int:
        """
        base^e = target 인 가장 작은 e (0 <= e < order.value)

        Raises:
            NoSolutionError: target 이 base 가 생성하는 부분군에 없음
        """
        raise NotImplementedError

    def get_strategy_info(self) -> Dict[str, Any]:
        return {
            "strategy": self.strategy.value if self.strategy else "unknown",
            "modulus_bits": self.modulus.bit_length(),
            "order": self.order.value,
        }
