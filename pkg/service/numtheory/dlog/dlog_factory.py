"""
이산 로그 팩토리
전략 이름에 따라 적절한 풀이기를 생성
"""

from typing import Dict
import logging

from service.exceptions import ParameterError
from service.numtheory.dlog.base_dlog import BaseDLog, DLogStrategy
from service.numtheory.dlog.bsgs_dlog import BabyStepGiantStepDLog
from service.numtheory.dlog.exhaustive_dlog import ExhaustiveDLog
from service.numtheory.dlog.pohlig_hellman_dlog import PohligHellmanDLog
from service.numtheory.factored import FactoredInteger

logger = logging.getLogger("numtheory.dlog.factory")


class DLogFactory:
    """이산 로그 풀이기 팩토리"""

    STRATEGIES = {
        DLogStrategy.EXHAUSTIVE: ExhaustiveDLog,
        DLogStrategy.BSGS: BabyStepGiantStepDLog,
        DLogStrategy.POHLIG_HELLMAN: PohligHellmanDLog,
    }

    @classmethod
    def create_solver(
        cls, base: int, modulus: int, order: FactoredInteger, strategy: DLogStrategy | str
    ) -> BaseDLog:
        try:
            strategy = DLogStrategy(strategy)
        except ValueError as e:
            available = [s.value for s in cls.STRATEGIES]
            raise ParameterError(f"Unsupported dlog strategy: {strategy}. Available: {available}") from e

        solver = cls.STRATEGIES[strategy](base, modulus, order)
        logger.debug("Created %s solver for order %d", strategy.value, order.value)
        return solver

    @classmethod
    def get_available_strategies(cls) -> Dict[str, str]:
        """
        사용 가능한 전략 목록 반환

        Returns:
            전략명과 설명
        """
        return {
            DLogStrategy.EXHAUSTIVE.value: "Exhaustive search (reference)",
            DLogStrategy.BSGS.value: "Baby-step giant-step, O(sqrt(order))",
            DLogStrategy.POHLIG_HELLMAN.value: "Pohlig-Hellman over prime powers + CRT",
        }


def dlog(
    base: int,
    target: int,
    modulus: int,
    order: FactoredInteger,
    strategy: DLogStrategy | str = DLogStrategy.POHLIG_HELLMAN,
) -> int:
    """base^e = target mod modulus 인 가장 작은 e >= 0"""
    return DLogFactory.create_solver(base, modulus, order, strategy).solve(target)
