"""
전수 탐색 이산 로그 (기준 구현)
"""

from service.exceptions import NoSolutionError
from service.numtheory.dlog.base_dlog import BaseDLog, DLogStrategy


class ExhaustiveDLog(BaseDLog):
    """e = 0, 1, 2, ... 순서로 base^e 를 비교"""

    strategy = DLogStrategy.EXHAUSTIVE

    def solve(self, target: int) -> int:
        target %= self.modulus
        accumulator = 1
        for exponent in range(self.order.value):
            if accumulator == target:
                return exponent
            accumulator = accumulator * self.base % self.modulus
        raise NoSolutionError(f"{target} is not a power of {self.base} mod {self.modulus}")
