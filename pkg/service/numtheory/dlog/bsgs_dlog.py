"""
Baby-step giant-step 이산 로그

O(sqrt(order)) 번의 군 연산. baby-step 표는 한 번 만들어 재사용한다.
"""
import logging
from typing import Dict, Optional

import gmpy2

from service.exceptions import NoSolutionError
from service.numtheory.arithmetic import mod_inverse, mod_pow
from service.numtheory.dlog.base_dlog import BaseDLog, DLogStrategy

logger = logging.getLogger("numtheory.dlog.bsgs")


class BabyStepTable:
    """고정된 (base, modulus, order) 에 대한 baby-step 표"""

    def __init__(self, base: int, modulus: int, order_value: int):
        self.base = base % modulus
        self.modulus = modulus
        self.order_value = order_value
        self.step = int(gmpy2.isqrt(order_value - 1)) + 1

        # 같은 원소가 다시 나오면 처음 지수를 유지해야 가장 작은 e 가 나온다
        self._table: Dict[int, int] = {}
        accumulator = 1
        for j in range(self.step):
            self._table.setdefault(accumulator, j)
            accumulator = accumulator * self.base % modulus

        self._giant = mod_inverse(mod_pow(self.base, self.step, modulus), modulus)
        logger.debug("Built baby-step table of %d entries for order %d", self.step, order_value)

    def lookup(self, target: int) -> Optional[int]:
        """가장 작은 e < order_value, 없으면 None"""
        gamma = target % self.modulus
        for i in range(self.step):
            j = self._table.get(gamma)
            if j is not None:
                exponent = i * self.step + j
                return exponent if exponent < self.order_value else None
            gamma = gamma * self._giant % self.modulus
        return None


class BabyStepGiantStepDLog(BaseDLog):
    """Shanks baby-step giant-step"""

    strategy = DLogStrategy.BSGS

    def __init__(self, base, modulus, order):
        super().__init__(base, modulus, order)
        self.table = BabyStepTable(self.base, modulus, order.value)

    def solve(self, target: int) -> int:
        exponent = self.table.lookup(target)
        if exponent is None:
            raise NoSolutionError(f"{target} is not a power of {self.base} mod {self.modulus}")
        return exponent
