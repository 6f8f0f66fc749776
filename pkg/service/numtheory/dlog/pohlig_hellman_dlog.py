"""
Pohlig-Hellman 이산 로그

소인수 거듭제곱 s^k 마다 자릿수 단위로 풀고 중국인의 나머지 정리로 합친다.
각 성분은 base 의 실제 위수에 맞춰 자릿수를 줄이므로 결과는 항상 가장 작은 지수다.
"""
import logging
from dataclasses import dataclass
from typing import List

from sympy.ntheory.modular import crt

from service.exceptions import NoSolutionError
from service.numtheory.arithmetic import mod_inverse, mod_pow, multiplicative_order
from service.numtheory.dlog.base_dlog import BaseDLog, DLogStrategy
from service.numtheory.dlog.bsgs_dlog import BabyStepTable
from service.numtheory.factored import FactoredInteger

logger = logging.getLogger("numtheory.dlog.pohlig_hellman")


@dataclass
class _PrimePowerComponent:
    prime: int
    digits: int
    cofactor: int
    generator: int
    generator_inverse: int
    table: BabyStepTable

    @property
    def modulus(self) -> int:
        return self.prime**self.digits


class PohligHellmanDLog(BaseDLog):
    """매끄러운 위수 부분군용 Pohlig-Hellman"""

    strategy = DLogStrategy.POHLIG_HELLMAN

    def __init__(self, base, modulus, order):
        super().__init__(base, modulus, order)
        self._components: List[_PrimePowerComponent] = []

        for prime, exponent in order.factors:
            cofactor = order.value // prime**exponent
            generator = mod_pow(self.base, cofactor, modulus)
            local_order = multiplicative_order(
                generator, modulus, FactoredInteger(value=prime**exponent, factors=((prime, exponent),))
            )
            digits = 0
            while local_order > 1:
                local_order //= prime
                digits += 1
            gamma = mod_pow(generator, prime ** (digits - 1), modulus) if digits else 1
            self._components.append(
                _PrimePowerComponent(
                    prime=prime,
                    digits=digits,
                    cofactor=cofactor,
                    generator=generator,
                    generator_inverse=mod_inverse(generator, modulus),
                    table=BabyStepTable(gamma, modulus, prime),
                )
            )

    def _solve_component(self, component: _PrimePowerComponent, target: int) -> int:
        if component.digits == 0:
            if target != 1:
                raise NoSolutionError(f"component for s={component.prime} has no solution")
            return 0

        exponent = 0
        for j in range(component.digits):
            shifted = mod_pow(component.generator_inverse, exponent, self.modulus) * target % self.modulus
            projected = mod_pow(shifted, component.prime ** (component.digits - 1 - j), self.modulus)
            digit = component.table.lookup(projected)
            if digit is None:
                raise NoSolutionError(f"digit {j} for s={component.prime} has no solution")
            exponent += digit * component.prime**j
        return exponent

    def solve(self, target: int) -> int:
        target %= self.modulus
        residues = []
        moduli = []
        for component in self._components:
            local_target = mod_pow(target, component.cofactor, self.modulus)
            residue = self._solve_component(component, local_target)
            if component.digits:
                residues.append(residue)
                moduli.append(component.modulus)

        if not moduli:
            solution = 0
        else:
            solution = int(crt(moduli, residues)[0])

        if mod_pow(self.base, solution, self.modulus) != target:
            raise NoSolutionError(f"{target} is not a power of {self.base} mod {self.modulus}")
        return solution

