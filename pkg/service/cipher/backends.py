"""
복호화 백엔드

exhaustive    : is_encryption_of_zero(y^-m c) 를 m = 0, 1, ... 순서로 확인 (기준 구현, 보통 mod n)
bsgs          : mod p 부분군에서 baby-step giant-step
pohlig_hellman: mod p 부분군에서 Pohlig-Hellman

y^(phi/r) = 1 mod q 이므로 위수 r 부분군은 mod p 에서 찾을 수 있다.
"""
import logging
import threading
from abc import ABC, abstractmethod
from collections import OrderedDict
from enum import Enum
from typing import Any, Dict, Optional, Tuple

from service.cipher.models import Ciphertext, Plaintext
from service.exceptions import InvalidCiphertextError, NoSolutionError, ParameterError
from service.keys.models import PrivateKey
from service.numtheory.arithmetic import mod_inverse, mod_pow
from service.numtheory.dlog import BaseDLog, DLogFactory, DLogStrategy

logger = logging.getLogger("cipher.backend")


class DecryptionBackend(str, Enum):
    EXHAUSTIVE = "exhaustive"
    BSGS = "bsgs"
    POHLIG_HELLMAN = "pohlig_hellman"


class BaseDecryptionBackend(ABC):
    """개인키 하나에 묶인 복호화기"""

    backend = None

    def __init__(self, sk: PrivateKey):
        self.sk = sk

    def _check(self, c: Ciphertext) -> None:
        if c.modulus != self.sk.n:
            raise ParameterError(f"ciphertext modulus {c.modulus} does not match key modulus {self.sk.n}")

    @abstractmethod
    def decrypt(self, c: Ciphertext) -> Plaintext:
        raise NotImplementedError

    def get_backend_info(self) -> Dict[str, Any]:
        return {
            "backend": self.backend.value if self.backend else "unknown",
            "r": self.sk.r.value,
            "n_bits": self.sk.n.bit_length(),
        }


class ExhaustiveBackend(BaseDecryptionBackend):
    """가장 작은 m 을 돌려주는 기준 복호화"""

    backend = DecryptionBackend.EXHAUSTIVE

    def __init__(self, sk: PrivateKey):
        super().__init__(sk)
        self.exponent, self.modulus = sk.zero_test
        self.x_inverse = mod_inverse(mod_pow(sk.y, self.exponent, self.modulus), self.modulus)

    def decrypt(self, c: Ciphertext) -> Plaintext:
        self._check(c)
        modulus = self.modulus
        z = mod_pow(c.value, self.exponent, modulus)
        for m in range(self.sk.r.value):
            if z == 1:
                return Plaintext(value=m, modulus=self.sk.r.value)
            z = z * self.x_inverse % modulus
        raise InvalidCiphertextError(f"no m < {self.sk.r.value} decrypts {c.value}")


class SubgroupDLogBackend(BaseDecryptionBackend):
    """mod p 의 위수 r 부분군에서 이산 로그로 복호화"""

    def __init__(self, sk: PrivateKey, strategy: DLogStrategy):
        super().__init__(sk)
        self.backend = DecryptionBackend(strategy.value)
        self.strategy = strategy
        self.exponent = (sk.p - 1) // sk.r.value
        self.base = mod_pow(sk.y, self.exponent, sk.p)
        self._solver: Optional[BaseDLog] = None
        self._lock = threading.Lock()

    @property
    def solver(self) -> BaseDLog:
        # 표는 처음 복호화할 때 한 번만 만든다
        with self._lock:
            if self._solver is None:
                self._solver = DLogFactory.create_solver(self.base, self.sk.p, self.sk.r, self.strategy)
            return self._solver

    def decrypt(self, c: Ciphertext) -> Plaintext:
        self._check(c)
        target = mod_pow(c.value, self.exponent, self.sk.p)
        try:
            m = self.solver.solve(target)
        except NoSolutionError as e:
            raise InvalidCiphertextError(f"no m < {self.sk.r.value} decrypts {c.value}") from e
        return Plaintext(value=m, modulus=self.sk.r.value)


class DecryptionBackendFactory:
    """키별 복호화 백엔드 팩토리 (최근 사용한 인스턴스를 재사용)"""

    BACKENDS = {
        DecryptionBackend.EXHAUSTIVE: lambda sk: ExhaustiveBackend(sk),
        DecryptionBackend.BSGS: lambda sk: SubgroupDLogBackend(sk, DLogStrategy.BSGS),
        DecryptionBackend.POHLIG_HELLMAN: lambda sk: SubgroupDLogBackend(sk, DLogStrategy.POHLIG_HELLMAN),
    }

    MAX_CACHED = 32

    _instances: "OrderedDict[Tuple[DecryptionBackend, PrivateKey], BaseDecryptionBackend]" = OrderedDict()
    _lock = threading.Lock()

    @classmethod
    def get_backend(cls, sk: PrivateKey, backend: DecryptionBackend | str) -> BaseDecryptionBackend:
        try:
            backend = DecryptionBackend(backend)
        except ValueError as e:
            available = [b.value for b in cls.BACKENDS]
            raise ParameterError(f"Unsupported decryption backend: {backend}. Available: {available}") from e

        cache_key = (backend, sk)
        with cls._lock:
            instance = cls._instances.get(cache_key)
            if instance is not None:
                cls._instances.move_to_end(cache_key)
                return instance

        instance = cls.BACKENDS[backend](sk)
        logger.debug("Created %s backend for r=%d", backend.value, sk.r.value)

        with cls._lock:
            cls._instances[cache_key] = instance
            while len(cls._instances) > cls.MAX_CACHED:
                cls._instances.popitem(last=False)
        return instance

    @classmethod
    def get_available_backends(cls) -> Dict[str, str]:
        return {
            DecryptionBackend.EXHAUSTIVE.value: "Smallest m by the zero-test (reference)",
            DecryptionBackend.BSGS.value: "Baby-step giant-step in the order-r subgroup mod p",
            DecryptionBackend.POHLIG_HELLMAN.value: "Pohlig-Hellman in the order-r subgroup mod p",
        }

    @classmethod
    def clear(cls) -> None:
        with cls._lock:
            cls._instances.clear()
