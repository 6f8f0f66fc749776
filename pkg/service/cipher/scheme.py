"""
Benaloh 암호화, 영 판정, 복호화, 준동형 연산
"""
import logging

import gmpy2

from service.cipher.backends import DecryptionBackend, DecryptionBackendFactory
from service.cipher.models import Ciphertext, Plaintext
from service.exceptions import ParameterError
from service.keys.models import PrivateKey, PublicKey
from service.numtheory.arithmetic import mod_inverse, mod_pow, random_unit
from service.numtheory.primes import Rng

logger = logging.getLogger("cipher.scheme")


def _message_value(pk: PublicKey, m: int | Plaintext) -> int:
    if isinstance(m, Plaintext):
        if m.modulus != pk.r.value:
            raise ParameterError(f"plaintext modulus {m.modulus} does not match r={pk.r.value}")
        return m.value
    if not 0 <= m < pk.r.value:
        raise ParameterError(f"message {m} is outside [0, {pk.r.value})")
    return m


def _check_modulus(n: int, *ciphertexts: Ciphertext) -> None:
    for c in ciphertexts:
        if c.modulus != n:
            raise ParameterError(f"ciphertext modulus {c.modulus} does not match key modulus {n}")


def encrypt_with_nonce(pk: PublicKey, m: int | Plaintext, u: int) -> Ciphertext:
    """y^m * u^r mod n"""
    message = _message_value(pk, m)
    if gmpy2.gcd(u, pk.n) != 1:
        raise ParameterError(f"nonce {u} is not a unit modulo n")
    value = mod_pow(pk.y, message, pk.n) * mod_pow(u, pk.r.value, pk.n) % pk.n
    return Ciphertext(value=value, modulus=pk.n)


def encrypt(pk: PublicKey, m: int | Plaintext, rng: Rng) -> Ciphertext:
    """(Z_n)* 에서 균등하게 뽑은 u 로 암호화"""
    return encrypt_with_nonce(pk, m, random_unit(pk.n, rng))


def is_encryption_of_zero(sk: PrivateKey, c: Ciphertext) -> bool:
    """c^(phi/r) = 1 mod n (r 과 q-1 이 서로소가 아닌 키는 c^((p-1)/r) = 1 mod p)"""
    _check_modulus(sk.n, c)
    exponent, modulus = sk.zero_test
    return mod_pow(c.value, exponent, modulus) == 1


def decrypt(
    sk: PrivateKey, c: Ciphertext, backend: DecryptionBackend | str = DecryptionBackend.POHLIG_HELLMAN
) -> Plaintext:
    """
    암호문 복호화

    결함 있는 키에서는 exhaustive 백엔드만 "가장 작은 m" 을 보장한다.

    Raises:
        InvalidCiphertextError: 어떤 m < r 도 맞지 않는 경우
    """
    return DecryptionBackendFactory.get_backend(sk, backend).decrypt(c)


def hom_add(pk: PublicKey, c1: Ciphertext, c2: Ciphertext) -> Ciphertext:
    """E(m1) * E(m2) = E(m1 + m2)"""
    _check_modulus(pk.n, c1, c2)
    return Ciphertext(value=c1.value * c2.value % pk.n, modulus=pk.n)


def hom_sub(pk: PublicKey, c1: Ciphertext, c2: Ciphertext) -> Ciphertext:
    """E(m1) / E(m2) = E(m1 - m2)"""
    _check_modulus(pk.n, c1, c2)
    return Ciphertext(value=c1.value * mod_inverse(c2.value, pk.n) % pk.n, modulus=pk.n)


def hom_scale(pk: PublicKey, c: Ciphertext, k: int) -> Ciphertext:
    """E(m)^k = E(k * m)"""
    _check_modulus(pk.n, c)
    if k < 0:
        raise ParameterError(f"scale factor must be non-negative, got {k}")
    return Ciphertext(value=mod_pow(c.value, k, pk.n), modulus=pk.n)


def rerandomize(pk: PublicKey, c: Ciphertext, rng: Rng, nonce: int | None = None) -> Ciphertext:
    """임의의 E(0) 를 곱해 같은 평문의 새 암호문을 만듦"""
    zero = encrypt(pk, 0, rng) if nonce is None else encrypt_with_nonce(pk, 0, nonce)
    return hom_add(pk, c, zero)
