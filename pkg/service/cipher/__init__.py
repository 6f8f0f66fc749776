"""
암호 모듈: 암호화, 복호화 백엔드, 준동형 연산
"""

from .backends import (
    BaseDecryptionBackend,
    DecryptionBackend,
    DecryptionBackendFactory,
    ExhaustiveBackend,
    SubgroupDLogBackend,
)
from .models import Ciphertext, Plaintext
from .scheme import (
    decrypt,
    encrypt,
    encrypt_with_nonce,
    hom_add,
    hom_scale,
    hom_sub,
    is_encryption_of_zero,
    rerandomize,
)

__all__ = [
    "Ciphertext",
    "Plaintext",
    "DecryptionBackend",
    "BaseDecryptionBackend",
    "ExhaustiveBackend",
    "SubgroupDLogBackend",
    "DecryptionBackendFactory",
    "encrypt",
    "encrypt_with_nonce",
    "is_encryption_of_zero",
    "decrypt",
    "hom_add",
    "hom_sub",
    "hom_scale",
    "rerandomize",
]
