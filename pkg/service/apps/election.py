"""
전자 투표 집계

각 표(0/1)를 암호화해 모두 곱한 뒤 한 번만 복호화한다.
"""
import logging
from typing import Sequence

from service.apps.models import ElectionResult
from service.cipher.backends import DecryptionBackend
from service.cipher.models import Ciphertext
from service.cipher.scheme import decrypt, encrypt, hom_add
from service.exceptions import ParameterError
from service.keys.models import PrivateKey, PublicKey
from service.numtheory.primes import Rng

logger = logging.getLogger("apps.election")


def run_election(
    pk: PublicKey,
    sk: PrivateKey,
    ballots: Sequence[int],
    rng: Rng,
    backend: DecryptionBackend | str = DecryptionBackend.EXHAUSTIVE,
) -> ElectionResult:
    """
    Args:
        ballots: 0 (후보 B) 또는 1 (후보 A), r 이상이어도 허용 (넘침 데모)
    """
    if any(ballot not in (0, 1) for ballot in ballots):
        raise ParameterError("ballots must be 0 or 1")
    if len(ballots) >= pk.r.value:
        logger.warning("%d ballots do not fit into Z_%d, the tally wraps around", len(ballots), pk.r.value)

    product = Ciphertext(value=1, modulus=pk.n)
    for ballot in ballots:
        product = hom_add(pk, product, encrypt(pk, ballot, rng))

    tally_yes = decrypt(sk, product, backend).value
    logger.info("Tallied %d ballots: %d for A", len(ballots), tally_yes)
    return ElectionResult(voters=len(ballots), tally_yes=tally_yes, tally_no=len(ballots) - tally_yes, r=pk.r.value)
