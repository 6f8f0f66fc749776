"""
카드 동등성 판정

E(m) = E(m1)/E(m2) 를 만들고 각 참가자가 비밀 alpha_i 로 E(m)^alpha_i 를 공개한 뒤,
신뢰하는 딜러가 곱 E(m)^alpha 를 복호화해 m*alpha mod r 이 0 인지 본다.

flawed: 한 라운드, 공개값을 그대로 노출
fixed : 공개값마다 임의의 E(0) 를 곱하고, 독립적인 두 라운드가 모두 0 일 때만 같다고 판정
"""
import logging
from typing import List, Optional, Sequence, Tuple

from service.apps.models import CardEqualityTranscript, CardMode, CardRound
from service.cipher.backends import DecryptionBackend
from service.cipher.models import Ciphertext
from service.cipher.scheme import decrypt, encrypt, hom_add, hom_scale, hom_sub, rerandomize
from service.exceptions import ParameterError
from service.keys.models import PrivateKey, PublicKey
from service.numtheory.arithmetic import mod_pow
from service.numtheory.primes import Rng

logger = logging.getLogger("apps.cards")

DEFAULT_PLAYERS = 3
FIXED_MODE_ROUNDS = 2


def _play_round(
    pk: PublicKey,
    sk: PrivateKey,
    m1: int,
    m2: int,
    alphas: Sequence[int],
    rerandomized: bool,
    rng: Rng,
    backend: DecryptionBackend | str,
) -> CardRound:
    difference = hom_sub(pk, encrypt(pk, m1, rng), encrypt(pk, m2, rng))

    disclosed: List[Ciphertext] = []
    for alpha in alphas:
        element = hom_scale(pk, difference, alpha)
        if rerandomized:
            element = rerandomize(pk, element, rng)
        disclosed.append(element)

    combined = Ciphertext(value=1, modulus=pk.n)
    for element in disclosed:
        combined = hom_add(pk, combined, element)

    return CardRound(
        difference=difference.value,
        alphas=tuple(alphas),
        disclosed=tuple(element.value for element in disclosed),
        rerandomized=rerandomized,
        joint_result=decrypt(sk, combined, backend).value,
    )


def run_card_equality(
    pk: PublicKey,
    sk: PrivateKey,
    m1: int,
    m2: int,
    mode: CardMode | str,
    rng: Rng,
    forced_alphas: Optional[Sequence[int]] = None,
    players: int = DEFAULT_PLAYERS,
    backend: DecryptionBackend | str = DecryptionBackend.POHLIG_HELLMAN,
) -> CardEqualityTranscript:
    """
    Args:
        m1, m2: Z_r 의 카드
        forced_alphas: 첫 라운드에서 쓸 alpha_i (없으면 (0, r) 에서 균등 추출)
        players: 참가자 수
    """
    mode = CardMode(mode)
    r = pk.r.value

    if not pk.r.is_prime:
        logger.warning("r=%d is not prime, equality checks may report false matches", r)
    if not (0 <= m1 < r and 0 <= m2 < r):
        raise ParameterError(f"cards must lie in [0, {r})")
    if forced_alphas is not None:
        players = len(forced_alphas)
        if any(not 0 < alpha < r for alpha in forced_alphas):
            raise ParameterError(f"alphas must lie in (0, {r})")
    if players < 1:
        raise ParameterError(f"players must be >= 1, got {players}")

    round_count = FIXED_MODE_ROUNDS if mode is CardMode.FIXED else 1
    rounds = []
    for index in range(round_count):
        if index == 0 and forced_alphas is not None:
            alphas = list(forced_alphas)
        else:
            alphas = [rng.randrange(1, r) for _ in range(players)]
        rounds.append(_play_round(pk, sk, m1, m2, alphas, mode is CardMode.FIXED, rng, backend))

    transcript = CardEqualityTranscript(
        mode=mode,
        n=pk.n,
        r=r,
        rounds=tuple(rounds),
        verdict_equal=all(round_.joint_result == 0 for round_ in rounds),
    )
    logger.info("Card equality (%s): %s", mode.value, transcript.summary_line())
    return transcript


def recover_alphas(transcript: CardEqualityTranscript, round_index: int = 0) -> Tuple[Optional[int], ...]:
    """
    공개된 E(m) 과 E(m)^alpha_i 만으로 alpha_i 를 1..r-1 전수 탐색

    찾지 못한 참가자는 None.
    """
    round_ = transcript.rounds[round_index]
    powers = {}
    for exponent in range(transcript.r - 1, 0, -1):
        powers[mod_pow(round_.difference, exponent, transcript.n)] = exponent
    recovered = tuple(powers.get(element) for element in round_.disclosed)
    logger.debug("Recovered %d of %d exponents", sum(a is not None for a in recovered), len(recovered))
    return recovered
