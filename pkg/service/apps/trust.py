"""
비공개 다자간 신뢰도 합산

모든 노드는 같은 r 을 쓰는 자기 키를 가진다. 각 노드는 자기 신뢰도를 나머지 노드 수만큼의
몫으로 나눠 받는 노드의 공개키로 암호화해 보낸다. 받은 노드는 몫들을 준동형으로 더해
부분합을 복호화해 공개하고, 시작 노드가 부분합을 mod r 로 더한다.
결함 있는 키를 가진 노드의 부분합은 mod r' 로 줄어든다.
"""
import logging
from typing import List, Optional

from service.apps.models import TrustDemoResult, TrustScenario, TrustShareSet
from service.audit.auditor import actual_message_space, craft_faulty_y
from service.cipher.backends import DecryptionBackend
from service.cipher.models import Ciphertext
from service.cipher.scheme import decrypt, encrypt, hom_add
from service.exceptions import ParameterError
from service.keys.generator import keygen_with_common_r, with_y
from service.keys.models import ConditionMode
from service.numtheory.factored import FactoredInteger
from service.numtheory.primes import Rng

logger = logging.getLogger("apps.trust")

DEFAULT_COMMON_R = FactoredInteger(value=3**5, factors=((3, 5),))
FAULTY_COLLAPSE_FACTOR = 3
DEFAULT_KEY_BITS = 32


def split_trust(t: int, share_count: int, r: int, rng: Rng) -> TrustShareSet:
    """앞의 share_count-1 개는 mod r 균등 난수, 마지막 몫이 합을 t 로 맞춤"""
    if share_count < 2:
        raise ParameterError(f"share_count must be >= 2, got {share_count}")
    t %= r
    shares = [rng.randrange(r) for _ in range(share_count - 1)]
    shares.append((t - sum(shares)) % r)
    return TrustShareSet(trust=t, shares=tuple(shares), modulus=r)


def _scripted_shares(
    node_count: int, r: int, actual_space: int, faulty: int, scenario: TrustScenario
) -> List[List[int]]:
    """
    모든 신뢰도가 0 인 시나리오의 몫 행렬 shares[sender][recipient]

    sender 하나가 결함 노드에게 큰 몫을 보내고 다른 노드 하나에게 보정 몫을 보낸다.
    extreme 은 결함 노드의 부분합이 r-1, latent 는 r'-1 (< r') 이 된다.
    """
    shares = [[0] * node_count for _ in range(node_count)]
    sender = next(node for node in range(node_count) if node != faulty)
    other = next(node for node in range(node_count) if node not in (sender, faulty))

    to_faulty = r - 1 if scenario is TrustScenario.EXTREME else actual_space - 1
    shares[sender][faulty] = to_faulty
    shares[sender][other] = (-to_faulty) % r
    return shares


def run_trust_demo(
    node_count: int,
    rng: Rng,
    common_r: Optional[FactoredInteger] = None,
    faulty_node: Optional[int] = None,
    scenario: TrustScenario | str = TrustScenario.RANDOM,
    bits: int = DEFAULT_KEY_BITS,
    backend: DecryptionBackend | str = DecryptionBackend.EXHAUSTIVE,
) -> TrustDemoResult:
    """
    Args:
        node_count: 노드 수 (3 이상)
        common_r: 모든 키가 공유하는 r (기본값 3^5)
        faulty_node: 결함 키(붕괴 인자 3)를 받을 노드 번호
        scenario: random | extreme | latent (뒤의 둘은 faulty_node 필요)
    """
    scenario = TrustScenario(scenario)
    r_factored = DEFAULT_COMMON_R if common_r is None else common_r
    r = r_factored.value

    if node_count < 3:
        raise ParameterError(f"node_count must be >= 3, got {node_count}")
    if faulty_node is not None:
        if not 0 <= faulty_node < node_count:
            raise ParameterError(f"faulty_node {faulty_node} is not in [0, {node_count})")
        if r % FAULTY_COLLAPSE_FACTOR:
            raise ParameterError(f"r={r} is not divisible by {FAULTY_COLLAPSE_FACTOR}")
    if scenario is not TrustScenario.RANDOM and faulty_node is None:
        raise ParameterError(f"scenario {scenario.value} needs a faulty node")

    keys = [keygen_with_common_r(r_factored, bits, ConditionMode.CORRECTED, rng) for _ in range(node_count)]
    actual_space = r
    if faulty_node is not None:
        _, sk = keys[faulty_node]
        faulty_sk = with_y(sk, craft_faulty_y(sk, sk.y, FAULTY_COLLAPSE_FACTOR))
        keys[faulty_node] = (faulty_sk.public_key, faulty_sk)
        actual_space = actual_message_space(faulty_sk.y, faulty_sk)
        logger.info("Node %d holds a faulty key with r'=%d", faulty_node, actual_space)

    if scenario is TrustScenario.RANDOM:
        trusts = [rng.randrange(r) for _ in range(node_count)]
        shares = [[0] * node_count for _ in range(node_count)]
        for sender, trust in enumerate(trusts):
            recipients = [node for node in range(node_count) if node != sender]
            split = split_trust(trust, len(recipients), r, rng)
            for recipient, share in zip(recipients, split.shares):
                shares[sender][recipient] = share
    else:
        trusts = [0] * node_count
        shares = _scripted_shares(node_count, r, actual_space, faulty_node, scenario)

    intended = []
    reported = []
    for recipient in range(node_count):
        pk, sk = keys[recipient]
        partial = Ciphertext(value=1, modulus=pk.n)
        for sender in range(node_count):
            if sender != recipient:
                partial = hom_add(pk, partial, encrypt(pk, shares[sender][recipient], rng))
        intended.append(sum(shares[sender][recipient] for sender in range(node_count) if sender != recipient) % r)
        reported.append(decrypt(sk, partial, backend).value)

    result = TrustDemoResult(
        scenario=scenario,
        r=r,
        actual_space=actual_space,
        faulty_node=faulty_node,
        trusts=tuple(trusts),
        intended_partials=tuple(intended),
        reported_partials=tuple(reported),
        apparent_total=sum(reported) % r,
        true_total=sum(trusts) % r,
    )
    if result.inflated:
        logger.warning("Apparent trust %d differs from true trust %d", result.apparent_total, result.true_total)
    return result
