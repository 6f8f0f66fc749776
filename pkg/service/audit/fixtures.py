"""
고정 예제 키

p = 241, q = 179, r = 15, y = 27 은 원래 조건을 통과하지만
s = 3 에서 수정된 조건을 통과하지 못해 평문 공간이 Z_5 로 줄어든다.
"""
from service.keys.generator import KeyPair
from service.keys.models import PrivateKey
from service.numtheory.factored import FactoredInteger

COUNTEREXAMPLE_P = 241
COUNTEREXAMPLE_Q = 179
COUNTEREXAMPLE_R = FactoredInteger(value=15, factors=((3, 1), (5, 1)))
COUNTEREXAMPLE_Y = 27


def counterexample_keypair() -> KeyPair:
    sk = PrivateKey(p=COUNTEREXAMPLE_P, q=COUNTEREXAMPLE_Q, r=COUNTEREXAMPLE_R, y=COUNTEREXAMPLE_Y)
    return sk.public_key, sk
