import random

import gmpy2
import pytest
from pydantic import ValidationError

from service.audit import audit_key
from service.cipher import decrypt, encrypt, is_encryption_of_zero
from service.exceptions import ParameterError
from service.keys import (
    ConditionMode,
    KeyGenPolicy,
    PrivateKey,
    RMode,
    check_structure,
    corrected_failing_primes,
    keygen,
    keygen_with_common_r,
    original_condition_holds,
    sample_y,
    validate_keypair,
    y_condition_holds,
)
from service.numtheory import FactoredInteger, mod_pow

R15 = FactoredInteger.from_factors([(3, 1), (5, 1)])
R243 = FactoredInteger.from_factors([(3, 5)])


class TestValidateKeypair:
    def test_counterexample_passes_original(self, counterexample):
        _, sk = counterexample
        assert validate_keypair(sk, ConditionMode.ORIGINAL).ok

    def test_counterexample_fails_corrected_at_three(self, counterexample):
        _, sk = counterexample
        result = validate_keypair(sk, ConditionMode.CORRECTED)
        assert not result
        assert result.reason == "y^(phi/s) = 1 mod n for s = 3"

    def test_counterexample_fails_bt94_at_three(self, counterexample):
        _, sk = counterexample
        assert check_structure(sk, ConditionMode.BT94).ok
        result = validate_keypair(sk, ConditionMode.BT94)
        assert result.reason == "y^((p-1)/s) = 1 mod p for s = 3"

    def test_even_r(self):
        sk = PrivateKey(p=241, q=179, r=FactoredInteger.from_factors([(2, 4)]), y=7)
        assert validate_keypair(sk, ConditionMode.CORRECTED).reason == "gcd(r, q-1) != 1"

    def test_r_not_dividing(self):
        sk = PrivateKey(p=241, q=179, r=FactoredInteger.from_factors([(7, 1)]), y=7)
        assert validate_keypair(sk, "original").reason == "r does not divide p-1"

    def test_cofactor_shares_prime(self):
        sk = PrivateKey(p=241, q=179, r=FactoredInteger.from_factors([(2, 1), (3, 1)]), y=7)
        assert validate_keypair(sk, "corrected").reason == "gcd(r, (p-1)/r) != 1"

    def test_p_not_prime(self):
        sk = PrivateKey(p=243, q=179, r=FactoredInteger.from_factors([(11, 1)]), y=7)
        assert validate_keypair(sk, "corrected").reason == "p is not prime"

    def test_bt94_relaxed_constraints(self):
        # r = 3: 9 | 240 이 아니므로 r^2 조건은 통과, q-1 = 178 은 3 으로 나누어지지 않음
        sk = PrivateKey(p=241, q=179, r=FactoredInteger.from_factors([(3, 1)]), y=7)
        assert check_structure(sk, "bt94").ok
        sk = PrivateKey(p=241, q=179, r=FactoredInteger.from_factors([(2, 1)]), y=7)
        assert check_structure(sk, "bt94").reason == "r^2 divides p-1"

    def test_construction_rejects_non_unit_y(self):
        with pytest.raises(ValidationError):
            PrivateKey(p=241, q=179, r=R15, y=241)

    def test_construction_rejects_equal_primes(self):
        with pytest.raises(ValidationError):
            PrivateKey(p=241, q=241, r=R15, y=7)


class TestConditions:
    def test_original_accepts_27_corrected_rejects(self, counterexample):
        _, sk = counterexample
        assert y_condition_holds(27, sk, ConditionMode.ORIGINAL)
        assert not y_condition_holds(27, sk, ConditionMode.CORRECTED)
        assert corrected_failing_primes(27, sk) == (3,)

    def test_non_unit_y(self, counterexample):
        _, sk = counterexample
        with pytest.raises(ParameterError):
            original_condition_holds(179, sk)


class TestKeygen:
    @pytest.mark.parametrize("mode", list(ConditionMode))
    def test_algorithm1_max(self, rng, mode):
        for _ in range(5):
            pk, sk = keygen(KeyGenPolicy(bits=32, condition_mode=mode), rng)
            assert validate_keypair(sk, mode).ok
            assert pk == sk.public_key
            assert sk.r.value % 2 == 1

    def test_corrected_keys_pass_every_prime(self, rng):
        for _ in range(10):
            _, sk = keygen(KeyGenPolicy(bits=24, condition_mode="corrected"), rng)
            for s in sk.r.primes:
                assert mod_pow(sk.y, sk.phi // s, sk.n) != 1

    def test_hosting_counterexample_r(self, rng):
        for _ in range(5):
            _, sk = keygen_with_common_r(R15, 16, ConditionMode.ORIGINAL, rng)
            assert sk.p in (211, 241)

    def test_corrected_never_emits_faulty_y(self, rng):
        draft = PrivateKey(p=241, q=179, r=R15, y=1)
        for _ in range(200):
            y = sample_y(draft, ConditionMode.CORRECTED, rng)
            assert y != 27
            assert not corrected_failing_primes(y, draft)

    def test_common_r_gives_distinct_moduli(self, rng):
        _, first = keygen_with_common_r(R243, 32, "corrected", rng)
        _, second = keygen_with_common_r(R243, 32, "corrected", rng)
        assert first.r == second.r == R243
        assert first.n != second.n
        assert validate_keypair(first, "corrected") and validate_keypair(second, "corrected")

    def test_prescribed_r_too_large(self, rng):
        with pytest.raises(ParameterError):
            keygen_with_common_r(R243, 16, "corrected", rng)

    def test_prescribed_even_r(self, rng):
        with pytest.raises(ParameterError):
            keygen_with_common_r(FactoredInteger.from_factors([(2, 1), (3, 1)]), 32, "corrected", rng)

    def test_smooth_target(self, rng):
        policy = KeyGenPolicy(bits=40, r_mode=RMode.SMOOTH_TARGET, smooth_bound=50)
        for _ in range(5):
            _, sk = keygen(policy, rng)
            assert all(s <= 50 for s in sk.r.primes)
            assert validate_keypair(sk, "corrected").ok

    def test_deterministic_under_seed(self):
        policy = KeyGenPolicy(bits=48)
        assert keygen(policy, random.Random(3)) == keygen(policy, random.Random(3))

    def test_policy_validation(self):
        with pytest.raises(ValidationError):
            KeyGenPolicy(bits=8)
        with pytest.raises(ValidationError):
            KeyGenPolicy(bits=32, r_mode=RMode.PRESCRIBED)
        with pytest.raises(ValidationError):
            KeyGenPolicy(bits=32, r_mode=RMode.SMOOTH_TARGET)


def _relaxed_only_key(rng):
    # r 과 q-1 이 공통 소인수를 가지는 키가 나올 때까지 생성
    for _ in range(40):
        _, sk = keygen_with_common_r(R15, 32, ConditionMode.BT94, rng)
        if gmpy2.gcd(sk.q - 1, 15) != 1:
            return sk
    pytest.fail("keygen never produced a key sharing a prime between r and q-1")


class TestRelaxedBt94Keys:
    def test_keygen_reaches_relaxed_parameters(self, rng):
        sk = _relaxed_only_key(rng)
        assert not check_structure(sk, ConditionMode.CORRECTED)
        assert (sk.p - 1) % 15 == 0
        assert (sk.p - 1) % 225 != 0
        assert (sk.q - 1) % 15 != 0
        assert validate_keypair(sk, ConditionMode.BT94).ok

    def test_zero_test_moves_to_p(self, rng):
        sk = _relaxed_only_key(rng)
        assert sk.zero_test == ((sk.p - 1) // 15, sk.p)

    @pytest.mark.parametrize("backend", ["bsgs", "pohlig_hellman", "exhaustive"])
    def test_round_trip(self, rng, backend):
        sk = _relaxed_only_key(rng)
        pk = sk.public_key
        for m in range(15):
            c = encrypt(pk, m, rng)
            assert decrypt(sk, c, backend).value == m
            assert is_encryption_of_zero(sk, c) == (m == 0)

    def test_audit_accepts_relaxed_key(self, rng):
        sk = _relaxed_only_key(rng)
        report = audit_key(sk)
        assert report.passes_bt94
        assert report.passes_corrected
        assert report.actual_space == 15

    def test_strict_keys_keep_mod_n_zero_test(self, counterexample):
        _, sk = counterexample
        assert sk.zero_test == (sk.phi // 15, sk.n)
