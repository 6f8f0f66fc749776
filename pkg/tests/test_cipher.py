import random

import pytest
from pydantic import ValidationError
from sympy import primitive_root

from service.audit.oracle import rth_residue_set
from service.cipher import (
    Ciphertext,
    DecryptionBackend,
    DecryptionBackendFactory,
    Plaintext,
    decrypt,
    encrypt,
    encrypt_with_nonce,
    hom_add,
    hom_scale,
    hom_sub,
    is_encryption_of_zero,
    rerandomize,
)
from service.exceptions import InvalidCiphertextError, ParameterError
from service.keys import KeyGenPolicy, RMode, keygen
from service.numtheory import mod_pow

BACKENDS = [backend.value for backend in DecryptionBackend]


class TestEncrypt:
    def test_counterexample_collision(self, counterexample):
        pk, _ = counterexample
        assert encrypt_with_nonce(pk, 1, 12).value == 24187
        assert encrypt_with_nonce(pk, 6, 4).value == 24187

    def test_trivial_encryption(self, counterexample):
        pk, _ = counterexample
        assert encrypt_with_nonce(pk, 0, 1).value == 1

    def test_rejects_non_unit_nonce(self, counterexample):
        pk, _ = counterexample
        with pytest.raises(ParameterError):
            encrypt_with_nonce(pk, 1, 241)

    def test_rejects_out_of_range_message(self, counterexample, rng):
        pk, _ = counterexample
        with pytest.raises(ParameterError):
            encrypt(pk, 15, rng)
        with pytest.raises(ParameterError):
            encrypt(pk, -1, rng)

    def test_accepts_plaintext(self, counterexample):
        pk, _ = counterexample
        assert encrypt_with_nonce(pk, Plaintext(value=16, modulus=15), 12).value == 24187
        with pytest.raises(ParameterError):
            encrypt_with_nonce(pk, Plaintext(value=1, modulus=7), 12)

    def test_encryption_is_randomized(self, corrected_r15, rng):
        pk, _ = corrected_r15
        first = encrypt(pk, 3, rng)
        second = encrypt(pk, 3, rng)
        assert first != second

    def test_plaintext_is_reduced(self):
        assert Plaintext(value=17, modulus=15).value == 2

    def test_ciphertext_must_be_unit(self):
        with pytest.raises(ValidationError):
            Ciphertext(value=241, modulus=43139)
        with pytest.raises(ValidationError):
            Ciphertext(value=0, modulus=43139)


class TestZeroTest:
    def test_one_is_zero(self, counterexample):
        _, sk = counterexample
        assert is_encryption_of_zero(sk, Ciphertext(value=1, modulus=sk.n))

    def test_faulty_key_five_looks_like_zero(self, counterexample):
        pk, sk = counterexample
        for u in (2, 3, 12, 1000):
            assert is_encryption_of_zero(sk, encrypt_with_nonce(pk, 5, u))

    def test_soundness_on_corrected_key(self, corrected_r15, rng):
        pk, sk = corrected_r15
        for m in range(15):
            c = encrypt(pk, m, rng)
            assert is_encryption_of_zero(sk, c) == (m == 0)
            assert is_encryption_of_zero(sk, c) == (decrypt(sk, c, "exhaustive").value == 0)


class TestDecrypt:
    @pytest.mark.parametrize("backend", BACKENDS)
    def test_one_decrypts_to_zero(self, counterexample, corrected_r15, backend):
        for _, sk in (counterexample, corrected_r15):
            assert decrypt(sk, Ciphertext(value=1, modulus=sk.n), backend).value == 0

    def test_faulty_key_smallest_message(self, counterexample):
        _, sk = counterexample
        assert decrypt(sk, Ciphertext(value=24187, modulus=sk.n), "exhaustive").value == 1

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_round_trip(self, corrected_r15, rng, backend):
        pk, sk = corrected_r15
        for m in range(15):
            assert decrypt(sk, encrypt(pk, m, rng), backend).value == m

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_invalid_ciphertext_on_faulty_key(self, counterexample, backend):
        _, sk = counterexample
        # 원시근의 (p-1)/15 거듭제곱은 위수 15 라서 위수 5 부분군 밖에 있다
        c = Ciphertext(value=int(primitive_root(sk.p)), modulus=sk.n)
        with pytest.raises(InvalidCiphertextError):
            decrypt(sk, c, backend)

    def test_modulus_mismatch(self, counterexample, corrected_r15):
        _, sk = counterexample
        pk, _ = corrected_r15
        with pytest.raises(ParameterError):
            decrypt(sk, Ciphertext(value=1, modulus=pk.n), "exhaustive")

    def test_unknown_backend(self, counterexample):
        _, sk = counterexample
        with pytest.raises(ParameterError):
            decrypt(sk, Ciphertext(value=1, modulus=sk.n), "index_calculus")

    def test_backend_instances_are_reused(self, counterexample):
        _, sk = counterexample
        first = DecryptionBackendFactory.get_backend(sk, "bsgs")
        assert DecryptionBackendFactory.get_backend(sk, DecryptionBackend.BSGS) is first
        assert first.get_backend_info() == {"backend": "bsgs", "r": 15, "n_bits": 16}

    def test_available_backends_cover_every_backend(self):
        assert set(DecryptionBackendFactory.get_available_backends()) == set(BACKENDS)

    @pytest.mark.slow
    def test_round_trip_many_smooth_keys(self):
        rng = random.Random(99)
        policy = KeyGenPolicy(bits=24, r_mode=RMode.SMOOTH_TARGET, smooth_bound=100)
        for _ in range(30):
            pk, sk = keygen(policy, rng)
            r = sk.r.value
            assert r < 1024
            for m in range(r):
                c = encrypt(pk, m, rng)
                for backend in BACKENDS:
                    assert decrypt(sk, c, backend).value == m
            DecryptionBackendFactory.clear()


class TestHomomorphism:
    def test_add_with_trivial_zero(self, counterexample, rng):
        pk, _ = counterexample
        c = encrypt(pk, 4, rng)
        assert hom_add(pk, encrypt_with_nonce(pk, 0, 1), c) == c

    def test_laws_exhaustive(self, corrected_r15, rng):
        pk, sk = corrected_r15
        encrypted = [encrypt(pk, m, rng) for m in range(15)]
        for a in range(15):
            for b in range(15):
                assert decrypt(sk, hom_add(pk, encrypted[a], encrypted[b])).value == (a + b) % 15
                assert decrypt(sk, hom_sub(pk, encrypted[a], encrypted[b])).value == (a - b) % 15
            for k in range(20):
                assert decrypt(sk, hom_scale(pk, encrypted[a], k)).value == k * a % 15

    def test_scale_edges(self, corrected_r15, rng):
        pk, _ = corrected_r15
        c = encrypt(pk, 7, rng)
        assert hom_scale(pk, c, 0).value == 1
        assert hom_scale(pk, c, 1) == c
        with pytest.raises(ParameterError):
            hom_scale(pk, c, -1)

    def test_modulus_mismatch(self, counterexample, corrected_r15):
        pk, _ = counterexample
        other, _ = corrected_r15
        with pytest.raises(ParameterError):
            hom_add(pk, Ciphertext(value=1, modulus=pk.n), Ciphertext(value=1, modulus=other.n))

    @pytest.mark.parametrize("backend", BACKENDS)
    def test_rerandomize(self, corrected_r15, rng, backend):
        pk, sk = corrected_r15
        for m in range(15):
            c = encrypt(pk, m, rng)
            fresh = rerandomize(pk, c, rng)
            assert fresh != c
            assert decrypt(sk, fresh, backend).value == m

    def test_rerandomize_with_unit_nonce(self, corrected_r15, rng):
        pk, _ = corrected_r15
        c = encrypt(pk, 2, rng)
        assert rerandomize(pk, c, rng, nonce=1) == c


def test_faulty_key_collapses_to_five_classes(counterexample):
    """E(m1) 와 E(m2) 가 같은 집합 <=> y^(m1-m2) 가 r 제곱잉여"""
    _, sk = counterexample
    residues = rth_residue_set(sk)
    classes = []
    for m in range(15):
        for cls in classes:
            if mod_pow(sk.y, (m - cls[0]) % 15, sk.n) in residues:
                cls.append(m)
                break
        else:
            classes.append([m])
    assert len(classes) == 5
    assert all(len(cls) == 3 for cls in classes)
    assert classes[0] == [0, 5, 10]
