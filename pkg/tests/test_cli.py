import io

import pytest

from controller.helper.keyFileHelper import load_private_key, save_key
from main import main
from service.cipher import Ciphertext, decrypt
from service.config.settings import get_settings


@pytest.fixture
def key_file(tmp_path, counterexample):
    _, sk = counterexample
    path = tmp_path / "counterexample.key"
    save_key(str(path), sk)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_keygen_is_deterministic_with_seed(capsys):
    code, first = run(capsys, "keygen", "--bits", "32", "--seed", "7")
    assert code == 0
    _, second = run(capsys, "keygen", "--bits", "32", "--seed", "7")
    assert first == second
    assert first.startswith("BENALOH PRIVATE KEY v1\n")


def test_keygen_writes_key_pair(capsys, tmp_path):
    prefix = tmp_path / "node"
    code, out = run(capsys, "keygen", "--bits", "32", "--r", "prescribed:15", "--seed", "1", "--out-prefix", str(prefix))
    assert code == 0
    assert out == ""
    assert (tmp_path / "node.pub").read_text().startswith("BENALOH PUBLIC KEY v1\n")
    assert load_private_key(str(tmp_path / "node.key")).r.value == 15


def test_keygen_bad_r_option(capsys):
    assert run(capsys, "keygen", "--r", "largest")[0] == 2


def test_keygen_policy_rejection_is_usage_error(capsys):
    assert main(["keygen", "--bits", "8"]) == 2
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "invalid keygen option bits" in captured.err
    assert run(capsys, "keygen", "--bits", "32", "--r", "smooth:2")[0] == 2


def test_unknown_log_level_is_usage_error(capsys, monkeypatch):
    monkeypatch.setenv("BENALOH_LOG_LEVEL", "LOUD")
    get_settings.cache_clear()
    try:
        code = main(["keygen", "--bits", "32"])
        captured = capsys.readouterr()
    finally:
        get_settings.cache_clear()
    assert code == 2
    assert captured.out == ""
    assert "BENALOH_LOG_LEVEL" in captured.err


def test_audit(capsys, key_file):
    code, out = run(capsys, "audit", "--key", key_file)
    assert code == 0
    assert out.splitlines() == [
        "cleartext_space=15",
        "passes_original=true",
        "passes_corrected=false",
        "passes_bt94=false",
        "failing_primes=3",
        "actual_space=5",
        "collapse_factor=3",
    ]


def test_prob(capsys):
    code, out = run(capsys, "prob", "--r-factors", "3,5")
    assert code == 0
    assert out.splitlines() == ["3/7", "0.428571"]


def test_prob_needs_input(capsys):
    assert run(capsys, "prob")[0] == 2
    assert run(capsys, "prob", "--r-factors", "3,x")[0] == 2


def test_census(capsys, key_file):
    code, out = run(capsys, "census", "--key", key_file)
    assert code == 0
    assert out.splitlines() == ["eligible=39872", "faulty=17088", "ratio=3/7"]


def test_encrypt_and_decrypt(capsys, key_file):
    code, out = run(capsys, "encrypt", "--key", key_file, "--nonce", "12", "1")
    assert code == 0
    assert out == "24187\n"
    code, out = run(capsys, "decrypt", "--key", key_file, "--backend", "exhaustive", "24187", "1")
    assert code == 0
    assert out.splitlines() == ["1", "0"]


def test_decrypt_rejects_unregistered_backend(capsys, key_file):
    assert main(["decrypt", "--key", key_file, "--backend", "index_calculus", "24187"]) == 2
    assert "pohlig_hellman" in capsys.readouterr().err


def test_decrypt_from_stdin(capsys, key_file, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("24187\n\n1\n"))
    code, out = run(capsys, "decrypt", "--key", key_file, "--backend", "exhaustive")
    assert code == 0
    assert out.splitlines() == ["1", "0"]


def test_cli_matches_library(capsys, tmp_path, corrected_r15):
    _, sk = corrected_r15
    path = tmp_path / "r15.key"
    save_key(str(path), sk)
    code, out = run(capsys, "encrypt", "--key", str(path), "--seed", "3", *map(str, range(15)))
    assert code == 0
    ciphertexts = out.split()
    assert len(ciphertexts) == 15
    _, decrypted = run(capsys, "decrypt", "--key", str(path), *ciphertexts)
    assert decrypted.split() == [str(m) for m in range(15)]
    for m, value in enumerate(ciphertexts):
        assert decrypt(sk, Ciphertext(value=int(value), modulus=sk.n)).value == m


def test_hom(capsys, key_file):
    _, out = run(capsys, "encrypt", "--key", key_file, "--nonce", "2", "2", "3")
    c1, c2 = out.split()
    _, added = run(capsys, "hom", "add", "--key", key_file, c1, c2)
    _, plain = run(capsys, "decrypt", "--key", key_file, "--backend", "exhaustive", added.strip())
    assert plain == "0\n"
    _, scaled = run(capsys, "hom", "scale", "--key", key_file, "--k", "2", c1)
    _, plain = run(capsys, "decrypt", "--key", key_file, "--backend", "exhaustive", scaled.strip())
    assert plain == "4\n"
    assert run(capsys, "hom", "scale", "--key", key_file, c1)[0] == 2


def test_usage_errors(capsys, key_file):
    assert run(capsys, "decrypt", "--key", key_file, "12ab")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "audit")[0] == 2


def test_domain_errors(capsys, key_file):
    assert run(capsys, "craft-faulty", "--key", key_file, "--u", "4")[0] == 1
    assert run(capsys, "encrypt", "--key", key_file, "15")[0] == 1
    assert run(capsys, "decrypt", "--key", key_file, "241")[0] == 1


def test_craft_faulty(capsys, tmp_path, corrected_r15):
    _, sk = corrected_r15
    path = tmp_path / "r15.key"
    save_key(str(path), sk)
    out_path = tmp_path / "faulty.key"
    assert run(capsys, "craft-faulty", "--key", str(path), "--u", "5", "--out", str(out_path))[0] == 0
    _, out = run(capsys, "audit", "--key", str(out_path))
    assert "actual_space=3" in out.splitlines()
    assert "collapse_factor=5" in out.splitlines()


def test_demo_vote(capsys):
    code, out = run(capsys, "demo", "vote", "--yes", "14", "--no", "0", "--seed", "5")
    assert code == 0
    assert out.splitlines()[-1] == "voters=14 tally_yes=14 tally_no=0 r=15"
    code, out = run(capsys, "demo", "vote", "--yes", "14", "--no", "0", "--faulty", "3", "--seed", "5")
    assert code == 0
    assert out.splitlines()[-1] == "voters=14 tally_yes=4 tally_no=10 r=15"


def test_demo_trust(capsys):
    code, out = run(capsys, "demo", "trust", "--nodes", "4", "--faulty", "1", "--scenario", "extreme", "--seed", "9")
    assert code == 0
    summary = dict(pair.split("=") for pair in out.splitlines()[-1].split())
    assert summary["r"] == "243"
    assert summary["faulty_contribution"] == "80"
    assert summary["honest_total"] == "1"
    assert summary["apparent_total"] == "81"
    assert summary["true_total"] == "0"


def test_demo_cards(capsys):
    code, out = run(capsys, "demo", "cards", "--m1", "3", "--m2", "7", "--alphas", "10,20,23", "--seed", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == "recovered alphas: 10,20,23"
    assert lines[-1] == "mode=flawed r=53 rounds=1 results=0 verdict=equal"
