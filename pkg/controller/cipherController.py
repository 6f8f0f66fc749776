"""
encrypt, decrypt, hom 명령

암호문과 평문은 한 줄에 하나씩 10진수로 주고받는다.
"""
import argparse
import logging

from controller.helper.controllerHelper import UsageError, add_backend_argument, read_decimals, write_lines
from controller.helper.keyFileHelper import load_private_key, load_public_key
from controller.helper.singletonHelper import get_app_settings, get_rng
from service.cipher.models import Ciphertext
from service.cipher.scheme import decrypt, encrypt, encrypt_with_nonce, hom_add, hom_scale, hom_sub

logger = logging.getLogger("controller.cipher")


def encrypt_command(args: argparse.Namespace) -> None:
    pk = load_public_key(args.key)
    rng = get_rng(args.seed)
    outputs = []
    for message in read_decimals(args.messages, "message"):
        if args.nonce is not None:
            c = encrypt_with_nonce(pk, message, args.nonce)
        else:
            c = encrypt(pk, message, rng)
        outputs.append(c.value)
    write_lines(outputs)


def decrypt_command(args: argparse.Namespace) -> None:
    sk = load_private_key(args.key)
    backend = args.backend or get_app_settings().default_backend
    values = read_decimals(args.ciphertexts, "ciphertext")
    write_lines(decrypt(sk, Ciphertext(value=value, modulus=sk.n), backend).value for value in values)


def hom_command(args: argparse.Namespace) -> None:
    pk = load_public_key(args.key)
    ciphertexts = [Ciphertext(value=value, modulus=pk.n) for value in read_decimals(args.ciphertexts, "ciphertext")]

    if args.operation == "add":
        result = ciphertexts[0]
        for c in ciphertexts[1:]:
            result = hom_add(pk, result, c)
        write_lines([result.value])
    elif args.operation == "sub":
        if len(ciphertexts) != 2:
            raise UsageError(f"hom sub takes exactly two ciphertexts, got {len(ciphertexts)}")
        write_lines([hom_sub(pk, ciphertexts[0], ciphertexts[1]).value])
    else:
        if args.k is None:
            raise UsageError("hom scale needs --k")
        write_lines(hom_scale(pk, c, args.k).value for c in ciphertexts)


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("encrypt", help="encrypt messages (args or stdin)")
    parser.add_argument("--key", required=True, help="public or private key file")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--nonce", type=int, default=None, help="fixed nonce u (unit mod n)")
    parser.add_argument("messages", nargs="*")
    parser.set_defaults(func=encrypt_command)

    parser = subparsers.add_parser("decrypt", help="decrypt ciphertexts (args or stdin)")
    parser.add_argument("--key", required=True, help="private key file")
    add_backend_argument(parser, default=None)
    parser.add_argument("ciphertexts", nargs="*")
    parser.set_defaults(func=decrypt_command)

    parser = subparsers.add_parser("hom", help="homomorphic operations on ciphertexts")
    parser.add_argument("operation", choices=["add", "sub", "scale"])
    parser.add_argument("--key", required=True, help="public or private key file")
    parser.add_argument("--k", type=int, default=None, help="scale factor for 'scale'")
    parser.add_argument("ciphertexts", nargs="*")
    parser.set_defaults(func=hom_command)
