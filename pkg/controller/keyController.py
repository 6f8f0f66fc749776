"""
keygen, craft-faulty 명령
"""
import argparse
import logging
import sys

from pydantic import ValidationError

from controller.helper.controllerHelper import UsageError, parse_r_option
from controller.helper.keyFileHelper import load_private_key, save_key, serialize_key
from controller.helper.singletonHelper import get_rng
from service.audit.auditor import actual_message_space, craft_faulty_y
from service.keys.generator import keygen, with_y
from service.keys.models import ConditionMode, KeyGenPolicy

logger = logging.getLogger("controller.key")


def keygen_command(args: argparse.Namespace) -> None:
    r_mode, r, smooth_bound = parse_r_option(args.r)
    try:
        policy = KeyGenPolicy(
            bits=args.bits,
            condition_mode=args.mode,
            r_mode=r_mode,
            r=r,
            smooth_bound=smooth_bound,
        )
    except ValidationError as e:
        error = e.errors()[0]
        field = ".".join(str(part) for part in error["loc"]) or "policy"
        raise UsageError(f"invalid keygen option {field}: {error['msg']}") from e
    pk, sk = keygen(policy, get_rng(args.seed))

    if args.out_prefix:
        save_key(f"{args.out_prefix}.pub", pk)
        save_key(f"{args.out_prefix}.key", sk)
        logger.info("Key pair written with prefix %s", args.out_prefix)
    else:
        sys.stdout.write(serialize_key(sk))


def craft_faulty_command(args: argparse.Namespace) -> None:
    sk = load_private_key(args.key)
    faulty = with_y(sk, craft_faulty_y(sk, sk.y, args.u))
    logger.info("Faulty key has cleartext space %d instead of %d", actual_message_space(faulty.y, faulty), sk.r.value)

    if args.out:
        save_key(args.out, faulty)
    else:
        sys.stdout.write(serialize_key(faulty))


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("keygen", help="generate a key pair")
    parser.add_argument("--bits", type=int, default=64, help="modulus size in bits (>= 16)")
    parser.add_argument("--mode", choices=[m.value for m in ConditionMode], default=ConditionMode.CORRECTED.value)
    parser.add_argument("--r", default="max", help="max | prescribed:<int> | smooth:<bound>")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--out-prefix", default=None, help="write <prefix>.pub and <prefix>.key")
    parser.set_defaults(func=keygen_command)

    parser = subparsers.add_parser("craft-faulty", help="replace y by y^u (undetected by the original condition)")
    parser.add_argument("--key", required=True, help="private key file")
    parser.add_argument("--u", type=int, required=True, help="proper divisor of r")
    parser.add_argument("--out", default=None)
    parser.set_defaults(func=craft_faulty_command)
