"""
demo vote | trust | cards 명령

각 데모는 사람이 읽는 기록을 먼저 출력하고 마지막 줄에 key=value 요약을 출력한다.
"""
import argparse
import logging

from controller.helper.controllerHelper import add_backend_argument, parse_int_list, write_lines
from controller.helper.keyFileHelper import load_private_key
from controller.helper.singletonHelper import get_rng
from service.apps.cards import recover_alphas, run_card_equality
from service.apps.election import run_election
from service.apps.models import CardMode, TrustScenario
from service.apps.trust import DEFAULT_KEY_BITS, run_trust_demo
from service.audit.auditor import craft_faulty_y
from service.cipher.backends import DecryptionBackend
from service.keys.generator import keygen_with_common_r, with_y
from service.keys.models import ConditionMode
from service.numtheory.factored import FactoredInteger, factor_smooth

logger = logging.getLogger("controller.demo")

VOTE_R = FactoredInteger(value=15, factors=((3, 1), (5, 1)))
CARD_R = FactoredInteger(value=53, factors=((53, 1),))


def vote_command(args: argparse.Namespace) -> None:
    rng = get_rng(args.seed)
    if args.ballots:
        ballots = parse_int_list(args.ballots, "ballot")
    else:
        ballots = [1] * args.yes + [0] * args.no

    if args.key:
        sk = load_private_key(args.key)
    else:
        _, sk = keygen_with_common_r(VOTE_R, args.bits, ConditionMode.CORRECTED, rng)
    if args.faulty is not None:
        sk = with_y(sk, craft_faulty_y(sk, sk.y, args.faulty))

    result = run_election(sk.public_key, sk, ballots, rng, args.backend)
    write_lines(result.transcript_lines())
    write_lines([result.summary_line()])


def trust_command(args: argparse.Namespace) -> None:
    common_r = factor_smooth(args.r) if args.r else None
    result = run_trust_demo(
        node_count=args.nodes,
        rng=get_rng(args.seed),
        common_r=common_r,
        faulty_node=args.faulty,
        scenario=args.scenario,
        bits=args.bits,
    )
    write_lines(result.transcript_lines())
    write_lines([result.summary_line()])


def cards_command(args: argparse.Namespace) -> None:
    rng = get_rng(args.seed)
    forced = parse_int_list(args.alphas, "alpha") if args.alphas else None
    if args.key:
        sk = load_private_key(args.key)
    else:
        _, sk = keygen_with_common_r(CARD_R, args.bits, ConditionMode.CORRECTED, rng)

    transcript = run_card_equality(sk.public_key, sk, args.m1, args.m2, args.mode, rng, forced_alphas=forced)
    recovered = recover_alphas(transcript)
    write_lines(transcript.transcript_lines())
    write_lines(
        [
            "recovered alphas: " + ",".join("?" if alpha is None else str(alpha) for alpha in recovered),
            transcript.summary_line(),
        ]
    )


def register(subparsers: argparse._SubParsersAction) -> None:
    demo = subparsers.add_parser("demo", help="protocol demonstrations")
    demos = demo.add_subparsers(dest="demo", required=True)

    parser = demos.add_parser("vote", help="encrypted election tally")
    parser.add_argument("--yes", type=int, default=14)
    parser.add_argument("--no", type=int, default=6)
    parser.add_argument("--ballots", default=None, help="comma-separated 0/1 ballots (overrides --yes/--no)")
    parser.add_argument("--faulty", type=int, default=None, metavar="U", help="craft a faulty y with collapse factor U")
    parser.add_argument("--key", default=None, help="private key file (default: fresh key with r=15)")
    parser.add_argument("--bits", type=int, default=DEFAULT_KEY_BITS)
    add_backend_argument(parser, default=DecryptionBackend.EXHAUSTIVE.value)
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(func=vote_command)

    parser = demos.add_parser("trust", help="private multi-party trust sum")
    parser.add_argument("--nodes", type=int, default=5)
    parser.add_argument("--faulty", type=int, default=None, metavar="NODE", help="node holding a faulty key")
    parser.add_argument("--scenario", choices=[s.value for s in TrustScenario], default=TrustScenario.RANDOM.value)
    parser.add_argument("--r", type=int, default=None, help="common r (default 3^5)")
    parser.add_argument("--bits", type=int, default=DEFAULT_KEY_BITS)
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(func=trust_command)

    parser = demos.add_parser("cards", help="card equality test")
    parser.add_argument("--m1", type=int, required=True)
    parser.add_argument("--m2", type=int, required=True)
    parser.add_argument("--mode", choices=[m.value for m in CardMode], default=CardMode.FLAWED.value)
    parser.add_argument("--alphas", default=None, help="comma-separated alphas for the first round")
    parser.add_argument("--key", default=None, help="private key file (default: fresh key with r=53)")
    parser.add_argument("--bits", type=int, default=DEFAULT_KEY_BITS)
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(func=cards_command)
