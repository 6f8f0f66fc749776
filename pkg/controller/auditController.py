"""
audit, prob, census 명령
"""
import argparse
import logging

from controller.helper.controllerHelper import UsageError, parse_factors, write_fields, write_lines
from controller.helper.keyFileHelper import load_private_key
from controller.helper.singletonHelper import get_rng
from service.audit.auditor import audit_key
from service.audit.census import census_y
from service.audit.probability import failure_probability_exact, failure_probability_montecarlo

logger = logging.getLogger("controller.audit")


def audit_command(args: argparse.Namespace) -> None:
    sk = load_private_key(args.key)
    write_fields(audit_key(sk, args.y).to_fields())


def prob_command(args: argparse.Namespace) -> None:
    if args.r_factors:
        r = parse_factors(args.r_factors)
    elif args.key:
        r = load_private_key(args.key).r
    else:
        raise UsageError("prob needs --r-factors or --key")

    rho = failure_probability_exact(r)
    write_lines([rho, f"{float(rho):.6f}"])

    if args.samples:
        if not args.key:
            raise UsageError("--samples needs --key")
        estimate = failure_probability_montecarlo(load_private_key(args.key), args.samples, get_rng(args.seed))
        write_fields(
            [
                ("estimate", f"{estimate.estimate:.6f}"),
                ("standard_error", f"{estimate.standard_error:.6f}"),
                ("retained", estimate.retained),
            ]
        )


def census_command(args: argparse.Namespace) -> None:
    result = census_y(load_private_key(args.key))
    write_fields([("eligible", result.eligible), ("faulty", result.faulty), ("ratio", result.ratio)])


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("audit", help="audit the y parameter of a private key")
    parser.add_argument("--key", required=True, help="private key file")
    parser.add_argument("--y", type=int, default=None, help="audit another y against the same p, q, r")
    parser.set_defaults(func=audit_command)

    parser = subparsers.add_parser("prob", help="failure probability 1 - phi(r)/(r-1)")
    parser.add_argument("--r-factors", default=None, help="e.g. 3,5 or 3^2,5")
    parser.add_argument("--key", default=None, help="private key file (r and Monte Carlo estimate)")
    parser.add_argument("--samples", type=int, default=None, help="Monte Carlo draws (needs --key)")
    parser.add_argument("--seed", type=int, default=None)
    parser.set_defaults(func=prob_command)

    parser = subparsers.add_parser("census", help="count eligible and faulty y over all units (small n only)")
    parser.add_argument("--key", required=True, help="private key file")
    parser.set_defaults(func=census_command)
