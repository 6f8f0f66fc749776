"""
명령줄 입력 파싱과 출력

10진수, 소인수 목록(3^2,5), --r 옵션, --backend 선택지를 해석하고
결과를 key=value 줄로 stdout 에 쓴다. 잘못된 입력은 UsageError (종료 코드 2).
"""

import argparse
import logging
import re
import sys
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from service.cipher.backends import DecryptionBackendFactory
from service.keys.models import RMode
from service.numtheory.factored import FactoredInteger, factor_smooth

logger = logging.getLogger("controller.helper")

_DECIMAL = re.compile(r"[0-9]+")
_FACTOR = re.compile(r"([0-9]+)(?:\^([0-9]+))?")


class UsageError(Exception):
    """잘못된 사용법 또는 형식이 맞지 않는 입력 (종료 코드 2)"""


def parse_decimal(text: str, name: str = "value") -> int:
    """음이 아닌 10진수 문자열만 허용"""
    stripped = text.strip()
    if not _DECIMAL.fullmatch(stripped):
        raise UsageError(f"{name} must be a non-negative decimal integer, got {text!r}")
    return int(stripped)


def read_decimals(values: Optional[Sequence[str]], name: str = "value") -> List[int]:
    """
    인자로 받은 값, 없으면 stdin 의 한 줄에 하나씩 적힌 값

    빈 줄은 건너뛴다.
    """
    if values:
        return [parse_decimal(value, name) for value in values]
    lines = [line for line in sys.stdin.read().splitlines() if line.strip()]
    if not lines:
        raise UsageError(f"no {name} given on the command line or stdin")
    return [parse_decimal(line, name) for line in lines]


def parse_factors(text: str) -> FactoredInteger:
    """'3^2,5' 형태의 소인수 목록"""
    factors = []
    for part in text.strip().split(","):
        match = _FACTOR.fullmatch(part)
        if not match:
            raise UsageError(f"malformed factor {part!r} in {text!r}")
        exponent = int(match.group(2)) if match.group(2) else 1
        factors.append((int(match.group(1)), exponent))
    try:
        return FactoredInteger.from_factors(factors)
    except ValidationError as e:
        raise UsageError(f"invalid factorization {text!r}: {e.errors()[0]['msg']}") from e


def parse_r_option(text: str) -> Tuple[RMode, Optional[FactoredInteger], Optional[int]]:
    """max | prescribed:<int> | smooth:<bound>"""
    if text == "max":
        return RMode.ALGORITHM1_MAX, None, None
    kind, _, value = text.partition(":")
    if kind == "prescribed" and value:
        return RMode.PRESCRIBED, factor_smooth(parse_decimal(value, "r")), None
    if kind == "smooth" and value:
        return RMode.SMOOTH_TARGET, None, parse_decimal(value, "smooth bound")
    raise UsageError(f"--r must be max, prescribed:<int> or smooth:<bound>, got {text!r}")


def parse_int_list(text: str, name: str) -> List[int]:
    return [parse_decimal(part, name) for part in text.split(",")]


def write_fields(fields: Iterable[Tuple[str, object]]) -> None:
    for key, value in fields:
        print(f"{key}={value}")


def write_lines(lines: Iterable[object]) -> None:
    for line in lines:
        print(line)


def add_backend_argument(parser: argparse.ArgumentParser, default: Optional[str]) -> None:
    """복호화 팩토리에 등록된 백엔드만 --backend 로 받음"""
    backends = DecryptionBackendFactory.get_available_backends()
    parser.add_argument(
        "--backend",
        choices=list(backends),
        default=default,
        help="; ".join(f"{name}: {description}" for name, description in backends.items()),
    )
