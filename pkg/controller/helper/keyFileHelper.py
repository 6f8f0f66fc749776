"""
키 파일 텍스트 형식

    BENALOH PUBLIC KEY v1 | BENALOH PRIVATE KEY v1
    n=<dec>
    y=<dec>
    r=<dec>
    r_factors=<prime[^exp],...>
    p=<dec>        (개인키만)
    q=<dec>        (개인키만)

모든 줄은 공백 없는 name=value, 마지막 줄 뒤에 개행이 반드시 있어야 한다.
"""
import logging
from pathlib import Path
from typing import List, Union

from pydantic import ValidationError

from controller.helper.controllerHelper import UsageError, parse_decimal, parse_factors
from service.keys.models import PrivateKey, PublicKey
from service.numtheory.factored import format_factors

logger = logging.getLogger("controller.keyfile")

PUBLIC_HEADER = "BENALOH PUBLIC KEY v1"
PRIVATE_HEADER = "BENALOH PRIVATE KEY v1"
PUBLIC_FIELDS = ("n", "y", "r", "r_factors")
PRIVATE_FIELDS = PUBLIC_FIELDS + ("p", "q")

Key = Union[PublicKey, PrivateKey]


class KeyFileFormatError(UsageError):
    """키 파일 텍스트가 형식에 맞지 않음"""


def serialize_key(key: Key) -> str:
    lines = [
        PRIVATE_HEADER if isinstance(key, PrivateKey) else PUBLIC_HEADER,
        f"n={key.n}",
        f"y={key.y}",
        f"r={key.r.value}",
        f"r_factors={format_factors(key.r)}",
    ]
    if isinstance(key, PrivateKey):
        lines += [f"p={key.p}", f"q={key.q}"]
    return "\n".join(lines) + "\n"


def parse_key(text: str) -> Key:
    """
    Raises:
        KeyFileFormatError: 형식이 맞지 않거나 값들이 서로 모순되는 경우
    """
    if not text.endswith("\n"):
        raise KeyFileFormatError("key file must end with a newline")
    lines: List[str] = text[:-1].split("\n")

    header = lines[0]
    if header == PUBLIC_HEADER:
        names = PUBLIC_FIELDS
    elif header == PRIVATE_HEADER:
        names = PRIVATE_FIELDS
    else:
        raise KeyFileFormatError(f"unknown key file header {header!r}")
    if len(lines) != len(names) + 1:
        raise KeyFileFormatError(f"expected {len(names)} fields after the header, got {len(lines) - 1}")

    values = {}
    for expected, line in zip(names, lines[1:]):
        name, sep, value = line.partition("=")
        if not sep or name != expected or value != value.strip():
            raise KeyFileFormatError(f"expected field {expected!r}, got {line!r}")
        values[name] = value

    try:
        n = parse_decimal(values["n"], "n")
        y = parse_decimal(values["y"], "y")
        r = parse_factors(values["r_factors"])
        if r.value != parse_decimal(values["r"], "r"):
            raise KeyFileFormatError(f"r_factors multiply to {r.value}, not r={values['r']}")
        if header == PUBLIC_HEADER:
            return PublicKey(n=n, y=y, r=r)
        sk = PrivateKey(p=parse_decimal(values["p"], "p"), q=parse_decimal(values["q"], "q"), r=r, y=y)
    except KeyFileFormatError:
        raise
    except (UsageError, ValidationError) as e:
        raise KeyFileFormatError(f"invalid key file: {e}") from e

    if sk.n != n:
        raise KeyFileFormatError(f"n={n} does not equal p*q")
    return sk


def load_key(path: str) -> Key:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read key file {path}: {e}") from e
    return parse_key(text)


def save_key(path: str, key: Key) -> None:
    Path(path).write_text(serialize_key(key), encoding="utf-8")
    logger.info("Wrote %s", path)


def load_private_key(path: str) -> PrivateKey:
    key = load_key(path)
    if not isinstance(key, PrivateKey):
        raise UsageError(f"{path} holds a public key, a private key is required")
    return key


def load_public_key(path: str) -> PublicKey:
    """개인키 파일이면 공개 부분만 사용"""
    key = load_key(path)
    return key.public_key if isinstance(key, PrivateKey) else key
