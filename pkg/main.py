"""
Benaloh CLI
확률적 동형 암호화, 키 감사, 프로토콜 데모를 제공하는 명령줄 도구
"""

import logging
import sys
from typing import Optional, Sequence

from dotenv import load_dotenv
from pydantic import ValidationError

from controller.helper.controllerHelper import UsageError
from controller.router import build_parser
from service.config.settings import get_settings
from service.exceptions import BenalohError

# 환경 변수 로드
load_dotenv()

logger = logging.getLogger("main")

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2


def configure_logging() -> None:
    """
    로그는 stderr 로만 보낸다 (stdout 은 데이터 전용)

    Raises:
        UsageError: BENALOH_LOG_LEVEL 이 알 수 없는 레벨인 경우
    """
    settings = get_settings()
    if settings.debug_mode:
        log_level = logging.DEBUG
    else:
        log_level = logging.getLevelName(settings.log_level.upper())
        if not isinstance(log_level, int):
            raise UsageError(f"unknown log level {settings.log_level!r} in BENALOH_LOG_LEVEL")
    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )
    logger.debug("로그 레벨: %s", logging.getLevelName(log_level))


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()

    try:
        configure_logging()
    except (UsageError, ValidationError) as e:
        # 설정 오류도 사용법 오류로 본다
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 는 사용법 오류에 2, --help 에 0 으로 종료한다
        return e.code if isinstance(e.code, int) else EXIT_USAGE_ERROR

    try:
        args.func(args)
    except UsageError as e:
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE_ERROR
    except (BenalohError, ValidationError) as e:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"{parser.prog}: {e}", file=sys.stderr)
        return EXIT_DOMAIN_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
