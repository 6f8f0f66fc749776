"""
명령줄 라우터: 각 컨트롤러의 하위 명령을 하나의 파서로 모은다
"""
import argparse

from controller import auditController, cipherController, demoController, keyController


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="benaloh",
        description="Benaloh dense probabilistic encryption with key auditing",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    keyController.register(subparsers)
    cipherController.register(subparsers)
    auditController.register(subparsers)
    demoController.register(subparsers)
    return parser
