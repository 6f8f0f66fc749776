"""
Benaloh 서비스 공통 예외 정의
"""


class BenalohError(Exception):
    """모든 도메인 오류의 기본 클래스 (CLI 종료 코드 1)"""


class ParameterError(BenalohError, ValueError):
    """잘못된 인자 또는 서로 맞지 않는 파라미터"""


class GuardError(ParameterError):
    """전수 조사 루틴에 비해 입력이 너무 큰 경우"""


class DegenerateParameterError(BenalohError, ValueError):
    """r = 1, 자명한 r', 재시도 한도 초과 등 쓸모 없는 파라미터"""


class InconsistentOrderError(BenalohError, ArithmeticError):
    """x^bound != 1 인데 bound 를 위수 상한으로 사용한 경우"""


class NoSolutionError(BenalohError, ArithmeticError):
    """이산 로그의 target 이 base 가 생성하는 부분군에 없음"""


class InvalidCiphertextError(BenalohError, ValueError):
    """어떤 m < r 도 복호화 조건을 만족하지 않음 (손상된 입력 또는 키 불일치)"""
