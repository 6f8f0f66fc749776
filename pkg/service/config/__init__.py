"""
설정 모듈
"""

from .settings import BenalohSettings, get_settings

__all__ = ["BenalohSettings", "get_settings"]
