"""
명령줄 컨트롤러
"""
