from datetime import datetime
from typing import Optional

from ..config import ToolkitConfig
from ..service.luks_solver import LuksSolver


def failure(kind: str, source: str, e: Exception) -> dict:
    return {
        'status': 'failure',
        'error_message': {
            '错误类型': kind,
            '输入': source,
            '异常': type(e).__name__,
            '错误时间': datetime.now().strftime('%Y-%m-%d %H:%M:%S'),
            '错误信息': str(e),
        },
    }


def make_solver(config: Optional[ToolkitConfig]) -> LuksSolver:
    return LuksSolver(config or ToolkitConfig())
