import logging
from pathlib import Path
from typing import Optional

from ..config import ToolkitConfig
from ..service.luks_solver import string_iso_main
from ..service.perm_engine import RestrictedIsoError
from ..storage import InstanceModel, ResultModel, load_model
from .common import failure, make_solver

logger = logging.getLogger(__name__)


def si_process(path: str | Path, config: Optional[ToolkitConfig] = None) -> dict:
    try:
        model = load_model(path, InstanceModel)
        inst = model.to_instance()
        inst.check_window()
        seq = model.to_sequence(inst.group)
        if seq is not None:
            seq.check_structure()
    except (RestrictedIsoError, ValueError) as e:
        return failure('实例解析失败', str(path), e)
    try:
        coset = string_iso_main(inst, seq, make_solver(config))
    except RestrictedIsoError as e:
        return failure('字符串同构求解失败', str(path), e)
    logger.info('si %s: %s', path, 'ISO' if coset else 'NONISO')
    return {'status': 'success', 'error_message': '', 'iso': bool(coset), 'result': ResultModel.from_coset(coset)}
