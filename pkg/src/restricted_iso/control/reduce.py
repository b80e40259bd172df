import logging
from pathlib import Path
from typing import Optional

from ..config import ToolkitConfig
from ..service.group_reduction import reduce_instance
from ..service.perm_engine import RestrictedIsoError
from ..storage import InstanceModel, load_model
from ..utils import get_engine_settings
from .common import failure

logger = logging.getLogger(__name__)


def reduce_process(path: str | Path, d: Optional[int] = None, config: Optional[ToolkitConfig] = None) -> dict:
    '''Both changes of action on a transitive instance; emits the augmented instance.'''
    config = config or ToolkitConfig()
    get_engine_settings().apply(config.solver)
    try:
        inst = load_model(path, InstanceModel).to_instance()
    except (RestrictedIsoError, ValueError) as e:
        return failure('实例解析失败', str(path), e)
    try:
        augmented = reduce_instance(inst.group, inst.x, inst.y, d, config.reduction)
    except RestrictedIsoError as e:
        return failure('群约化失败', str(path), e)
    logger.info('reduced %s: %d points -> %d points', path, inst.degree, augmented.degree)
    return {'status': 'success', 'error_message': '', 'augmented': augmented.to_dict()}
