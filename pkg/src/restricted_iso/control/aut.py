import logging
from pathlib import Path
from typing import Optional

from ..config import ToolkitConfig
from ..service.perm_engine import RestrictedIsoError
from ..storage import ResultModel, load_isomorphism_input
from .common import failure, make_solver
from .gi import _solve_pair

logger = logging.getLogger(__name__)


def aut_process(path: str | Path, config: Optional[ToolkitConfig] = None) -> dict:
    '''Automorphism group of a graph, hypergraph or structure, as the coset Iso(X, X).'''
    try:
        item = load_isomorphism_input(path)
    except (RestrictedIsoError, ValueError) as e:
        return failure('输入解析失败', str(path), e)
    try:
        coset = _solve_pair(item, item, make_solver(config))
    except RestrictedIsoError as e:
        return failure('自同构群计算失败', str(path), e)
    logger.info('aut %s: order %d', path, coset.order())
    return {'status': 'success', 'error_message': '', 'iso': True, 'result': ResultModel.from_coset(coset)}
