import logging
from pathlib import Path
from typing import Optional

from ..config import ToolkitConfig
from ..service.iso_applications import (Graph, Hypergraph, RelationalStructure, graph_iso_bounded_degree,
                                        hypergraph_iso, relational_structure_iso)
from ..service.perm_engine import InstanceFormatError, RestrictedIsoError
from ..storage import ResultModel, load_isomorphism_input
from .common import failure, make_solver

logger = logging.getLogger(__name__)


def _solve_pair(first, second, solver):
    if type(first) is not type(second):
        raise InstanceFormatError(f'cannot compare a {type(first).__name__} with a {type(second).__name__}')
    if isinstance(first, Graph):
        return graph_iso_bounded_degree(first, second, solver)
    if isinstance(first, Hypergraph):
        return hypergraph_iso(first, second, solver)
    if isinstance(first, RelationalStructure):
        return relational_structure_iso(first, second, solver=solver)
    raise InstanceFormatError(f'unsupported input type {type(first).__name__}')


def gi_process(first_path: str | Path, second_path: str | Path, config: Optional[ToolkitConfig] = None) -> dict:
    try:
        first = load_isomorphism_input(first_path)
        second = load_isomorphism_input(second_path)
    except (RestrictedIsoError, ValueError) as e:
        return failure('输入解析失败', f'{first_path}, {second_path}', e)
    try:
        coset = _solve_pair(first, second, make_solver(config))
    except RestrictedIsoError as e:
        return failure('同构求解失败', f'{first_path}, {second_path}', e)
    logger.info('gi %s %s: %s', first_path, second_path, 'ISO' if coset else 'NONISO')
    return {'status': 'success', 'error_message': '', 'iso': bool(coset), 'result': ResultModel.from_coset(coset)}
