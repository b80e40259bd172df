import logging
from pathlib import Path
from typing import Optional

from ..config import ToolkitConfig
from ..service.giant_certificates import GiantRep, local_certificates
from ..service.perm_engine import PreconditionViolated, RestrictedIsoError
from ..storage import CertificateModel, CertifyModel, load_model
from .common import failure, make_solver

logger = logging.getLogger(__name__)


def certify_process(path: str | Path, config: Optional[ToolkitConfig] = None) -> dict:
    try:
        model = load_model(path, CertifyModel)
        rep = GiantRep(model.to_hom())
        if not rep.hom.check_sampled():
            raise PreconditionViolated('generator images do not define a homomorphism')
        if not rep.is_valid():
            raise PreconditionViolated(f'image of phi does not contain Alt({rep.k})')
    except (RestrictedIsoError, ValueError) as e:
        return failure('证书输入解析失败', str(path), e)
    solver = make_solver(config)
    try:
        outcome = local_certificates(solver, [_hashable(s) for s in model.x], rep, model.points, model.d)
    except RestrictedIsoError as e:
        return failure('局部证书计算失败', str(path), e)
    logger.info('certify %s: test set %s is %s', path, model.test_set, outcome.kind.value)
    return {'status': 'success', 'error_message': '', 'certificate': CertificateModel(**outcome.to_dict())}


def _hashable(symbol):
    return tuple(symbol) if isinstance(symbol, list) else symbol
