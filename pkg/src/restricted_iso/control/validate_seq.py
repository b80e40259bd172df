import logging
from pathlib import Path

from ..service.partition_lattice import validate_almost_d_ary
from ..service.perm_engine import RestrictedIsoError
from ..storage import GroupModel, SequenceModel, load_model
from .common import failure

logger = logging.getLogger(__name__)


def validate_seq_process(group_path: str | Path, sequence_path: str | Path) -> dict:
    try:
        group = load_model(group_path, GroupModel).to_chain()
        seq = load_model(sequence_path, SequenceModel).to_sequence(group)
        report = validate_almost_d_ary(seq)
    except (RestrictedIsoError, ValueError) as e:
        return failure('划分序列校验失败', f'{group_path}, {sequence_path}', e)
    logger.info('sequence of depth %d with d=%d: %d violations', seq.depth, seq.d, len(report.violations))
    return {'status': 'success', 'error_message': '', 'valid': report.valid, 'd': seq.d,
            'violations': report.as_rows()}
