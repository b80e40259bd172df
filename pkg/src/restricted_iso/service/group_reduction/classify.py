import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ...config import ReductionConfig
from ..partition_lattice import Partition, PartitionSequence
from ..perm_engine import (CapExceeded, ClassificationFailed, StabChain, block_stabilizer, format_generators,
                           set_action_hom)
from .johnson import JohnsonRecognition, johnson_recognize
from .socle import socle

logger = logging.getLogger(__name__)


class PrimitiveKind(str, Enum):
    SMALL = 'SMALL'
    JOHNSON_TOWER = 'JOHNSON_TOWER'


@dataclass
class PrimitiveClassification:
    '''
    SMALL, or a socle N with an N-invariant tower chain[0] > ... > chain[-1] whose one-level
    quotients are Johnson actions; recognitions[i] describes the quotient below chain[i].
    '''
    kind: PrimitiveKind
    degree: int
    order: int
    socle: Optional[StabChain] = None
    chain: list[Partition] = field(default_factory=list)
    recognitions: list[JohnsonRecognition] = field(default_factory=list)

    @property
    def m(self) -> Optional[int]:
        return self.recognitions[0].m if self.recognitions else None

    @property
    def t(self) -> Optional[int]:
        return self.recognitions[0].t if self.recognitions else None

    def to_dict(self) -> dict:
        report = {'kind': self.kind.value, 'degree': self.degree, 'order': self.order}
        if self.kind == PrimitiveKind.JOHNSON_TOWER:
            report.update({
                'socle': {'order': self.socle.order(), 'gens': format_generators(self.socle.strong_gens)},
                'chain': [[[p + 1 for p in b] for b in partition.blocks] for partition in self.chain],
                'm': self.m,
                't': self.t,
                'levels': [{'m': rec.m, 't': rec.t} for rec in self.recognitions],
            })
        return report


ClassificationReport = PrimitiveClassification


def size_threshold(n: int, d: int, config: Optional[ReductionConfig] = None) -> float:
    '''n^(c1*log2(d) + c2).'''
    config = config or ReductionConfig()
    return float(n) ** (config.c1 * math.log2(max(d, 1)) + config.c2)


def _johnson_guard(m: int, t: int) -> bool:
    return m > 4 * math.log2(math.comb(m, t))


def classify_primitive(chain: StabChain, d: int, config: Optional[ReductionConfig] = None) -> PrimitiveClassification:
    '''
    SMALL when |G| is within size_threshold(n, d); otherwise the Johnson tower of the socle,
    every quotient recognized and verified. Anything else is a ClassificationFailed.
    '''
    config = config or ReductionConfig()
    n = chain.degree
    order = chain.order()
    small = PrimitiveClassification(PrimitiveKind.SMALL, n, order)
    if order <= size_threshold(n, d, config):
        return small
    try:
        soc = socle(chain, config.socle_cap)
    except CapExceeded as e:
        raise ClassificationFailed(f'socle of a group of order {order}: {e}') from e
    if order // soc.order() > n ** (1 + math.log2(max(d, 1))):
        raise ClassificationFailed(f'socle index {order // soc.order()} is too large for d={d}')
    tower = PartitionSequence.from_block_tower(soc).chain
    recognitions = []
    for level in range(1, len(tower)):
        parent = tower[level - 1].blocks[0]
        subs = [frozenset(b) for b in tower[level].blocks if b[0] in set(parent)]
        stab = soc if level == 1 else block_stabilizer(soc, parent)
        hom, _ = set_action_hom(stab, subs)
        rec = johnson_recognize(hom.image, d, config)
        if rec is None:
            raise ClassificationFailed(f'level {level} of the socle tower ({len(subs)} blocks) is not a Johnson action')
        recognitions.append(rec)
    first = recognitions[0]
    if any((rec.m, rec.t) != (first.m, first.t) for rec in recognitions):
        raise ClassificationFailed('socle tower levels carry different Johnson parameters')
    if config.johnson_guard and not _johnson_guard(first.m, first.t):
        logger.debug('m=%d t=%d fails m > 4 log2 C(m, t): treated as small', first.m, first.t)
        return small
    logger.debug('Johnson tower of depth %d with m=%d t=%d on %d points', len(recognitions), first.m, first.t, n)
    return PrimitiveClassification(PrimitiveKind.JOHNSON_TOWER, n, order, soc, list(tower), recognitions)
