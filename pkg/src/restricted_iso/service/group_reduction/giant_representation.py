import logging
import math
from dataclasses import dataclass
from typing import Optional

from ...config import ReductionConfig
from ..giant_certificates import GiantRep
from ..partition_lattice import Partition
from ..perm_engine import (CapExceeded, GiantKind, GroupHom, RecognitionFailed, StabChain, identity_hom,
                           induced_action, is_giant)
from .johnson import johnson_recognize
from .socle import socle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GiantRepresentation:
    '''N <= P of index at most d, an N-invariant partition and psi: N -> S_k giant with kernel N_(blocks).'''
    subgroup: StabChain
    blocks: Partition
    rep: GiantRep

    @property
    def k(self) -> int:
        return self.rep.k


def giant_threshold(d: int) -> int:
    '''ceil(d^(1 + log2 d)); groups below it are handled by Luks reduction.'''
    if d <= 1:
        return 1
    return math.ceil(d ** (1 + math.log2(d)))


def compute_giant_representation(group: StabChain, d: int,
                                 config: Optional[ReductionConfig] = None) -> Optional[GiantRepresentation]:
    '''
    The natural action when the group is a giant, else the ground-set action of a Johnson socle.
    None (too small) below giant_threshold(d); every output condition is checked before returning.
    '''
    config = config or ReductionConfig()
    if group.order() < giant_threshold(d):
        return None
    n = group.degree
    if is_giant(group) != GiantKind.NEITHER:
        found = GiantRepresentation(group, Partition.singletons(n), GiantRep(identity_hom(group)))
    else:
        try:
            soc = socle(group, config.socle_cap)
        except CapExceeded as e:
            raise RecognitionFailed(f'socle needed for a giant representation: {e}') from e
        rec = johnson_recognize(soc, d, config)
        if rec is None:
            raise RecognitionFailed(f'primitive group of order {group.order()} has no Johnson socle')
        found = GiantRepresentation(soc, Partition.singletons(n), GiantRep(GroupHom.from_action(soc, rec.m, rec.induced)))
    _check(group, found, d)
    logger.debug('giant representation of degree %d for a group of order %d', found.k, group.order())
    return found


def _check(group: StabChain, found: GiantRepresentation, d: int):
    subgroup, hom = found.subgroup, found.rep.hom
    if group.order() // subgroup.order() > d:
        raise RecognitionFailed(f'index {group.order() // subgroup.order()} exceeds d={d}')
    if not found.blocks.is_invariant(subgroup.strong_gens):
        raise RecognitionFailed('partition is not invariant under the subgroup')
    if not hom.kernel.same_group(induced_action(subgroup, found.blocks.blocks).kernel):
        raise RecognitionFailed('kernel differs from the pointwise block stabilizer')
    if is_giant(hom.image) == GiantKind.NEITHER:
        raise RecognitionFailed('image is not a giant')
    if found.k < math.log2(max(d, 1)):
        raise RecognitionFailed(f'giant degree {found.k} is below log2(d)')
