import logging
from dataclasses import dataclass
from functools import cached_property

from ..perm_engine import GiantKind, GroupHom, StabChain, is_giant
from ..perm_engine.orbits import orbits_on

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GiantRep:
    '''A homomorphism G -> Sym(k) whose image contains Alt(k).'''
    hom: GroupHom

    @property
    def k(self) -> int:
        return self.hom.target_degree

    @property
    def group(self) -> StabChain:
        return self.hom.source

    @cached_property
    def image(self) -> StabChain:
        return self.hom.image

    def is_valid(self) -> bool:
        return is_giant(self.image) != GiantKind.NEITHER


def affected_points(subgroup: StabChain, rep: GiantRep) -> frozenset[int]:
    '''Points whose stabilizer in subgroup maps to a non-giant; a union of subgroup orbits.'''
    affected = set()
    for orb in orbits_on(subgroup.strong_gens, range(subgroup.degree)):
        stab = subgroup.pointwise_stabilizer([orb[0]])
        image = rep.hom.image_of_subgroup(stab)
        if is_giant(image) == GiantKind.NEITHER:
            affected.update(orb)
    logger.debug('%d affected points under a giant representation of degree %d', len(affected), rep.k)
    return frozenset(affected)
