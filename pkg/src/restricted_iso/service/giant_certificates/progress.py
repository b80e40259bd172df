import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

from ..iso_applications.structures import relational_structure_iso
from ..perm_engine import (NoMapping, Permutation, StabChain, restrict_hom, set_transporter,
                           setwise_stabilizer)
from .aggregation import AggregateKind, AggregateOutcome
from .giant_rep import GiantRep

logger = logging.getLogger(__name__)


def find_structure(solver, agg: AggregateOutcome, rep: GiantRep,
                   structure_iso: Optional[Callable] = None) -> list[tuple[StabChain, Permutation]]:
    '''
    Cosets H_j*h_j = {g : first structure^(g^phi) = j-th structure of the second string};
    Iso_G(x1, x2) lies in their union.
    '''
    if agg.kind != AggregateKind.STRUCTURES or not agg.consistent:
        return []
    structure_iso = structure_iso or solver.structure_iso
    if structure_iso is None:
        structure_iso = relational_structure_iso
        solver = solver.plain()
    phi = rep.hom
    anchor = agg.first.structures[0]
    out = []
    for target in agg.second.structures:
        found = structure_iso(anchor, target, group=rep.image, solver=solver)
        if found.is_empty():
            continue
        out.append((phi.preimage_of_subgroup(found.subgroup), phi.preimage(found.rep)))
    logger.debug('%d of %d structure pairs are isomorphic', len(out), len(agg.second.structures))
    return out


@dataclass
class SymmetryReduction:
    '''Iso_G(x1, x2) = union over j of <K_1, G_j> g_j, where G_j g_j = Iso over subgroup * reps[j].'''
    subgroup: StabChain
    reps: list[Permutation]
    symmetry: StabChain


def find_symmetry(agg: AggregateOutcome, rep: GiantRep) -> SymmetryReduction:
    phi = rep.hom
    image = rep.image
    delta1, delta2 = agg.first.delta, agg.second.delta
    transporter = set_transporter(image, delta1, delta2)
    if transporter is None:
        raise NoMapping('no element of the image maps the first symmetric set onto the second')
    g = phi.preimage(transporter)
    subgroup = phi.preimage_of_subgroup(image.pointwise_stabilizer(delta1))
    reps = [g]
    on_delta = restrict_hom(setwise_stabilizer(image, delta1), delta1)
    size = len(delta1)
    if size >= 2 and 2 * on_delta.image.order() > math.factorial(size):
        swap = Permutation.from_cycles(size, [[0, 1]])
        tau = phi.preimage(on_delta.preimage(swap))
        reps.append(tau * g)
    return SymmetryReduction(subgroup, reps, agg.first.group)



