'''
The transitive, non-semi-regular case: pass to a primitive top quotient, find a giant
representation of a normal subgroup of small index and split the search with local
certificates, or fall back to Luks reduction where the quotient is small.
'''
import logging
import math
from typing import Hashable, Sequence

from ..giant_certificates import (AggregateKind, GiantRep, SymmetryReduction, aggregate_certificates,
                                  find_structure, find_symmetry)
from ..group_reduction import compute_giant_representation
from ..partition_lattice import Partition, PartitionSequence, is_semi_regular
from ..perm_engine import (Coset, GroupHom, NoMapping, RecognitionFailed, StabChain, build_chain, induced_action,
                           right_coset_reps)
from ..perm_engine.orbits import max_block_system
from .union import coset_union

logger = logging.getLogger(__name__)


def primitive_top(group: StabChain, seq: PartitionSequence, hom: GroupHom) -> tuple[PartitionSequence, GroupHom]:
    '''Insert maximal blocks of the top quotient above B_1 so that the new top quotient is primitive.'''
    image = hom.image
    coarse = max_block_system(image.strong_gens, image.degree)
    if len(coarse) == image.degree:
        return seq, hom
    blocks = seq.chain[1].blocks
    merged = Partition(group.degree, [[p for i in c for p in blocks[i]] for c in coarse])
    chain = [seq.chain[0], merged] + list(seq.chain[1:])
    logger.debug('top quotient on %d blocks is imprimitive: %d maximal blocks inserted', image.degree, len(coarse))
    return PartitionSequence(group, chain, seq.d), induced_action(group, merged.blocks)


def default_test_size(d: int, solver) -> int:
    override = solver.config.certificate.t_override
    if override is not None:
        return override
    return max(9, math.ceil(3 + math.log2(max(d, 2))))


def reconstruct_symmetry(solver, reduction: SymmetryReduction, x: tuple, y: tuple, seq: PartitionSequence) -> Coset:
    '''Iso_G(x, y) as the union of <K_1, G_j> g_j over the isomorphism cosets G_j g_j of H * h_j.'''
    n = reduction.subgroup.degree
    parts = [solver.solve_coset(Coset(n, reduction.subgroup, h), x, y, None, seq) for h in reduction.reps]
    union = coset_union(parts, n)
    if union.is_empty():
        return union
    gens = list(reduction.symmetry.strong_gens) + list(union.subgroup.strong_gens)
    return Coset(n, build_chain(gens, n), union.rep)


def _giant_iso(solver, group: StabChain, x: tuple, y: tuple, seq: PartitionSequence, rep: GiantRep, d: int) -> Coset:
    n = group.degree
    config = solver.config.certificate
    t = default_test_size(d, solver)
    if rep.k <= config.kernel_luks_factor * t:
        return solver.standard_luks(group, x, y, None, rep.hom, seq)
    agg = aggregate_certificates(solver, x, y, rep, t, d, config)
    if not agg.consistent:
        logger.debug('certificate aggregates differ: %s / %s', agg.first.case, agg.second.case)
        return Coset.empty(n)
    if agg.kind == AggregateKind.STRUCTURES:
        pairs = find_structure(solver, agg, rep)
        if any(sub.order() == group.order() for sub, _ in pairs):
            logger.debug('structure cosets make no progress: Luks reduction on the giant representation')
            return solver.standard_luks(group, x, y, None, rep.hom, seq)
        solver.tracer.record('structures', n, [sub.order() for sub, _ in pairs])
        return coset_union((solver.solve_coset(Coset(n, sub, h), x, y, None, seq) for sub, h in pairs), n)
    try:
        reduction = find_symmetry(agg, rep)
    except NoMapping:
        return Coset.empty(n)
    solver.tracer.record('symmetry', n, [reduction.subgroup.order()] * len(reduction.reps))
    return reconstruct_symmetry(solver, reduction, x, y, seq)


def certificate_recursion(solver, group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable],
                          seq: PartitionSequence, hom: GroupHom) -> Coset:
    '''
    Iso_G(x, y) for transitive G whose action hom on B_1 is not semi-regular.
    G is split into cosets of G' = {g : g^B_1 in N} and each coset is handled through
    the giant representation of N composed with hom.
    '''
    n = group.degree
    x, y = tuple(x), tuple(y)
    seq, hom = primitive_top(group, seq, hom)
    quotient = hom.image
    if is_semi_regular(quotient):
        return solver.standard_luks(group, x, y, None, hom, seq)
    d = max(seq.d, quotient.degree)
    try:
        found = compute_giant_representation(quotient, d, solver.config.reduction)
    except RecognitionFailed as e:
        logger.warning('no giant representation for a quotient of order %d (%s): Luks reduction',
                       quotient.order(), e)
        found = None
    if found is None:
        return solver.standard_luks(group, x, y, None, hom, seq)
    psi = found.rep.hom
    sub = hom.preimage_of_subgroup(found.subgroup)
    rep = GiantRep(GroupHom.from_action(sub, psi.target_degree, lambda g: psi.image_of(hom.image_of(g))))
    sub_seq = PartitionSequence(sub, seq.chain, seq.d)
    parts = []
    for p in right_coset_reps(quotient, found.subgroup):
        h = hom.preimage(p)
        z = tuple(y[h.images[a]] for a in range(n))
        parts.append(_giant_iso(solver, sub, x, z, sub_seq, rep, d).shifted(h))
    solver.tracer.record('giant', n, [rep.k] * len(parts))
    return coset_union(parts, n)
