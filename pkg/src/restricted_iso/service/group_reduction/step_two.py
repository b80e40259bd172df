'''
Second change of action: unfold the Johnson levels of a semi-regular-or-Johnson tower into
subset lattices of [m], and let the group act on the maximal branches of the unfold graph.
'''
import logging
from typing import Hashable, Iterable, Optional, Sequence

from ...config import ReductionConfig
from ..partition_lattice import Partition, PartitionSequence, is_semi_regular
from ..perm_engine import (DomainMismatch, Permutation, RecognitionFailed, StabChain, block_stabilizer, build_chain,
                           set_action_hom)
from .johnson import JohnsonRecognition, johnson_induced_permutation, johnson_recognize, johnson_subsets
from .step_one import AugmentedInstance, reduce_step_one
from .unfold_graph import BlockNode, LatticeNode, Node, UnfoldGraph, build_unfold_graph, maximal_branches

logger = logging.getLogger(__name__)


def _quotient(group: StabChain, seq: PartitionSequence, level: int, block: tuple[int, ...]) -> StabChain:
    parents = seq.chain[level - 1].blocks
    stab = group if len(parents) == 1 else block_stabilizer(group, block)
    hom, _ = set_action_hom(stab, [frozenset(b) for b in seq.sub_blocks(level, block)])
    return hom.image


def recognize_level(group: StabChain, seq: PartitionSequence, level: int, d: Optional[int] = None,
                    config: Optional[ReductionConfig] = None) -> Optional[dict[tuple[int, ...], JohnsonRecognition]]:
    '''
    rho_{level,B} for every block B of the parent partition: one recognition on the first block,
    carried to the others by a group element mapping the first block onto them.
    '''
    parents = seq.chain[level - 1].blocks
    first = parents[0]
    rec = johnson_recognize(_quotient(group, seq, level, first), d, config)
    if rec is None:
        return None
    subs_first = seq.sub_blocks(level, first)
    position = {b: i for i, b in enumerate(subs_first)}
    transversal = group.with_base_prefix([first[0]]).levels[0].transversal if len(parents) > 1 else {}
    result = {first: rec}
    for block in parents[1:]:
        back = ~transversal[block[0]]
        labels = tuple(rec.labels[position[tuple(sorted(back.images[p] for p in b))]]
                       for b in seq.sub_blocks(level, block))
        result[block] = JohnsonRecognition(rec.m, rec.t, labels)
    return result


def select_johnson_levels(group: StabChain, seq: PartitionSequence, d: Optional[int] = None,
                          levels: Optional[Iterable[int]] = None,
                          config: Optional[ReductionConfig] = None) -> tuple[dict, int]:
    '''
    Recognitions for the levels to unfold and the arity of the unfolded sequence.
    Without explicit levels: those that are not semi-regular and exceed d, or, when d is
    not given, every level recognized as a Johnson action on t >= 2 subsets.
    '''
    recognitions = {}
    arity = [1]
    wanted = None if levels is None else set(levels)
    for level in range(1, len(seq.chain)):
        block = seq.chain[level - 1].blocks[0]
        fan_out = len(seq.sub_blocks(level, block))
        if wanted is not None and level not in wanted:
            if not is_semi_regular(_quotient(group, seq, level, block)):
                arity.append(fan_out)
            continue
        if wanted is None:
            if fan_out <= 1 or is_semi_regular(_quotient(group, seq, level, block)):
                continue
            if d is not None and fan_out <= d:
                continue
        found = recognize_level(group, seq, level, d, config)
        if found is None or (wanted is None and d is None and found[block].t < 2):
            if wanted is not None or d is not None:
                raise RecognitionFailed(f'level {level} with {fan_out} blocks is not a Johnson action')
            arity.append(fan_out)
            continue
        recognitions[level] = found
        arity.append(found[block].m)
    return recognitions, max(arity) if d is None else d


class _GraphAction:
    '''g -> g^Gamma on the vertices of the unfold graph, with the induced permutations cached.'''

    def __init__(self, unfold: UnfoldGraph):
        self.unfold = unfold
        self._induced: dict = {}
        self._subsets: dict = {}

    def _subset_index(self, m: int, t: int) -> tuple[list[frozenset[int]], dict[frozenset[int], int]]:
        key = (m, t)
        if key not in self._subsets:
            subsets = johnson_subsets(m, t)
            self._subsets[key] = (subsets, {s: i for i, s in enumerate(subsets)})
        return self._subsets[key]

    def induced(self, g: Permutation, level: int, block: tuple[int, ...], moved: tuple[int, ...]) -> Permutation:
        key = (g, level, block)
        if key in self._induced:
            return self._induced[key]
        seq = self.unfold.seq
        source = self.unfold.recognitions[level][block]
        target = self.unfold.recognitions[level][moved]
        subs = seq.sub_blocks(level, block)
        target_position = {b: i for i, b in enumerate(seq.sub_blocks(level, moved))}
        subsets, index = self._subset_index(source.m, source.t)
        gamma = []
        for label in subsets:
            sub = subs[source.position[label]]
            image = tuple(sorted(g.images[p] for p in sub))
            gamma.append(index[target.labels[target_position[image]]])
        pi = johnson_induced_permutation(Permutation(gamma), source.m, source.t)
        self._induced[key] = pi
        return pi

    def image(self, g: Permutation, node: Node) -> Node:
        moved = tuple(sorted(g.images[p] for p in node.block))
        if isinstance(node, BlockNode):
            return BlockNode(node.level, moved)
        pi = self.induced(g, node.level, node.block, moved)
        return LatticeNode(node.level, moved, tuple(sorted(pi.images[e] for e in node.subset)))


def reduce_step_two(group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable], seq: PartitionSequence,
                    d: Optional[int] = None, levels: Optional[Iterable[int]] = None,
                    config: Optional[ReductionConfig] = None) -> AugmentedInstance:
    '''Points become (alpha, maximal branch ending in {alpha}); blocks are branches sharing a prefix.'''
    n = group.degree
    if len(x) != n or len(y) != n or seq.degree != n:
        raise DomainMismatch(f'strings of length {len(x)}, {len(y)} and a sequence on {seq.degree} points '
                             f'for a domain of size {n}')
    recognitions, arity = select_johnson_levels(group, seq, d, levels, config)
    unfold = build_unfold_graph(seq, recognitions)
    branches = maximal_branches(unfold)
    index = {branch: i for i, branch in enumerate(branches)}
    origin = tuple(branch[-1].block[0] for branch in branches)
    action = _GraphAction(unfold)

    def star(g: Permutation) -> Permutation:
        return Permutation([index[tuple(action.image(g, node) for node in branch)] for branch in branches])

    size = len(branches)
    chain: list[Partition] = []
    for depth in range(len(branches[0])):
        classes: dict[tuple, list[int]] = {}
        for i, branch in enumerate(branches):
            classes.setdefault(branch[:depth + 1], []).append(i)
        partition = Partition(size, classes.values())
        if not chain or chain[-1] != partition:
            chain.append(partition)
    group_star = build_chain([star(g) for g in group.strong_gens], size, known_order=group.order())
    seq_star = PartitionSequence(group_star, chain, arity)
    logger.info('second change of action: %d branches over %d points, %d Johnson levels unfolded',
                size, n, len(recognitions))
    return AugmentedInstance(
        group_star=group_star,
        x_star=tuple(x[a] for a in origin),
        y_star=tuple(y[a] for a in origin),
        seq_star=seq_star,
        origin=origin,
        labels=tuple(branches),
        star=star,
        johnson_levels={level: (recs[seq.chain[level - 1].blocks[0]].m, recs[seq.chain[level - 1].blocks[0]].t)
                        for level, recs in recognitions.items()},
    )


def reduce_instance(group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable], d: Optional[int] = None,
                    config: Optional[ReductionConfig] = None) -> AugmentedInstance:
    '''Both changes of action in turn: an almost d-ary instance equivalent to (group, x, y).'''
    first = reduce_step_one(group, x, y, d, config=config)
    second = reduce_step_two(first.group_star, first.x_star, first.y_star, first.seq_star, d,
                             levels=first.johnson_levels, config=config)
    return AugmentedInstance(
        group_star=second.group_star,
        x_star=second.x_star,
        y_star=second.y_star,
        seq_star=second.seq_star,
        origin=tuple(first.origin[a] for a in second.origin),
        labels=second.labels,
        star=lambda g: second.star(first.star(g)),
        johnson_levels=second.johnson_levels,
    )
