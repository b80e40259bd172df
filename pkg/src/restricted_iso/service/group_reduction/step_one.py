'''
First change of action: points are tagged with cosets of the socle of each primitive
quotient, so every one-level quotient of the resulting tower is semi-regular or Johnson.
'''
import logging
from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional, Sequence

from ...config import ReductionConfig
from ..partition_lattice import Partition, PartitionSequence
from ..perm_engine import (CapExceeded, DomainMismatch, NotTransitive, Permutation, StabChain, block_stabilizer,
                           build_chain, format_generators, right_coset_reps, set_action_hom, trivial_chain)
from ..perm_engine.orbits import block_closure, is_transitive, max_block_system, orbit
from .classify import PrimitiveKind, classify_primitive

logger = logging.getLogger(__name__)


@dataclass
class AugmentedInstance:
    '''
    A string isomorphism instance over a new point set, together with the map g -> g* from
    the original group and origin[p], the original point behind each new point p.
    '''
    group_star: StabChain
    x_star: tuple
    y_star: tuple
    seq_star: PartitionSequence
    origin: tuple[int, ...]
    labels: tuple
    star: Callable[[Permutation], Permutation]
    johnson_levels: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.group_star.degree

    def to_dict(self) -> dict:
        return {
            'n': self.degree,
            'gens': format_generators(self.group_star.strong_gens),
            'x': list(self.x_star),
            'y': list(self.y_star),
            'd': self.seq_star.d,
            'partitions': [[[p + 1 for p in b] for b in partition.blocks] for partition in self.seq_star.chain],
            'origin': [p + 1 for p in self.origin],
            'johnson_levels': {str(level): list(mt) for level, mt in sorted(self.johnson_levels.items())},
        }


@dataclass
class _Augmentation:
    group: StabChain
    x: tuple
    y: tuple
    chain: list[Partition]
    johnson: dict[int, tuple[int, int]]
    origin: tuple[int, ...]
    tags: tuple[int, ...]
    star: Callable[[Permutation], Permutation]


def _coset_locator(normal: StabChain, reps: list[Permutation]) -> Callable[[Permutation], int]:
    if normal.is_trivial():
        index = {rep: i for i, rep in enumerate(reps)}
        return index.__getitem__

    def locate(q: Permutation) -> int:
        return next(i for i, rep in enumerate(reps) if normal.contains(q * ~rep))

    return locate


def _restrict_chain(layers: list[list[list[int]]], points: list[int],
                    johnson: dict[int, tuple[int, int]]) -> tuple[list[Partition], dict[int, tuple[int, int]]]:
    '''Layers cut down to points; repeated partitions collapse and Johnson levels follow.'''
    position = {p: i for i, p in enumerate(points)}
    chain: list[Partition] = []
    renumbered = {}
    for level, layer in enumerate(layers):
        blocks = [[position[p] for p in block if p in position] for block in layer]
        partition = Partition(len(points), [b for b in blocks if b])
        if chain and chain[-1] == partition:
            continue
        chain.append(partition)
        if level in johnson:
            renumbered[len(chain) - 1] = johnson[level]
    return chain, renumbered


def _augment(group: StabChain, x: tuple, y: tuple, chain: list[Partition], johnson: dict[int, tuple[int, int]],
             d: Optional[int], config: ReductionConfig) -> _Augmentation:
    n = group.degree
    last = chain[-1]
    blocks = last.blocks
    first = blocks[0]
    stab = group if len(blocks) == 1 else block_stabilizer(group, first)
    seed = next(b for b in max_block_system(stab.strong_gens, n, first) if first[0] in b)
    refined = Partition(n, block_closure(group.strong_gens, n, seed))
    inside = set(first)
    sub_blocks = [frozenset(b) for b in refined.blocks if b[0] in inside]
    hom, _ = set_action_hom(stab, sub_blocks)
    report = classify_primitive(hom.image, d or len(sub_blocks), config)
    normal = report.socle if report.kind == PrimitiveKind.JOHNSON_TOWER else trivial_chain(len(sub_blocks))
    reps = right_coset_reps(hom.image, normal)
    size = len(reps) * n
    if size > config.augment_cap:
        raise CapExceeded(f'{size} tagged points exceed the augmentation cap {config.augment_cap}')
    locate = _coset_locator(normal, reps)
    transversal = group.with_base_prefix([first[0]]).levels[0].transversal
    sigma = [transversal[block[0]] for block in blocks]
    sigma_inv = [~s for s in sigma]

    def full_action(g: Permutation) -> Permutation:
        tables = []
        for i, block in enumerate(blocks):
            j = last.block_index(g.images[block[0]])
            g_hat = hom.image_of(sigma[i] * g * sigma_inv[j])
            tables.append([locate(r * g_hat) for r in reps])
        return Permutation([tables[last.block_index(a)][c] * n + g.images[a]
                            for c in range(len(reps)) for a in range(n)])

    full_gens = [full_action(g) for g in group.strong_gens]
    points = sorted(orbit(full_gens, 0, size))

    def tagged(cosets: Sequence[int], alphas: Sequence[int]) -> list[int]:
        return [c * n + a for c in cosets for a in alphas]

    all_cosets = range(len(reps))
    layers = [[tagged(all_cosets, b) for b in partition.blocks] for partition in chain]
    added = dict(johnson)
    if report.kind == PrimitiveKind.SMALL:
        layers.append([tagged([c], b) for c in all_cosets for b in refined.blocks])
    else:
        layers.append([tagged([c], b) for c in all_cosets for b in blocks])
        members = [sorted(s) for s in sub_blocks]
        for level, (part, rec) in enumerate(zip(report.chain[1:], report.recognitions), start=1):
            layer = []
            for s in sigma:
                for cls in part.blocks:
                    moved = [s.images[p] for i in cls for p in members[i]]
                    layer.extend(tagged([c], moved) for c in all_cosets)
            layers.append(layer)
            added[len(chain) + level] = (rec.m, rec.t)
    new_chain, new_johnson = _restrict_chain(layers, points, added)
    restricted_gens = [g.restricted(points) for g in full_gens]
    new_group = build_chain(restricted_gens, len(points), known_order=group.order())
    logger.debug('tagged %d points with %d cosets (%s quotient on %d blocks): %d points in the orbit',
                 n, len(reps), report.kind.value, len(sub_blocks), len(points))
    return _Augmentation(
        group=new_group,
        x=tuple(x[p % n] for p in points),
        y=tuple(y[p % n] for p in points),
        chain=new_chain,
        johnson=new_johnson,
        origin=tuple(p % n for p in points),
        tags=tuple(p // n for p in points),
        star=lambda g: full_action(g).restricted(points),
    )


def _fan_out(chain: list[Partition]) -> int:
    return max((PartitionSequence._sub_count(chain, i, b) for i in range(1, len(chain))
                for b in chain[i - 1].blocks), default=1)


def reduce_step_one(group: StabChain, x: Sequence[Hashable], y: Sequence[Hashable], d: Optional[int] = None,
                    prefix: Optional[Sequence[Partition]] = None,
                    config: Optional[ReductionConfig] = None) -> AugmentedInstance:
    '''
    Refine by maximal blocks one level at a time, replacing the points of each level by
    coset-tagged copies until the last partition is discrete. prefix, when given, is a
    sequence already satisfying the semi-regular-or-Johnson condition.
    '''
    config = config or ReductionConfig()
    n = group.degree
    if len(x) != n or len(y) != n:
        raise DomainMismatch(f'strings of length {len(x)}, {len(y)} on a domain of size {n}')
    if n and not is_transitive(group.strong_gens, n):
        raise NotTransitive('the first change of action needs a transitive group')
    chain = list(prefix) if prefix else [Partition.whole(n)]
    x, y = tuple(x), tuple(y)
    johnson: dict[int, tuple[int, int]] = {}
    origin = tuple(range(n))
    labels: tuple = tuple(() for _ in range(n))
    stars = []
    while n and not chain[-1].is_singletons():
        step = _augment(group, x, y, chain, johnson, d, config)
        origin = tuple(origin[a] for a in step.origin)
        labels = tuple(labels[a] + (c,) for a, c in zip(step.origin, step.tags))
        stars.append(step.star)
        group, x, y, chain, johnson = step.group, step.x, step.y, step.chain, step.johnson

    def star(g: Permutation) -> Permutation:
        for f in stars:
            g = f(g)
        return g

    seq = PartitionSequence(group, chain, d or _fan_out(chain))
    logger.info('first change of action: %d points, %d levels, %d Johnson', group.degree, seq.depth, len(johnson))
    return AugmentedInstance(group, x, y, seq, origin, labels, star, johnson)
