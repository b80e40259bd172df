import logging
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..perm_engine import (NotInvariant, NotSubgroup, StabChain, StructurallyInvalid, block_stabilizer,
                           build_chain, set_action_hom)
from ..perm_engine.orbits import block_closure, max_block_system, orbits_on
from .partition import Partition, induced, is_semi_regular, refines

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    level: int
    block: tuple[int, ...]
    reason: str


@dataclass
class ValidationReport:
    valid: bool
    violations: list[Violation] = field(default_factory=list)

    def as_rows(self) -> list[dict]:
        return [{'level': v.level, 'block': ' '.join(str(p + 1) for p in v.block), 'reason': v.reason}
                for v in self.violations]


@dataclass
class PartitionSequence:
    '''Chain {Omega} = B_0 > B_1 > ... > B_m = singletons of group-invariant partitions.'''
    group: StabChain
    chain: list[Partition]
    d: int

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def depth(self) -> int:
        return len(self.chain) - 1

    def check_structure(self):
        n = self.degree
        if not self.chain:
            raise StructurallyInvalid('empty partition chain')
        for partition in self.chain:
            if partition.degree != n or not partition.covers_domain():
                raise StructurallyInvalid(f'partition {partition} does not cover the domain of size {n}')
        if n and len(self.chain[0]) != 1:
            raise StructurallyInvalid('first partition must be the single block {Omega}')
        if not self.chain[-1].is_singletons():
            raise StructurallyInvalid('last partition must consist of singletons')
        for i in range(1, len(self.chain)):
            if not refines(self.chain[i], self.chain[i - 1]) or self.chain[i] == self.chain[i - 1]:
                raise StructurallyInvalid(f'partition {i} does not strictly refine partition {i - 1}')
        for i, partition in enumerate(self.chain):
            if not partition.is_invariant(self.group.strong_gens):
                raise StructurallyInvalid(f'partition {i} is not invariant under the group')

    def sub_blocks(self, level: int, block: Sequence[int]) -> list[tuple[int, ...]]:
        '''B_level[block]: the blocks of partition level lying inside block.'''
        inside = set(block)
        return [b for b in self.chain[level].blocks if b[0] in inside]

    @classmethod
    def from_block_tower(cls, group: StabChain, d: Optional[int] = None) -> 'PartitionSequence':
        '''
        Orbits first (when intransitive), then inside each orbit a tower of maximal
        sub-blocks, so each one-level quotient within a block is primitive.
        '''
        n = group.degree
        gens = group.strong_gens
        orbit_towers = []
        for orb in orbits_on(gens, range(n)):
            levels = []
            current = list(orb)
            while len(current) > 1:
                stab = group if current == orb else block_stabilizer(group, current)
                sub = max_block_system(stab.strong_gens, n, current)
                child = next(b for b in sub if current[0] in b)
                classes = block_closure(gens, n, child)
                inside = set(orb)
                levels.append([c for c in classes if c[0] in inside])
                current = child
            orbit_towers.append((orb, levels))
        chain = [Partition.whole(n)]
        orbits = [orb for orb, _ in orbit_towers]
        if len(orbits) > 1:
            chain.append(Partition(n, orbits))
        height = max((len(levels) for _, levels in orbit_towers), default=0)
        for i in range(height):
            blocks = []
            for orb, levels in orbit_towers:
                if i < len(levels):
                    blocks.extend(levels[i])
                else:
                    blocks.extend([[p] for p in orb])
            partition = Partition(n, blocks)
            if partition != chain[-1]:
                chain.append(partition)
        if n and not chain[-1].is_singletons():
            chain.append(Partition.singletons(n))
        if d is None:
            d = max((cls._sub_count(chain, i, b) for i in range(1, len(chain)) for b in chain[i - 1].blocks),
                    default=1)
        return cls(group, chain, max(d, 1))

    @staticmethod
    def _sub_count(chain: list[Partition], level: int, block: Sequence[int]) -> int:
        inside = set(block)
        return sum(1 for b in chain[level].blocks if b[0] in inside)


def validate_almost_d_ary(seq: PartitionSequence) -> ValidationReport:
    '''
    Per level i and block B of B_{i-1}: |B_i[B]| <= d, or G_B acts semi-regularly on B_i[B].
    Blocks in one group orbit share the verdict, so one representative per orbit is checked.
    '''
    seq.check_structure()
    group = seq.group
    violations = []
    for i in range(1, len(seq.chain)):
        parent = seq.chain[i - 1]
        checked: dict[int, Optional[str]] = {}
        orbit_of_block = _block_orbits(group, parent)
        for block in parent.blocks:
            subs = seq.sub_blocks(i, block)
            if len(subs) <= seq.d:
                continue
            key = orbit_of_block[block[0]]
            if key not in checked:
                stab = block_stabilizer(group, block)
                hom, _ = set_action_hom(stab, [frozenset(b) for b in subs])
                if is_semi_regular(hom.image):
                    checked[key] = None
                else:
                    checked[key] = f'{len(subs)} sub-blocks exceed d={seq.d} and the action is not semi-regular'
            if checked[key] is not None:
                violations.append(Violation(i, block, checked[key]))
    logger.debug('validated sequence of depth %d: %d violations', seq.depth, len(violations))
    return ValidationReport(not violations, violations)


def _block_orbits(group: StabChain, partition: Partition) -> dict[int, int]:
    '''Map each block's minimum to the minimum of the first block in its group orbit.'''
    first_points = [b[0] for b in partition.blocks]
    result = {}
    for block in partition.blocks:
        if block[0] in result:
            continue
        seen = {partition.block_index(block[0])}
        queue = [block]
        for b in queue:
            for g in group.strong_gens:
                j = partition.block_index(g.images[b[0]])
                if j not in seen:
                    seen.add(j)
                    queue.append(partition.blocks[j])
        for j in seen:
            result[first_points[j]] = block[0]
    return result


def restrict_sequence(seq: PartitionSequence, subgroup: StabChain, points: Iterable[int]) -> PartitionSequence:
    '''
    The chain B_0[points] >= ... >= B_m[points] with repeats collapsed, attached to the
    subgroup's action on points; points are renumbered by sorted position.
    '''
    points = sorted(set(points))
    for g in subgroup.strong_gens:
        if not seq.group.contains(g):
            raise NotSubgroup('generator is not an element of the sequence group')
    inside = set(points)
    for g in subgroup.strong_gens:
        if any(g.images[p] not in inside for p in points):
            raise NotInvariant('point set is not invariant under the subgroup')
    position = {p: i for i, p in enumerate(points)}
    gens = [g.restricted(points) for g in subgroup.strong_gens]
    restricted_group = build_chain(gens, len(points))
    chain = []
    for partition in seq.chain:
        blocks = [[position[p] for p in b] for b in induced(partition, points).blocks]
        relabelled = Partition(len(points), blocks)
        if not chain or chain[-1] != relabelled:
            chain.append(relabelled)
    return PartitionSequence(restricted_group, chain, seq.d)
