from typing import Iterable, Sequence

from ..perm_engine import NotRefinement, StructurallyInvalid, StabChain
from ..perm_engine.orbits import all_orbits


class Partition:
    '''
    Disjoint nonempty blocks, stored sorted by their minimum element.
    A partition covers either the whole domain {0..degree-1} or, after induced(), a subset of it.
    '''
    __slots__ = ('degree', 'blocks', '_block_index')

    def __init__(self, degree: int, blocks: Iterable[Iterable[int]]):
        ordered = sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0] if b else -1)
        index = {}
        for i, block in enumerate(ordered):
            if not block:
                raise StructurallyInvalid('empty block in partition')
            for p in block:
                if not 0 <= p < degree:
                    raise StructurallyInvalid(f'point {p} outside domain of size {degree}')
                if p in index:
                    raise StructurallyInvalid(f'point {p} lies in two blocks')
                index[p] = i
        self.degree = degree
        self.blocks = tuple(ordered)
        self._block_index = index

    @classmethod
    def singletons(cls, degree: int, points: Iterable[int] = None) -> 'Partition':
        points = range(degree) if points is None else points
        return cls(degree, [[p] for p in points])

    @classmethod
    def whole(cls, degree: int, points: Iterable[int] = None) -> 'Partition':
        points = list(range(degree) if points is None else points)
        return cls(degree, [points] if points else [])

    @property
    def domain(self) -> frozenset[int]:
        return frozenset(self._block_index)

    def covers_domain(self) -> bool:
        return len(self._block_index) == self.degree

    def block_of(self, point: int) -> tuple[int, ...]:
        return self.blocks[self._block_index[point]]

    def block_index(self, point: int) -> int:
        return self._block_index[point]

    def is_singletons(self) -> bool:
        return all(len(b) == 1 for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.degree == other.degree and self.blocks == other.blocks

    def __hash__(self) -> int:
        return hash((self.degree, self.blocks))

    def __repr__(self) -> str:
        return 'Partition(%s)' % [[p + 1 for p in b] for b in self.blocks]

    def is_invariant(self, gens: Sequence) -> bool:
        for g in gens:
            for block in self.blocks:
                first = g.images[block[0]]
                if first not in self._block_index:
                    return False
                target = self._block_index[first]
                if any(self._block_index.get(g.images[p]) != target for p in block):
                    return False
        return True

    def relabelled(self, points: Sequence[int]) -> 'Partition':
        '''Blocks restricted to points and renumbered by sorted position.'''
        position = {p: i for i, p in enumerate(sorted(points))}
        return Partition(len(position), [[position[p] for p in b if p in position] for b in self.blocks
                                         if any(p in position for p in b)])


def refines(p: Partition, q: Partition) -> bool:
    '''Every block of p lies inside a block of q.'''
    if p.degree != q.degree or p.domain != q.domain:
        return False
    for block in p.blocks:
        target = q.block_index(block[0])
        if any(q.block_index(x) != target for x in block):
            return False
    return True


def index(p: Partition, q: Partition) -> int:
    '''Largest number of p-blocks inside one q-block.'''
    if not refines(p, q):
        raise NotRefinement('index needs p to refine q')
    counts: dict[int, int] = {}
    for block in p.blocks:
        target = q.block_index(block[0])
        counts[target] = counts.get(target, 0) + 1
    return max(counts.values(), default=0)


def induced(p: Partition, points: Iterable[int]) -> Partition:
    points = set(points)
    if not points:
        raise ValueError('induced partition needs a nonempty point set')
    blocks = [[x for x in b if x in points] for b in p.blocks]
    return Partition(p.degree, [b for b in blocks if b])


def is_semi_regular(chain: StabChain) -> bool:
    '''All point stabilizers trivial, i.e. every orbit has length |G|.'''
    order = chain.order()
    if order == 1:
        return True
    return all(len(orb) == order for orb in all_orbits(chain.strong_gens, chain.degree))


def orbit_partition(chain: StabChain) -> Partition:
    return Partition(chain.degree, all_orbits(chain.strong_gens, chain.degree))
