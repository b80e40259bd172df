from typing import Iterable, Sequence

from ...utils import UnionFind
from .errors import NotTransitive, PointOutOfRange
from .permutation import Permutation


def orbit(gens: Sequence[Permutation], point: int, degree: int) -> list[int]:
    '''Sorted orbit of point under the group generated by gens.'''
    if not 0 <= point < degree:
        raise PointOutOfRange(f'point {point} outside domain of size {degree}')
    seen = {point}
    queue = [point]
    for p in queue:
        for g in gens:
            image = g.images[p]
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


def all_orbits(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    uf = UnionFind(range(degree))
    for g in gens:
        for p, image in enumerate(g.images):
            uf.union(p, image)
    return uf.classes()


def orbits_on(gens: Sequence[Permutation], points: Iterable[int]) -> list[list[int]]:
    '''Orbits inside an invariant subset.'''
    points = list(points)
    uf = UnionFind(points)
    for g in gens:
        for p in points:
            uf.union(p, g.images[p])
    return uf.classes()


def is_transitive(gens: Sequence[Permutation], degree: int, points: Sequence[int] = None) -> bool:
    if points is None:
        points = range(degree)
    points = list(points)
    if len(points) <= 1:
        return True
    return len(orbits_on(gens, points)) == 1


def block_closure(gens: Sequence[Permutation], degree: int, seed: Sequence[int]) -> list[list[int]]:
    '''Finest invariant partition with all of seed in one class.'''
    uf = UnionFind(range(degree))
    pending = []
    first = seed[0]
    for other in seed[1:]:
        if uf.union(first, other):
            pending.append((first, other))
    while pending:
        a, b = pending.pop()
        for g in gens:
            ga, gb = g.images[a], g.images[b]
            if uf.union(ga, gb):
                pending.append((ga, gb))
    return uf.classes()


def _class_of(classes: list[list[int]], point: int) -> list[int]:
    for cls in classes:
        if point in cls:
            return cls
    raise PointOutOfRange(point)


def min_block_system(gens: Sequence[Permutation], degree: int) -> list[list[int]]:
    '''
    A block system on which the group acts primitively: the fewest blocks, each of them
    a maximal proper block. Singletons iff the group is primitive.
    '''
    if degree == 0:
        return []
    if not is_transitive(gens, degree):
        raise NotTransitive('min_block_system needs a transitive group')
    return max_block_system(gens, degree)


def max_block_system(gens: Sequence[Permutation], degree: int, points: Sequence[int] = None) -> list[list[int]]:
    '''
    Block system with maximal proper blocks inside the transitive invariant set points,
    so that the action on the blocks is primitive. A single block for |points| <= 1.
    '''
    points = sorted(range(degree) if points is None else points)
    if len(points) <= 1:
        return [points]
    if not is_transitive(gens, degree, points):
        raise NotTransitive('max_block_system needs a transitive action')
    block = [points[0]]
    grown = True
    while grown:
        grown = False
        for beta in points:
            if beta in block:
                continue
            classes = block_closure(gens, degree, block + [beta])
            candidate = _class_of(classes, points[0])
            if len(candidate) < len(points):
                block = candidate
                grown = True
                break
    classes = block_closure(gens, degree, block)
    inside = set(points)
    return [cls for cls in classes if cls[0] in inside]


def is_block_system(gens: Sequence[Permutation], blocks: Sequence[Sequence[int]]) -> bool:
    index = {}
    for i, block in enumerate(blocks):
        for p in block:
            index[p] = i
    for g in gens:
        for block in blocks:
            targets = {index.get(g.images[p]) for p in block}
            if len(targets) != 1 or None in targets:
                return False
    return True
